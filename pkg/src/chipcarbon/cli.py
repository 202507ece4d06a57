"""Command-line front end.

Five subcommands cover the tool's use cases: `estimate` (one platform),
`compare` (FPGA vs ASIC verdict), `sweep` / `heatmap` (design-space
exploration with crossover annotations), and `timeline` (cumulative carbon
with chip-lifetime replacement).

Output is deterministic: identical invocations produce byte-identical bytes.
Tabular numbers are fixed at six significant digits; record output is JSON
with sorted keys and carries the fully resolved parameter echo needed to
reproduce the run. Exit codes: 0 success, 1 validation error, 2 internal
inconsistency.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import replace

import click

from . import __version__
from .breakdown import COMPONENTS, CfpBreakdown
from .errors import ConsistencyError, ParameterError
from .quantities import Duration, Power
from .scenario import (
    Scenario,
    SweepSpec,
    SweepVariable,
    breakdown_report,
    default_grid,
    estimate_platform,
    find_crossovers,
    heatmap,
    sweep,
)
from .store import TestcaseLibrary, builtin_testcases, load_parameters, serialize, validate


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _load(params_path: str | None):
    params = load_parameters(params_path)
    findings = validate(params)
    errors = [f for f in findings if f.severity == "error"]
    for f in findings:
        if f.severity == "warning":
            click.echo(f"warning: {f.path}: {f.message}", err=True)
    if errors:
        lines = "; ".join(f"{f.path}: {f.message}" for f in errors)
        raise ParameterError(lines)
    return params, builtin_testcases(params)


def _record(command: str, inputs: dict, params, results: dict) -> dict:
    return {
        "tool": "chipcarbon",
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "parameters": serialize(params),
        "results": results,
    }


def _emit(text: str, out: str | None) -> None:
    click.echo(text, nl=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _tabular(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def _breakdown_rows(label: str, b: CfpBreakdown) -> list[list[str]]:
    b.check_closure()
    rows = [[label, c, _fmt(getattr(b, c).value)] for c in COMPONENTS]
    rows.append([label, "total", _fmt(b.total.value)])
    return rows


def _parse_sweep(text: str) -> tuple[SweepVariable, tuple[float, ...]]:
    parts = text.split(":")
    if len(parts) not in (1, 4, 5) or (len(parts) == 5 and parts[4] != "log"):
        raise ParameterError(
            f"--sweep must look like VAR:START:STOP:STEPS[:log] or a bare VAR, got {text!r}")
    try:
        variable = SweepVariable(parts[0])
    except ValueError:
        names = ", ".join(v.value for v in SweepVariable)
        raise ParameterError(f"unknown sweep variable {parts[0]!r} (one of: {names})") from None
    if len(parts) == 1:
        return variable, default_grid(variable)
    try:
        start, stop, steps = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError as exc:
        raise ParameterError(f"bad sweep range {text!r}: {exc}") from exc
    if steps < 1:
        raise ParameterError("sweep STEPS must be >= 1")
    if steps == 1:
        values = [start]
    elif len(parts) == 5:
        if start <= 0 or stop <= 0:
            raise ParameterError("log-spaced sweeps need positive bounds")
        la, lb = math.log10(start), math.log10(stop)
        values = [10 ** (la + i * (lb - la) / (steps - 1)) for i in range(steps)]
    else:
        values = [start + i * (stop - start) / (steps - 1) for i in range(steps)]
    if variable in (SweepVariable.NUM_APPS, SweepVariable.APP_VOLUME):
        values = sorted({float(int(round(v))) for v in values})
    return variable, tuple(values)


@click.group()
@click.option("--params", "params_path", envvar="CHIPCARBON_PARAMS", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Parameter document (YAML); bundled defaults when omitted. "
                   "Also read from $CHIPCARBON_PARAMS.")
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx: click.Context, params_path: str | None) -> None:
    """Lifecycle carbon-footprint estimation for FPGA and ASIC accelerators."""
    ctx.obj = params_path


_scenario_options = [
    click.option("--apps", "n_app", default=1, show_default=True, type=int,
                 help="Number of sequential applications."),
    click.option("--lifetime", "lifetime_years", default=2.0, show_default=True, type=float,
                 help="Lifetime of each application, years."),
    click.option("--volume", default=1e6, show_default=True, type=float,
                 help="Deployed units per application."),
    click.option("--horizon", "horizon_years", default=None, type=float,
                 help="Evaluation horizon in years; enables fleet replacement."),
]


def _with(options):
    def wrap(fn):
        for opt in reversed(options):
            fn = opt(fn)
        return fn
    return wrap


_output_options = [
    click.option("--out", default=None, type=click.Path(dir_okay=False),
                 help="Also write the output to this file."),
    click.option("--format", "fmt", default="tabular", show_default=True,
                 type=click.Choice(["tabular", "record"])),
]


@cli.command()
@click.option("--testcase", required=True, help="Industry testcase name.")
@_with(_scenario_options)
@_with(_output_options)
@click.pass_obj
def estimate(params_path, testcase, n_app, lifetime_years, volume, horizon_years, out, fmt):
    """Component breakdown for one named platform."""
    params, library = _load(params_path)
    chip = library.industry(testcase)
    b = estimate_platform(chip, n_app, lifetime_years, int(volume), params, horizon_years)
    b.check_closure(params.options.breakdown_rel_tol)
    inputs = {"testcase": testcase, "apps": n_app, "lifetime_years": lifetime_years,
              "volume": int(volume), "horizon_years": horizon_years}
    if fmt == "record":
        text = json.dumps(_record("estimate", inputs, params, {"breakdown": b.as_dict()}),
                          sort_keys=True, indent=2) + "\n"
    else:
        text = _tabular(["platform", "component", "kg_co2e"], _breakdown_rows(testcase, b))
    _emit(text, out)


@cli.command()
@click.option("--domain", required=True, help="Workload domain (e.g. DNN, ImgProc, Crypto).")
@click.option("--area-ratio", default=None, type=float,
              help="Custom FPGA:ASIC area ratio (with --power-ratio).")
@click.option("--power-ratio", default=None, type=float,
              help="Custom FPGA:ASIC power ratio (with --area-ratio).")
@_with(_scenario_options)
@_with(_output_options)
@click.pass_obj
def compare(params_path, domain, area_ratio, power_ratio, n_app, lifetime_years, volume,
            horizon_years, out, fmt):
    """FPGA vs ASIC totals, their ratio, and the verdict."""
    params, library = _load(params_path)
    if (area_ratio is None) != (power_ratio is None):
        raise ParameterError("--area-ratio and --power-ratio must be given together")
    if area_ratio is not None:
        base = library.domain(domain)
        fpga = replace(base.fpga, area_mm2=base.asic.area_mm2 * area_ratio,
                       peak_power=Power.watts(base.asic.peak_power.value * power_ratio))
        custom = replace(base, area_ratio=area_ratio, power_ratio=power_ratio, fpga=fpga)
        library = TestcaseLibrary(domains={**library.domains, domain: custom},
                                  industry_chips=library.industry_chips)
    scenario = Scenario(domain, n_app=n_app, lifetime_years=lifetime_years,
                        volume=int(volume), horizon_years=horizon_years)
    report = breakdown_report(scenario, params, library)
    report.fpga.check_closure(params.options.breakdown_rel_tol)
    report.asic.check_closure(params.options.breakdown_rel_tol)
    fpga_total = report.fpga.total.value
    asic_total = report.asic.total.value
    ratio = fpga_total / asic_total
    tie_tol = params.options.crossover_tie_rel_tol
    if abs(fpga_total - asic_total) <= tie_tol * max(abs(fpga_total), abs(asic_total), 1.0):
        verdict = "tie"
    else:
        verdict = "FPGA-favored" if fpga_total < asic_total else "ASIC-favored"
    inputs = {"domain": domain, "apps": n_app, "lifetime_years": lifetime_years,
              "volume": int(volume), "horizon_years": horizon_years,
              "area_ratio": area_ratio, "power_ratio": power_ratio}
    results = {"fpga": report.fpga.as_dict(), "asic": report.asic.as_dict(),
               "ratio": ratio, "verdict": verdict}
    if fmt == "record":
        text = json.dumps(_record("compare", inputs, params, results),
                          sort_keys=True, indent=2) + "\n"
    else:
        rows = _breakdown_rows("FPGA", report.fpga) + _breakdown_rows("ASIC", report.asic)
        rows.append(["both", "ratio", _fmt(ratio)])
        rows.append(["both", "verdict", verdict])
        text = _tabular(["platform", "component", "value"], rows)
    _emit(text, out)


def _sweep_table(points, crossovers) -> str:
    header = (["value", "fpga_total", "asic_total"]
              + [f"fpga_{c}" for c in COMPONENTS] + [f"asic_{c}" for c in COMPONENTS])
    rows = []
    for pt in points:
        pt.fpga.check_closure()
        pt.asic.check_closure()
        rows.append([_fmt(pt.value), _fmt(pt.fpga.total.value), _fmt(pt.asic.total.value)]
                    + [_fmt(getattr(pt.fpga, c).value) for c in COMPONENTS]
                    + [_fmt(getattr(pt.asic, c).value) for c in COMPONENTS])
    lines = [",".join(header)] + [",".join(r) for r in rows]
    for c in crossovers:
        lines.append(f"# crossover,{c.kind},{_fmt(c.value)},bracket,"
                     f"{_fmt(c.bracket[0])},{_fmt(c.bracket[1])}")
    return "\n".join(lines) + "\n"


@cli.command(name="sweep")
@click.option("--domain", required=True)
@click.option("--sweep", "sweep_text", required=True,
              help="VAR:START:STOP:STEPS[:log]; VAR is NumApps, AppLifetime, "
                   "AppVolume, or Horizon.")
@_with(_scenario_options)
@_with(_output_options)
@click.pass_obj
def sweep_cmd(params_path, domain, sweep_text, n_app, lifetime_years, volume,
              horizon_years, out, fmt):
    """One-dimensional sweep of both platforms with crossover annotations."""
    params, library = _load(params_path)
    variable, values = _parse_sweep(sweep_text)
    fixed = Scenario(domain, n_app=n_app, lifetime_years=lifetime_years,
                     volume=int(volume), horizon_years=horizon_years)
    points = sweep(SweepSpec(variable, values, fixed), params, library)
    crossovers = find_crossovers(points, variable, params.options.crossover_tie_rel_tol)
    inputs = {"domain": domain, "sweep": sweep_text, "apps": n_app,
              "lifetime_years": lifetime_years, "volume": int(volume),
              "horizon_years": horizon_years}
    if fmt == "record":
        results = {
            "points": [{"value": pt.value, "fpga": pt.fpga.as_dict(),
                        "asic": pt.asic.as_dict()} for pt in points],
            "crossovers": [{"kind": c.kind, "value": c.value, "bracket": list(c.bracket)}
                           for c in crossovers],
        }
        text = json.dumps(_record("sweep", inputs, params, results),
                          sort_keys=True, indent=2) + "\n"
    else:
        text = _sweep_table(points, crossovers)
    _emit(text, out)


@cli.command(name="heatmap")
@click.option("--domain", required=True)
@click.option("--sweep", "sweep_texts", required=True, multiple=True,
              help="Give twice: x axis, then y axis.")
@_with(_scenario_options)
@_with(_output_options)
@click.pass_obj
def heatmap_cmd(params_path, domain, sweep_texts, n_app, lifetime_years, volume,
                horizon_years, out, fmt):
    """Pairwise sweep emitting long-form FPGA:ASIC ratio cells."""
    params, library = _load(params_path)
    if len(sweep_texts) != 2:
        raise ParameterError("heatmap needs exactly two --sweep axes")
    (x_var, x_values), (y_var, y_values) = map(_parse_sweep, sweep_texts)
    fixed = Scenario(domain, n_app=n_app, lifetime_years=lifetime_years,
                     volume=int(volume), horizon_years=horizon_years)
    grid = heatmap(x_var, x_values, y_var, y_values, fixed, params, library)
    inputs = {"domain": domain, "x": sweep_texts[0], "y": sweep_texts[1], "apps": n_app,
              "lifetime_years": lifetime_years, "volume": int(volume),
              "horizon_years": horizon_years}
    if fmt == "record":
        results = {"x_values": list(grid.x_values), "y_values": list(grid.y_values),
                   "cells": [list(r) for r in grid.cells],
                   "unity_crossings": [list(c) for c in grid.unity_crossings()]}
        text = json.dumps(_record("heatmap", inputs, params, results),
                          sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"{grid.x_variable.value},{grid.y_variable.value},fpga_to_asic_ratio"]
        for iy, y in enumerate(grid.y_values):
            for ix, x in enumerate(grid.x_values):
                lines.append(f"{_fmt(x)},{_fmt(y)},{_fmt(grid.cells[iy][ix])}")
        for y, x in grid.unity_crossings():
            lines.append(f"# crossover,{grid.y_variable.value}={_fmt(y)},"
                         f"{grid.x_variable.value}={_fmt(x)}")
        text = "\n".join(lines) + "\n"
    _emit(text, out)


@cli.command(name="timeline")
@click.option("--domain", required=True)
@click.option("--lifetime", "lifetime_years", default=1.0, show_default=True, type=float,
              help="Lifetime of each application, years.")
@click.option("--horizon", "horizon_years", required=True, type=float)
@click.option("--step", "step_years", default=0.5, show_default=True, type=float)
@click.option("--volume", default=1e6, show_default=True, type=float)
@_with(_output_options)
@click.pass_obj
def timeline_cmd(params_path, domain, lifetime_years, horizon_years, step_years, volume,
                 out, fmt):
    """Cumulative carbon for both platforms out to a horizon."""
    from .chips import ChipKind
    from .lifecycle import cumulative_timeline
    from .scenario import _resolve_apps  # same app construction as the sweeps

    params, library = _load(params_path)
    n_app = max(1, math.ceil(horizon_years / lifetime_years))
    scenario = Scenario(domain, n_app=n_app, lifetime_years=lifetime_years,
                        volume=int(volume), horizon_years=horizon_years)
    apps = _resolve_apps(scenario, library)
    testcase = library.domain(domain)
    horizon = Duration.from_years(horizon_years)
    step = Duration.from_years(step_years)
    fpga_tl = cumulative_timeline(ChipKind.FPGA, apps, testcase.fpga, params, horizon, step)
    asic_tl = cumulative_timeline(ChipKind.ASIC, apps, testcase.asic, params, horizon, step)
    inputs = {"domain": domain, "lifetime_years": lifetime_years,
              "horizon_years": horizon_years, "step_years": step_years,
              "volume": int(volume), "apps": n_app}
    if fmt == "record":
        results = {"points": [
            {"t_years": f.time.to_years(), "fpga": f.cumulative.as_dict(),
             "asic": a.cumulative.as_dict()}
            for f, a in zip(fpga_tl, asic_tl)]}
        text = json.dumps(_record("timeline", inputs, params, results),
                          sort_keys=True, indent=2) + "\n"
    else:
        header = (["t_years", "fpga_total", "asic_total"]
                  + [f"fpga_{c}" for c in COMPONENTS] + [f"asic_{c}" for c in COMPONENTS])
        rows = []
        for f, a in zip(fpga_tl, asic_tl):
            f.cumulative.check_closure()
            a.cumulative.check_closure()
            rows.append([_fmt(f.time.to_years()), _fmt(f.cumulative.total.value),
                         _fmt(a.cumulative.total.value)]
                        + [_fmt(getattr(f.cumulative, c).value) for c in COMPONENTS]
                        + [_fmt(getattr(a.cumulative, c).value) for c in COMPONENTS])
        text = _tabular(header, rows)
    _emit(text, out)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    except ConsistencyError as exc:
        click.echo(f"internal inconsistency: {exc}", err=True)
        sys.exit(2)
    except (ParameterError, KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        click.echo(f"error: {message}", err=True)
        sys.exit(1)
    return 0
