"""Sweeps, crossover detection, heatmaps, and breakdown reports.

Everything here is a pure function of its inputs: repeated runs produce
identical results, and every grid cell is computed by the same code path as
the corresponding one-dimensional sweep sample.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Sequence

from .breakdown import CfpBreakdown
from .chips import ApplicationProfile, ChipKind, ChipSpec, Domain
from .errors import ConsistencyError
from .lifecycle import asic_total_cfp, fpga_total_cfp
from .params import ParameterSet
from .quantities import Duration
from .store import TestcaseLibrary


class SweepVariable(enum.Enum):
    NUM_APPS = "NumApps"
    APP_LIFETIME = "AppLifetime"
    APP_VOLUME = "AppVolume"
    HORIZON = "Horizon"


def default_grid(variable: SweepVariable) -> tuple[float, ...]:
    """The stock sample grid for a sweep axis.

    Application count 1..8, lifetime 0.2..2.5 years in 0.1 steps, volume
    1e3..1e6 log-spaced over 25 points, horizon yearly out to 45 years.
    """
    if variable is SweepVariable.NUM_APPS:
        return tuple(float(n) for n in range(1, 9))
    if variable is SweepVariable.APP_LIFETIME:
        return tuple(round(0.2 + 0.1 * i, 10) for i in range(24))
    if variable is SweepVariable.APP_VOLUME:
        return tuple(float(round(10 ** (3 + i * 3.0 / 24))) for i in range(25))
    return tuple(float(y) for y in range(1, 46))


@dataclass(frozen=True)
class Scenario:
    """One fully-specified comparison setting for a workload domain."""

    domain: str
    n_app: int
    lifetime_years: float
    volume: int
    horizon_years: float | None = None
    duty_cycle: float | None = None
    app_size_gates: int | None = None

    def __post_init__(self) -> None:
        if self.n_app < 1:
            raise ValueError("n_app must be >= 1")
        if self.lifetime_years <= 0:
            raise ValueError("lifetime_years must be positive")
        if self.volume < 0:
            raise ValueError("volume must be >= 0")


@dataclass(frozen=True)
class SweepSpec:
    variable: SweepVariable
    values: tuple[float, ...]
    fixed: Scenario

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("sweep range must be non-empty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("sweep range must be strictly increasing")
        if self.variable is SweepVariable.NUM_APPS:
            for v in self.values:
                if v != int(v) or v < 1:
                    raise ValueError("NumApps samples must be positive integers")


@dataclass(frozen=True)
class SweepPoint:
    value: float
    fpga: CfpBreakdown
    asic: CfpBreakdown


@dataclass(frozen=True)
class CrossoverPoint:
    """A sign change of (FPGA total - ASIC total) along a sweep.

    A2F: the FPGA becomes the lower-carbon platform past this value.
    F2A: the FPGA loses its advantage past this value.
    """

    kind: str  # "A2F" | "F2A"
    value: float
    bracket: tuple[float, float]


@dataclass(frozen=True)
class RatioGrid:
    """FPGA:ASIC total-carbon ratios over a pairwise parameter sweep."""

    x_variable: SweepVariable
    y_variable: SweepVariable
    x_values: tuple[float, ...]
    y_values: tuple[float, ...]
    cells: tuple[tuple[float, ...], ...]  # cells[iy][ix]

    def ratio_at(self, ix: int, iy: int) -> float:
        return self.cells[iy][ix]

    def unity_crossings(self) -> list[tuple[float, float]]:
        """(y, interpolated x) points where a row's ratio crosses 1.0."""
        crossings = []
        for iy, y in enumerate(self.y_values):
            row = self.cells[iy]
            for ix in range(len(row) - 1):
                a, b = row[ix] - 1.0, row[ix + 1] - 1.0
                if a == 0.0 or (a < 0.0) == (b < 0.0):
                    continue
                x0, x1 = self.x_values[ix], self.x_values[ix + 1]
                crossings.append((y, x0 + (x1 - x0) * (-a) / (b - a)))
        return crossings


def _resolve_apps(scenario: Scenario, library: TestcaseLibrary) -> list[ApplicationProfile]:
    testcase = library.domain(scenario.domain)
    size = scenario.app_size_gates or testcase.default_app_size_gates
    try:
        domain = Domain(testcase.domain)
    except ValueError:
        domain = Domain.CUSTOM
    return [
        ApplicationProfile(
            name=f"{scenario.domain}-app{i + 1}",
            size_gates=size,
            lifetime=Duration.from_years(scenario.lifetime_years),
            volume=scenario.volume,
            duty_cycle=scenario.duty_cycle,
            domain=domain,
        )
        for i in range(scenario.n_app)
    ]


def evaluate_scenario(
    scenario: Scenario, params: ParameterSet, library: TestcaseLibrary
) -> tuple[CfpBreakdown, CfpBreakdown]:
    """Both platforms' totals for one scenario, as (FPGA, ASIC)."""
    testcase = library.domain(scenario.domain)
    apps = _resolve_apps(scenario, library)
    horizon = None
    if scenario.horizon_years is not None:
        horizon = Duration.from_years(scenario.horizon_years)
    fpga = fpga_total_cfp(apps, testcase.fpga, params, horizon)
    asic = asic_total_cfp(apps, testcase.asic, params, horizon)
    return fpga, asic


def estimate_platform(
    chip: ChipSpec,
    n_app: int,
    lifetime_years: float,
    volume: int,
    params: ParameterSet,
    horizon_years: float | None = None,
) -> CfpBreakdown:
    """Single-platform estimate: run `n_app` chip-sized applications in turn."""
    apps = [
        ApplicationProfile(
            name=f"{chip.name}-app{i + 1}",
            size_gates=chip.gates,
            lifetime=Duration.from_years(lifetime_years),
            volume=volume,
        )
        for i in range(n_app)
    ]
    horizon = Duration.from_years(horizon_years) if horizon_years is not None else None
    if chip.kind is ChipKind.FPGA:
        return fpga_total_cfp(apps, chip, params, horizon)
    return asic_total_cfp(apps, chip, params, horizon)


def _apply(scenario: Scenario, variable: SweepVariable, value: float) -> Scenario:
    if variable is SweepVariable.NUM_APPS:
        return replace(scenario, n_app=int(value))
    if variable is SweepVariable.APP_LIFETIME:
        return replace(scenario, lifetime_years=float(value))
    if variable is SweepVariable.APP_VOLUME:
        return replace(scenario, volume=int(round(value)))
    return replace(scenario, horizon_years=float(value))


def sweep(spec: SweepSpec, params: ParameterSet, library: TestcaseLibrary) -> list[SweepPoint]:
    """Evaluate both platforms at every sample of a one-dimensional sweep."""
    points = []
    for value in spec.values:
        fpga, asic = evaluate_scenario(_apply(spec.fixed, spec.variable, value), params, library)
        points.append(SweepPoint(float(value), fpga, asic))
    return points


def find_crossovers(
    points: Sequence[SweepPoint],
    variable: SweepVariable,
    tie_rel_tol: float = 1e-9,
) -> list[CrossoverPoint]:
    """Locate every sign change of (FPGA - ASIC) between adjacent samples.

    Ties within the relative tolerance count as FPGA-favored. Crossovers on
    the integer NumApps axis report the first sample past the change;
    continuous axes interpolate the root linearly inside the bracket (exact
    wherever the totals are linear in the swept variable, which they are for
    lifetime and volume under the default models).
    """
    if len(points) < 2:
        return []

    def fpga_favored(p: SweepPoint) -> bool:
        diff = p.fpga.total.value - p.asic.total.value
        scale = max(abs(p.fpga.total.value), abs(p.asic.total.value), 1.0)
        return diff <= tie_rel_tol * scale

    crossovers = []
    for left, right in zip(points, points[1:]):
        lf, rf = fpga_favored(left), fpga_favored(right)
        if lf == rf:
            continue
        kind = "A2F" if rf else "F2A"
        if variable is SweepVariable.NUM_APPS:
            value = right.value
        else:
            dl = left.fpga.total.value - left.asic.total.value
            dr = right.fpga.total.value - right.asic.total.value
            if (dl <= 0.0) != (dr <= 0.0):
                value = left.value + (right.value - left.value) * (-dl) / (dr - dl)
            else:
                # the flip came from the tie band, so the root is at the tied
                # sample itself; interpolating would leave the bracket
                value = left.value if lf else right.value
        crossovers.append(CrossoverPoint(kind, value, (left.value, right.value)))
    return crossovers


def heatmap(
    x_variable: SweepVariable,
    x_values: Sequence[float],
    y_variable: SweepVariable,
    y_values: Sequence[float],
    fixed: Scenario,
    params: ParameterSet,
    library: TestcaseLibrary,
) -> RatioGrid:
    """Pairwise sweep of FPGA:ASIC total ratios with the third variable fixed."""
    if x_variable is y_variable:
        raise ValueError("heatmap axes must sweep distinct variables")
    SweepSpec(x_variable, tuple(x_values), fixed)  # reuse range validation
    SweepSpec(y_variable, tuple(y_values), fixed)
    rows = []
    for y in y_values:
        row = []
        for x in x_values:
            scenario = _apply(_apply(fixed, y_variable, y), x_variable, x)
            fpga, asic = evaluate_scenario(scenario, params, library)
            if asic.total.value <= 0.0 or not math.isfinite(fpga.total.value / asic.total.value):
                raise ConsistencyError(
                    f"non-finite or non-positive ratio at ({x_variable.value}={x}, "
                    f"{y_variable.value}={y})"
                )
            row.append(fpga.total.value / asic.total.value)
        rows.append(tuple(row))
    return RatioGrid(x_variable, y_variable, tuple(float(v) for v in x_values),
                     tuple(float(v) for v in y_values), tuple(rows))


@dataclass(frozen=True)
class BreakdownReport:
    """Six-way component split for both platforms plus the EC/OC view."""

    scenario: Scenario
    fpga: CfpBreakdown
    asic: CfpBreakdown

    @property
    def fpga_embodied_vs_operational(self) -> tuple[float, float]:
        return self.fpga.embodied.value, self.fpga.deployment.value

    @property
    def asic_embodied_vs_operational(self) -> tuple[float, float]:
        return self.asic.embodied.value, self.asic.deployment.value


def breakdown_report(
    scenario: Scenario, params: ParameterSet, library: TestcaseLibrary
) -> BreakdownReport:
    fpga, asic = evaluate_scenario(scenario, params, library)
    return BreakdownReport(scenario, fpga, asic)
