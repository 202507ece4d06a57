"""Platform totals over sequential application schedules.

An ASIC platform designs, manufactures, and retires fresh silicon for every
application. An FPGA fleet is bought once and reprogrammed from application to
application; when the evaluation horizon carries the schedule past the chip
lifetime, the whole fleet is re-purchased (manufacturing, packaging, and EOL
re-incur; the already-existing design does not).

Replacement accounting only engages when a horizon is passed explicitly.
Plain total queries (`horizon=None`) evaluate the reuse sum as-is, which is
also how the sweep experiments are defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

from .breakdown import CfpBreakdown
from .chips import ApplicationProfile, ChipKind, ChipSpec
from .deployment import app_dev_cfp, deployment_cfp
from .embodied import design_cfp, eol_cfp, manufacturing_cfp, packaging_cfp
from .params import ParameterSet
from .quantities import CarbonMass, Duration, HOURS_PER_YEAR


def n_fpga_required(app_size_gates: int, fpga_capacity_gates: int) -> int:
    """Devices needed to host one application instance at iso-performance."""
    if app_size_gates < 1:
        raise ValueError("app_size_gates must be >= 1")
    if fpga_capacity_gates < 1:
        raise ValueError("fpga_capacity_gates must be >= 1")
    return -(-app_size_gates // fpga_capacity_gates)


@dataclass(frozen=True)
class TimelinePoint:
    time: Duration
    cumulative: CfpBreakdown


@dataclass(frozen=True)
class _Slot:
    """One application's position in the sequential schedule (hours)."""

    app: ApplicationProfile
    chip: ChipSpec
    n_fpga: int
    start: float
    end: float
    rate_per_year: CarbonMass
    one_time: CarbonMass  # app-dev, already lifetime-scaled under literal mode


def _schedule(
    apps: Sequence[ApplicationProfile],
    chips: Sequence[ChipSpec],
    params: ParameterSet,
) -> list[_Slot]:
    slots: list[_Slot] = []
    t = 0.0
    for app, chip in zip(apps, chips):
        nf = 1
        if chip.kind is ChipKind.FPGA:
            nf = n_fpga_required(app.size_gates, chip.gates)
        rate, one_time = deployment_cfp(chip, app, params.operation, params.appdev, nf)
        if params.options.appdev_scaling == "literal":
            one_time = one_time * app.lifetime.to_years()
        slots.append(_Slot(app, chip, nf, t, t + app.lifetime.value, rate, one_time))
        t += app.lifetime.value
    return slots


def _fleet_devices(slots: Sequence[_Slot]) -> int:
    """FPGA fleet size: big enough for the largest application."""
    return max((s.app.volume * s.n_fpga for s in slots), default=0)


def _replacement_times(chip_lifetime_h: float, cutoff_h: float) -> list[float]:
    """Fleet re-purchase instants: every chip lifetime, strictly inside the run."""
    times = []
    k = 1
    while k * chip_lifetime_h < cutoff_h:
        times.append(k * chip_lifetime_h)
        k += 1
    return times


def _clip_fraction(slot: _Slot, until_h: float) -> float:
    """Fraction of the slot's lifetime elapsed by `until_h`."""
    covered = min(slot.end, until_h) - slot.start
    if covered <= 0.0:
        return 0.0
    return min(1.0, covered / (slot.end - slot.start))


def _only(**components: CarbonMass) -> CfpBreakdown:
    return replace(CfpBreakdown.zero(), **components)


def _volume_embodied(chip: ChipSpec, devices: int, params: ParameterSet) -> CfpBreakdown:
    """Embodied carbon of manufacturing `devices` units, excluding design."""
    return _only(
        manufacturing=manufacturing_cfp(chip, params) * devices,
        packaging=packaging_cfp(chip) * devices,
        eol=eol_cfp(chip, params.eol) * devices,
    )


def _accrual(slot: _Slot, until_h: float) -> CfpBreakdown:
    """Operation and development accrued by `until_h`.

    Development is amortized uniformly across the application's run so that
    cumulative curves stay continuous between embodied events.
    """
    frac = _clip_fraction(slot, until_h)
    elapsed_years = (slot.end - slot.start) / HOURS_PER_YEAR * frac
    return _only(
        app_dev=slot.one_time * frac,
        operational=slot.rate_per_year * elapsed_years,
    )


def _reprogramming_cost(slots: Sequence[_Slot], at_h: float, params: ParameterSet) -> CfpBreakdown:
    """Configuration carbon of re-loading the active bitstream onto a new fleet."""
    active = next((s for s in slots if s.start <= at_h < s.end), None)
    if active is None:
        return CfpBreakdown.zero()
    return _only(app_dev=app_dev_cfp(ChipKind.FPGA, 0, active.app.volume, params.appdev))


def asic_total_cfp(
    apps: Sequence[ApplicationProfile],
    asic_per_app: ChipSpec | Sequence[ChipSpec],
    params: ParameterSet,
    horizon: Duration | None = None,
) -> CfpBreakdown:
    """Total carbon of serving the applications with one new ASIC each.

    Every application pays the full embodied cost (a fresh design and a fresh
    production run) plus lifetime-weighted operation. A horizon shorter than
    the schedule truncates it: applications starting past the horizon drop
    out, the one straddling it accrues pro-rata.
    """
    if isinstance(asic_per_app, ChipSpec):
        chips: list[ChipSpec] = [asic_per_app] * len(apps)
    else:
        chips = list(asic_per_app)
    if len(chips) != len(apps):
        raise ValueError("need exactly one ASIC spec per application")
    for chip in chips:
        if chip.kind is not ChipKind.ASIC:
            raise ValueError(f"{chip.name}: expected an ASIC spec")

    slots = _schedule(apps, chips, params)
    cutoff = horizon.value if horizon is not None else math.inf
    total = CfpBreakdown.zero()
    for slot in slots:
        if slot.start > cutoff:
            continue
        total = total + _only(design=design_cfp(params.design, slot.chip.gates))
        total = total + _volume_embodied(slot.chip, slot.app.volume, params)
        total = total + _accrual(slot, cutoff)
    return total


def fpga_total_cfp(
    apps: Sequence[ApplicationProfile],
    fpga: ChipSpec,
    params: ParameterSet,
    horizon: Duration | None = None,
) -> CfpBreakdown:
    """Total carbon of serving all applications on one reprogrammable fleet.

    The fleet's embodied cost is paid once, then re-incurred without the
    design share at every chip-lifetime boundary the schedule crosses (only
    when a horizon is given). Per-application costs are operation and
    development.
    """
    if fpga.kind is not ChipKind.FPGA:
        raise ValueError(f"{fpga.name}: expected an FPGA spec")
    slots = _schedule(apps, [fpga] * len(apps), params)
    schedule_end = slots[-1].end if slots else 0.0
    cutoff = min(horizon.value, schedule_end) if horizon is not None else schedule_end

    devices = _fleet_devices(slots)
    total = _only(design=design_cfp(params.design, fpga.gates))
    total = total + _volume_embodied(fpga, devices, params)
    if horizon is not None:
        for rt in _replacement_times(fpga.chip_lifetime.value, cutoff):
            total = total + _volume_embodied(fpga, devices, params)
            if params.options.replacement_reprogramming:
                total = total + _reprogramming_cost(slots, rt, params)
    for slot in slots:
        total = total + _accrual(slot, cutoff)
    return total


def cumulative_timeline(
    kind: ChipKind,
    apps: Sequence[ApplicationProfile],
    chips: ChipSpec | Sequence[ChipSpec],
    params: ParameterSet,
    horizon: Duration,
    step: Duration,
) -> list[TimelinePoint]:
    """Cumulative carbon sampled on a regular grid from t=0 to the horizon.

    Operation and development accrue continuously while an application runs;
    embodied carbon books as steps, at application starts for ASICs and at
    purchase/replacement instants for the FPGA fleet. The grid always ends
    exactly on the horizon, so the final point reproduces the total queries.
    """
    if step.value <= 0:
        raise ValueError("step must be positive")
    if isinstance(chips, ChipSpec):
        chip_list: list[ChipSpec] = [chips] * len(apps)
    else:
        chip_list = list(chips)
    if len(chip_list) != len(apps):
        raise ValueError("need exactly one chip spec per application")

    slots = _schedule(apps, chip_list, params)
    schedule_end = slots[-1].end if slots else 0.0
    cutoff = min(horizon.value, schedule_end)

    grid = [k * step.value for k in range(math.floor(horizon.value / step.value) + 1)]
    if not grid or grid[-1] < horizon.value:
        grid.append(horizon.value)

    if kind is ChipKind.FPGA:
        fpga = chip_list[0]
        fleet_cost = _volume_embodied(fpga, _fleet_devices(slots), params)
        base = _only(design=design_cfp(params.design, fpga.gates)) + fleet_cost
        replacements = _replacement_times(fpga.chip_lifetime.value, cutoff)

    points: list[TimelinePoint] = []
    for t in grid:
        if kind is ChipKind.FPGA:
            cum = base
            for rt in replacements:
                if rt <= t:
                    cum = cum + fleet_cost
                    if params.options.replacement_reprogramming:
                        cum = cum + _reprogramming_cost(slots, rt, params)
        else:
            cum = CfpBreakdown.zero()
            for slot in slots:
                if slot.start <= min(t, cutoff):
                    cum = cum + _only(design=design_cfp(params.design, slot.chip.gates))
                    cum = cum + _volume_embodied(slot.chip, slot.app.volume, params)
        for slot in slots:
            cum = cum + _accrual(slot, min(t, cutoff))
        points.append(TimelinePoint(Duration.hours(t), cum))
    return points
