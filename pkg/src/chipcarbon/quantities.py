"""Unit-carrying scalar quantities shared by all carbon models.

Internal math runs in one canonical unit system: kilograms of CO2-equivalent,
kilowatt-hours, watts, and hours. Configuration files speak human units
(g CO2/kWh, GWh, months, years, metric tons CO2e per ton); those are converted
at the boundary by the constructors below so that no model formula ever mixes
units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

HOURS_PER_YEAR = 8760.0
# Dev-compute servers are modeled as drawing power around the clock, so a
# project month is a calendar month (8760/12), not 160 work hours. Overridable
# through options.hours_per_dev_month.
HOURS_PER_MONTH = HOURS_PER_YEAR / 12.0


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


def _require_non_negative(name: str, value: float) -> None:
    _require_finite(name, value)
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value!r}")


@dataclass(frozen=True, order=True)
class CarbonMass:
    """Mass of CO2-equivalent emissions in kilograms.

    A negative value is legal only for the end-of-life recycling credit, which
    is why the bare constructor admits it. Use :meth:`kg` everywhere else so an
    accidental negative fails fast.
    """

    value: float

    def __post_init__(self) -> None:
        _require_finite("CarbonMass", self.value)

    @classmethod
    def kg(cls, value: float) -> "CarbonMass":
        _require_non_negative("CarbonMass", value)
        return cls(value)

    @classmethod
    def zero(cls) -> "CarbonMass":
        return cls(0.0)

    def __add__(self, other: "CarbonMass") -> "CarbonMass":
        return CarbonMass(self.value + other.value)

    def __sub__(self, other: "CarbonMass") -> "CarbonMass":
        return CarbonMass(self.value - other.value)

    def __mul__(self, k: float) -> "CarbonMass":
        return CarbonMass(self.value * k)

    __rmul__ = __mul__


@dataclass(frozen=True, order=True)
class Energy:
    """Electric energy in kilowatt-hours."""

    value: float

    def __post_init__(self) -> None:
        _require_non_negative("Energy", self.value)

    @classmethod
    def kwh(cls, value: float) -> "Energy":
        return cls(value)

    @classmethod
    def from_gwh(cls, value: float) -> "Energy":
        return cls(value * 1e6)


@dataclass(frozen=True, order=True)
class CarbonIntensity:
    """Carbon intensity of an energy source in kg CO2e per kWh.

    The type only enforces non-negativity; the plausibility ceiling
    (2.0 kg/kWh) is a configuration-validation concern, not a type invariant.
    """

    value: float

    def __post_init__(self) -> None:
        _require_non_negative("CarbonIntensity", self.value)

    @classmethod
    def from_g_per_kwh(cls, value: float) -> "CarbonIntensity":
        return cls(value / 1000.0)

    def to_g_per_kwh(self) -> float:
        return self.value * 1000.0


@dataclass(frozen=True, order=True)
class Power:
    """Electrical power in watts (TDP / peak power for chips)."""

    value: float

    def __post_init__(self) -> None:
        _require_non_negative("Power", self.value)

    @classmethod
    def watts(cls, value: float) -> "Power":
        return cls(value)

    def energy_over(self, duration: "Duration", duty_cycle: float = 1.0) -> Energy:
        """Energy drawn while running at `duty_cycle` of peak for `duration`."""
        if not 0.0 <= duty_cycle <= 1.0:
            raise ValueError(f"duty_cycle must be in [0, 1], got {duty_cycle!r}")
        return Energy(self.value * duty_cycle * duration.value / 1000.0)


@dataclass(frozen=True, order=True)
class Duration:
    """A span of time in hours."""

    value: float

    def __post_init__(self) -> None:
        _require_non_negative("Duration", self.value)

    @classmethod
    def hours(cls, value: float) -> "Duration":
        return cls(value)

    @classmethod
    def from_years(cls, years: float) -> "Duration":
        _require_non_negative("years", years)
        return cls(years * HOURS_PER_YEAR)

    @classmethod
    def from_months(cls, months: float, hours_per_month: float = HOURS_PER_MONTH) -> "Duration":
        _require_non_negative("months", months)
        return cls(months * hours_per_month)

    def to_years(self) -> float:
        return self.value / HOURS_PER_YEAR

    def __add__(self, other: "Duration") -> "Duration":
        return Duration(self.value + other.value)

    def __mul__(self, k: float) -> "Duration":
        return Duration(self.value * k)

    __rmul__ = __mul__


def energy_to_carbon(energy: Energy, intensity: CarbonIntensity) -> CarbonMass:
    """Emissions from consuming `energy` on a grid with the given intensity."""
    return CarbonMass(energy.value * intensity.value)


def years_to_hours(years: float) -> Duration:
    """Convert calendar years to a Duration; negative input is rejected."""
    return Duration.from_years(years)
