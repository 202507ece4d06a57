"""Per-component carbon results."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import ConsistencyError
from .quantities import CarbonMass

COMPONENTS = ("design", "manufacturing", "packaging", "eol", "app_dev", "operational")


@dataclass(frozen=True)
class CfpBreakdown:
    """Carbon footprint split into its six lifecycle components.

    `eol` may be negative (net recycling credit); everything else is
    non-negative. The total is always derived, never stored.
    """

    design: CarbonMass
    manufacturing: CarbonMass
    packaging: CarbonMass
    eol: CarbonMass
    app_dev: CarbonMass
    operational: CarbonMass

    @classmethod
    def zero(cls) -> "CfpBreakdown":
        z = CarbonMass.zero()
        return cls(z, z, z, z, z, z)

    @property
    def total(self) -> CarbonMass:
        return CarbonMass(sum(getattr(self, f.name).value for f in fields(self)))

    @property
    def embodied(self) -> CarbonMass:
        """Design + manufacturing + packaging + EOL (everything except use)."""
        return self.design + self.manufacturing + self.packaging + self.eol

    @property
    def deployment(self) -> CarbonMass:
        return self.app_dev + self.operational

    def __add__(self, other: "CfpBreakdown") -> "CfpBreakdown":
        return CfpBreakdown(*(getattr(self, c) + getattr(other, c) for c in COMPONENTS))

    def scaled(self, k: float) -> "CfpBreakdown":
        return CfpBreakdown(*(getattr(self, c) * k for c in COMPONENTS))

    def as_dict(self) -> dict[str, float]:
        d = {c: getattr(self, c).value for c in COMPONENTS}
        d["total"] = self.total.value
        return d

    def check_closure(self, rel_tol: float = 1e-9) -> None:
        """Assert the derived total equals the component sum (paranoia hook).

        The total is computed from the components, so this can only fire if a
        component went non-finite; it exists so emitters can fail loudly with
        a dedicated exit code instead of writing garbage.
        """
        component_sum = sum(getattr(self, c).value for c in COMPONENTS)
        if not math.isclose(self.total.value, component_sum, rel_tol=rel_tol, abs_tol=1e-12):
            raise ConsistencyError(
                f"breakdown closure violated: total={self.total.value!r} "
                f"components sum={component_sum!r}"
            )
