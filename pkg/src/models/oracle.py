"""
Floating-point root oracle results
"""
import cmath
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple


def complex_to_dict(z: complex) -> Dict[str, float]:
    return {"re": z.real, "im": z.imag}


@dataclass(frozen=True)
class RootReport:
    """
    Roots of f in double precision (with multiplicity).

    residual is max |f(z)| / (max|a_k| (1+|z|)^n) over the roots; min_arg is the
    smallest |arg z| over nonzero roots, None when every root is zero.
    """

    roots: Tuple[complex, ...]
    residual: float
    converged: bool
    iterations: int = 0
    attempts: int = 1
    clustered: bool = False
    seed: int = 0

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def min_arg(self) -> Optional[float]:
        angles = [abs(cmath.phase(z)) for z in self.nonzero_roots()]
        return min(angles) if angles else None

    def nonzero_roots(self, floor: float = 1e-12) -> List[complex]:
        return [z for z in self.roots if abs(z) > floor]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "roots": [complex_to_dict(z) for z in self.roots],
            "residual": self.residual,
            "converged": self.converged,
            "iterations": self.iterations,
            "attempts": self.attempts,
            "clustered": self.clustered,
            "seed": self.seed,
            "min_arg": self.min_arg,
        }


@dataclass(frozen=True)
class ClearanceRecord:
    """
    Angular clearance of the roots from the sector boundary |arg z| = pi/M.

    clearance = min |arg z| - pi/M over nonzero roots (positive: all roots outside
    the closed sector). Slopes compare |Im z| / Re z of the root nearest the
    boundary with tan(pi/M); both are None where they are undefined (M <= 2, or a
    nearest root in the left half-plane).
    """

    m: int
    boundary_angle: float
    clearance: Optional[float]
    closest_root: Optional[complex]
    root_slope: Optional[float]
    boundary_slope: Optional[float]
    slack: float
    roots_in_sector: Tuple[complex, ...] = ()

    @property
    def clear(self) -> bool:
        """No root strictly inside the open sector beyond the slack"""
        return not self.roots_in_sector

    @property
    def boundary_degrees(self) -> float:
        return math.degrees(self.boundary_angle)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "boundary_angle": self.boundary_angle,
            "clearance": self.clearance,
            "closest_root": complex_to_dict(self.closest_root) if self.closest_root is not None else None,
            "root_slope": self.root_slope,
            "boundary_slope": self.boundary_slope,
            "slack": self.slack,
            "roots_in_sector": [complex_to_dict(z) for z in self.roots_in_sector],
        }
