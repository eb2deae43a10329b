"""Where a family turns from saddle to minimum as ``d`` varies continuously."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from scipy.optimize import bisect

from ..families import get_family
from ..reduced_flow.solver import continue_in_d, solve_at
from ..symmetry import ReducedPoint
from .isotypic import rep_spectrum

# spacing of the scan along the continued path before bisection
SCAN_STEP = 0.25


def min_nongauge(r: ReducedPoint) -> tuple[float, str]:
    """Smallest Hessian eigenvalue off the scaling directions, with its irreducible."""
    value, _, label = min(rep_spectrum(r, exclude_gauge=True))
    return value, label


@dataclass
class StabilityResult:
    family: str
    d_lo: float
    d_hi: float
    d_star: float | None  # None when the sign never changes
    bracket: tuple[float, float] | None
    lo_eigenvalue: float
    hi_eigenvalue: float
    rep_label: str | None = None

    @property
    def monotone(self) -> bool:
        return self.d_star is None

    def describe(self) -> str:
        if self.monotone:
            kind = "stable" if min(self.lo_eigenvalue, self.hi_eigenvalue) > 0 else "unstable"
            return (f"no sign change on [{self.d_lo}, {self.d_hi}] ({kind}); minimal non-gauge eigenvalue "
                    f"{self.lo_eigenvalue:.17g} at d={self.d_lo}, {self.hi_eigenvalue:.17g} at d={self.d_hi}")
        return f"d* = {self.d_star:.17g} (bracket {self.bracket[0]:.17g}..{self.bracket[1]:.17g}, {self.rep_label})"


def _path(family, d_lo: float, d_hi: float, d_seed: float) -> list[ReducedPoint]:
    top = max(d_hi, d_seed)
    steps = max(1, int(math.ceil((top - d_lo) / SCAN_STEP)))
    return continue_in_d(family, top, d_lo, steps)


def stability_threshold(family, d_lo: float, d_hi: float, tol: float = 1e-3, d_seed: float = 64.0) -> StabilityResult:
    """Bisect on ``d`` for the sign change of the minimal non-gauge eigenvalue along the continued path.

    The path is continued down from ``d_seed`` and scanned at steps of
    ``SCAN_STEP``; the crossing closest to ``d_hi`` is refined until the
    bracket is shorter than ``tol``.
    """
    f = get_family(family) if isinstance(family, str) else family
    if not d_lo < d_hi:
        raise ValueError(f"empty interval [{d_lo}, {d_hi}]")
    path = [r for r in _path(f, d_lo, d_hi, d_seed) if d_lo - 1e-12 <= float(r.d) <= d_hi + 1e-12]
    path.sort(key=lambda r: -float(r.d))
    values = [min_nongauge(r)[0] for r in path]
    for (upper, v_up), (lower, v_low) in zip(zip(path, values), zip(path[1:], values[1:])):
        if (v_up > 0) == (v_low > 0):
            continue
        anchors = {float(upper.d): upper, float(lower.d): lower}

        def g(d):
            lo_d, hi_d = max(x for x in anchors if x <= d), min(x for x in anchors if x >= d)
            a, b = anchors[lo_d], anchors[hi_d]
            w = 0.0 if hi_d == lo_d else (d - lo_d) / (hi_d - lo_d)
            guess = tuple((1 - w) * x + w * y for x, y in zip(a.coeffs, b.coeffs))
            r = solve_at(replace(a, coeffs=guess, d=d), precision="float")
            anchors[d] = r
            return min_nongauge(r)[0]

        d_star, info = bisect(g, float(lower.d), float(upper.d), xtol=tol / 4, full_output=True)
        label = min_nongauge(anchors[min(anchors, key=lambda x: abs(x - d_star))])[1]
        return StabilityResult(f.name, d_lo, d_hi, float(d_star), (d_star - tol / 4, d_star + tol / 4),
                               values[-1], values[0], label)
    return StabilityResult(f.name, d_lo, d_hi, None, None, values[-1], values[0])
