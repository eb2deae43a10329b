"""Expansions in powers of ``d^(-1/2)`` and least-squares extraction of their coefficients."""
from __future__ import annotations

from dataclasses import dataclass, field

import mpmath
import numpy as np

from ..families import get_family
from ..symmetry import ReducedPoint
from .equations import reduced_grad
from .solver import mp_digits, seed_point, solve_at

# designs worse than this (after column scaling) cannot separate the powers
MAX_DESIGN_CONDITION = 1e10


class IllConditionedFit(ValueError):
    pass


@dataclass
class HalfPowerSeries:
    """``sum_e coeffs[e] * d^(-e)`` over half-integer exponents ``e >= 0``."""

    coeffs: dict[float, float]
    max_residual: float = field(default=0.0, compare=False)

    def __post_init__(self):
        for e in self.coeffs:
            if e < 0 or (2 * e) != int(2 * e):
                raise ValueError(f"exponent {e} is not a non-negative half-integer")

    @property
    def order(self) -> float:
        return max(self.coeffs, default=0.0)

    def __call__(self, d):
        return sum(c * d ** (-e) for e, c in self.coeffs.items())

    def coefficient(self, m: int) -> float:
        """Coefficient of ``d^(-m/2)`` (zero if absent)."""
        return self.coeffs.get(m / 2, 0.0)

    @classmethod
    def from_half_index(cls, table: dict[int, float]) -> "HalfPowerSeries":
        return cls({m / 2: c for m, c in table.items() if c is not None})


def fit_half_series(samples, exponents) -> HalfPowerSeries:
    """Least-squares fit of ``value(d) ~ sum_e c_e d^(-e)``.

    Columns are scaled to unit maximum before solving so the condition number
    reflects how well the exponents can be told apart on the sampled range.
    """
    exps = sorted(float(e) for e in exponents)
    if len(set(exps)) != len(exps):
        raise ValueError("exponents must be distinct")
    d = np.array([float(s[0]) for s in samples])
    y = np.array([float(s[1]) for s in samples])
    if len(d) < len(exps) + 2:
        raise ValueError(f"need at least {len(exps) + 2} samples for {len(exps)} exponents, got {len(d)}")
    if np.log10(d.max() / d.min()) < 2:
        raise ValueError("samples must span at least two decades in d")
    A = np.stack([d ** (-e) for e in exps], axis=1)
    scale = np.abs(A).max(axis=0)
    As = A / scale
    cond = np.linalg.cond(As)
    if cond > MAX_DESIGN_CONDITION:
        raise IllConditionedFit(f"design condition {cond:.2e} exceeds {MAX_DESIGN_CONDITION:.0e}; widen the d range or drop exponents")
    c, *_ = np.linalg.lstsq(As, y, rcond=None)
    c = c / scale
    resid = float(np.abs(A @ c - y).max())
    return HalfPowerSeries(dict(zip(exps, c.tolist())), resid)


def log_grid(lo: float, hi: float, per_decade: int = 4) -> list[float]:
    n = int(round(np.log10(hi / lo) * per_decade))
    return [float(v) for v in np.logspace(np.log10(lo), np.log10(hi), n + 1)]


def family_samples(family, ds) -> list[ReducedPoint]:
    """Exact solutions of a family at each ``d`` (extended precision above the float range)."""
    f = get_family(family) if isinstance(family, str) else family
    return [solve_at(seed_point(f, d)) for d in ds]


def fit_family_coefficients(family, ds=None, max_m: int = 8) -> list[HalfPowerSeries]:
    """Fit every template coefficient of a family over ``ds`` with exponents ``0, 1/2, ..., max_m/2``."""
    ds = log_grid(1e3, 1e6) if ds is None else ds
    pts = family_samples(family, ds)
    exps = [m / 2 for m in range(max_m + 1)]
    m = len(pts[0].coeffs)
    return [fit_half_series([(p.d, p.coeffs[i]) for p in pts], exps) for i in range(m)]


def truncated_point(family, d: float, max_m: int = 4) -> ReducedPoint:
    """The family's expansion truncated after ``d^(-max_m/2)``, evaluated in extended precision."""
    f = get_family(family) if isinstance(family, str) else family
    with mpmath.workdps(mp_digits(d)):
        dm = mpmath.mpf(d)
        coeffs = tuple(
            sum(mpmath.mpf(c or 0) * dm ** (-mpmath.mpf(k) / 2) for k, c in f.series[i].items() if k <= max_m)
            for i in range(1, f.m + 1)
        )
    return ReducedPoint(f.isotropy, coeffs, dm)


def series_residual(family, d: float, max_m: int = 4, per_entry: bool = True) -> float:
    """``|reduced_grad|_inf`` at the truncated expansion (per matrix entry by default)."""
    r = truncated_point(family, d, max_m)
    with mpmath.workdps(mp_digits(d)):
        return float(max(abs(v) for v in reduced_grad(r, per_entry)))
