"""Norms and angles of the representative rows of a block template.

Only a handful of rows (labels ``1``, ``2`` from the large block and every
row of the small block) are distinct up to symmetry. Their inner products are
polynomials in the coefficients and ``d``, so the closure below also makes
sense at non-integer ``d``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from ..gauss_kernel import KernelDomainError
from ..symmetry import ReducedPoint

# representative row labels; the last p belong to the small block
LABELS = {0: ("1", "2"), 1: ("1", "2", "d"), 2: ("1", "2", "dm1", "d"), 3: ("1", "2", "dm2", "dm1", "d")}

# |cos| may exceed one by this much before the point is declared infeasible
COS_SLACK = 1e-12


def arith_for(values):
    """``mpmath.mp`` if any value is an mpmath number, else ``math``."""
    return mpmath.mp if any(isinstance(v, mpmath.mpf) for v in values) else math


def _entry(p, coeffs, r, c):
    a = list(coeffs) + [0] * (6 - len(coeffs))
    small = LABELS[p][len(LABELS[p]) - p:]
    r_small, c_small = r in small, c in small
    if r == c:
        return a[4] if r_small else a[0]
    if not r_small:
        return a[2] if c_small else a[1]
    return a[5] if c_small else a[3]


def _generic_col(p, coeffs, r):
    """Entry of row ``r`` in a large-block column outside the labels."""
    a = coeffs
    return a[3] if r in LABELS[p][len(LABELS[p]) - p:] else a[1]


@dataclass(frozen=True)
class AngleSet:
    """Representative norms and angles, keyed by row label.

    ``alpha_angles[(i, j)]`` is the angle between student rows ``i`` and
    ``j``; ``beta_angles[(i, j)]`` the angle between student row ``i`` and
    teacher row ``j``. Teacher rows are unit vectors, so ``mu`` is all ones.
    """

    p: int
    d: object
    nu: dict
    mu: dict
    alpha_angles: dict
    beta_angles: dict
    arith: object = math

    def nus(self, i, j):
        return self.arith.sin(self.alpha_angles[(i, j)])

    def mus(self, i, j):
        return self.arith.sin(self.beta_angles[(i, j)])

    def symbols(self) -> dict:
        """Flat ``name -> value`` map used by the closed-form entries."""
        out = {f"nu_{i}": v for i, v in self.nu.items()}
        for (i, j), v in self.alpha_angles.items():
            out[f"alpha_{i}_{j}"] = v
            out[f"nus_{i}_{j}"] = self.arith.sin(v)
        for (i, j), v in self.beta_angles.items():
            out[f"beta_{i}_{j}"] = v
            out[f"mus_{i}_{j}"] = self.arith.sin(v)
        return out


def inner_products(p: int, coeffs, d):
    """Inner products between all pairs of representative rows."""
    labels = LABELS[p]
    rest = d - p - 2
    out = {}
    for r in labels:
        for s in labels:
            v = sum(_entry(p, coeffs, r, c) * _entry(p, coeffs, s, c) for c in labels)
            out[(r, s)] = v + rest * _generic_col(p, coeffs, r) * _generic_col(p, coeffs, s)
    return out


def _acos(m, c):
    if abs(c) > 1 + COS_SLACK:
        raise KernelDomainError(f"cosine {float(c):.6g} outside [-1, 1]; the point is infeasible at this d")
    return m.acos(max(min(c, 1), -1))


def reduced_angles(r: ReducedPoint) -> AngleSet:
    """Close the representative geometry of ``r`` as functions of real ``d``."""
    m = arith_for(list(r.coeffs) + [r.d])
    p, a, d = r.p, r.coeffs, r.d
    labels = LABELS[p]
    gram = inner_products(p, a, d)
    nu = {}
    for i in labels:
        if not gram[(i, i)] > 0:
            raise KernelDomainError(f"squared norm of row {i} is {float(gram[(i, i)]):.6g} at d={float(d)}")
        nu[i] = m.sqrt(gram[(i, i)])
    alpha = {}
    for x, i in enumerate(labels):
        for j in labels[x + 1:]:
            alpha[(i, j)] = _acos(m, gram[(i, j)] / (nu[i] * nu[j]))
    beta = {(i, j): _acos(m, _entry(p, a, i, j) / nu[i]) for i in labels for j in labels}
    return AngleSet(p, d, nu, {j: 1 for j in labels}, alpha, beta, m)
