"""Leading-order Hessian eigenvalues per irreducible and their check against computed spectra."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..families import FamilySpec, get_family
from ..landscape import hessian
from ..reduced_flow.solver import solve_family
from ..symmetry import ReducedPoint, lift
from .isotypic import rep_blocks

PI = math.pi
X_VAL = (PI - 2) / (4 * PI)
Y_VAL = (PI + 2) / (4 * PI)
S_VAL = (PI - 2) / (2 * PI)
Q_VAL = 0.25


def _const(c):
    return lambda d: c


ZERO, XV, YV, SV, QV = (_const(v) for v in (0.0, X_VAL, Y_VAL, S_VAL, Q_VAL))


def L1(d):
    return d / 4 + (PI**2 + PI - 4) / (2 * PI * (PI - 4))


def L2(d):
    return d / 4 + 0.5


def L3(d):
    return d / PI + (PI**2 - 10 * PI + 8) / (2 * PI * (PI - 4))


# leading eigenvalues of each irreducible, by size of the small block
_S_SPLIT = [ZERO, XV, SV, QV, YV, L2]
LEADING = {
    0: {"t": [ZERO, L1, L3], "s_p": [ZERO, SV, QV, L2], "x_p": [XV], "y_p": [YV]},
    1: {"t": [ZERO, ZERO, SV, QV, L1, L2, L3], "s_p": _S_SPLIT, "x_p": [XV], "y_p": [YV]},
    2: {
        "t": [ZERO, ZERO, SV, QV, YV, L1, L2, L3], "s_p": _S_SPLIT, "x_p": [XV], "y_p": [YV],
        "s_q": [ZERO, XV, SV, QV, L2], "s_p⊗s_q": [XV, YV],
    },
    3: {
        "t": [ZERO, ZERO, SV, QV, YV, L1, L2, L3], "s_p": _S_SPLIT, "x_p": [XV], "y_p": [YV],
        "s_q": [ZERO, XV, SV, QV, YV, L2], "x_q": [XV], "s_p⊗s_q": [XV, YV],
    },
}

# multiplicities as functions of d, written out per case rather than derived from block sizes
DEGREES = {
    0: {"t": lambda d: 1, "s_p": lambda d: d - 1, "x_p": lambda d: (d - 1) * (d - 2) / 2,
        "y_p": lambda d: d * (d - 3) / 2},
    1: {"t": lambda d: 1, "s_p": lambda d: d - 2, "x_p": lambda d: (d - 2) * (d - 3) / 2,
        "y_p": lambda d: (d - 1) * (d - 4) / 2},
    2: {"t": lambda d: 1, "s_p": lambda d: d - 3, "x_p": lambda d: (d - 3) * (d - 4) / 2,
        "y_p": lambda d: (d - 2) * (d - 5) / 2, "s_q": lambda d: 1, "s_p⊗s_q": lambda d: d - 3},
    3: {"t": lambda d: 1, "s_p": lambda d: d - 4, "x_p": lambda d: (d - 5) * (d - 4) / 2,
        "y_p": lambda d: (d - 3) * (d - 6) / 2, "s_q": lambda d: 2, "x_q": lambda d: 1,
        "s_p⊗s_q": lambda d: 2 * d - 8},
}


class MultiplicityMismatch(AssertionError):
    pass


@dataclass
class TableRow:
    rep_label: str
    degree: int
    value: float
    leading: float

    @property
    def residual(self) -> float:
        return abs(self.value - self.leading)


@dataclass
class TableCheck:
    family: str
    d: int
    rows: list[TableRow]
    dense_deviation: float | None = None

    @property
    def max_residual(self) -> float:
        return max(r.residual for r in self.rows)

    @property
    def scaled_residual(self) -> float:
        """``max residual * sqrt(d)``: the constant ``C`` this ``d`` alone would need."""
        return self.max_residual * math.sqrt(self.d)

    def multiplicities(self) -> list[tuple[float, int]]:
        """``(leading value, total multiplicity)`` merged over irreducibles, sorted by value."""
        merged: dict[float, int] = {}
        for r in self.rows:
            key = round(r.leading, 12)
            merged[key] = merged.get(key, 0) + r.degree
        return sorted(merged.items())


def assign_leading(values, leading: list[float]) -> list[float]:
    """Pair computed eigenvalues with leading values one-to-one, minimizing total distance."""
    values = np.asarray(values, dtype=float)
    cost = np.abs(values[:, None] - np.asarray(leading)[None, :])
    rows, cols = linear_sum_assignment(cost)
    out = [0.0] * len(values)
    for i, j in zip(rows, cols):
        out[i] = leading[j]
    return out


def spectrum_table_check(family: FamilySpec | str, d: int, point: ReducedPoint | None = None,
                         dense: bool = True) -> TableCheck:
    """Compare the spectrum at the family point with its leading-order table.

    Irreducibles, copy counts and multiplicities must match the table exactly
    (``MultiplicityMismatch`` otherwise). With ``dense`` the full Hessian is
    diagonalized too and must reproduce the tabulated values with exactly the
    tabulated multiplicities.
    """
    f = get_family(family) if isinstance(family, str) else family
    if d < 9:
        raise ValueError("tables are checked for d >= 9")
    r = solve_family(f, d) if point is None else point
    table, degrees = LEADING[f.p], DEGREES[f.p]
    blocks = rep_blocks(r)
    if set(blocks) != set(table):
        raise MultiplicityMismatch(f"{f.name}: irreducibles {sorted(blocks)} differ from the table {sorted(table)}")
    rows = []
    for label, block in blocks.items():
        vals = block.eigenvalues
        lead = [g(d) for g in table[label]]
        if len(vals) != len(lead):
            raise MultiplicityMismatch(f"{f.name}/{label}: {len(vals)} copies, table lists {len(lead)}")
        deg = degrees[label](d)
        if int(round(block.degree)) != deg:
            raise MultiplicityMismatch(f"{f.name}/{label}: degree {block.degree} differs from the table's {deg}")
        for v, ell in zip(vals, assign_leading(vals, lead)):
            rows.append(TableRow(label, int(deg), float(v), ell))
    check = TableCheck(f.name, d, sorted(rows, key=lambda row: row.value))
    if dense:
        raw = np.linalg.eigvalsh(hessian(lift(r)))
        expected = np.sort(np.concatenate([[row.value] * row.degree for row in check.rows]))
        if len(expected) != len(raw):
            raise MultiplicityMismatch(f"{f.name}: table multiplicities add up to {len(expected)}, Hessian has {len(raw)}")
        check.dense_deviation = float(np.abs(expected - raw).max())
        if check.dense_deviation > 1e-7 * max(1.0, np.abs(raw).max()):
            raise MultiplicityMismatch(
                f"{f.name}: dense eigenvalues deviate from the tabulated pattern by {check.dense_deviation:.2e}")
    return check


def fit_table_constant(family, ds) -> tuple[float, list[TableCheck]]:
    """Smallest ``C`` with ``residual <= C d^(-1/2)`` at every ``d`` in ``ds``."""
    checks = [spectrum_table_check(family, d) for d in ds]
    return max(c.scaled_residual for c in checks), checks


def spectral_distance(a: TableCheck, b: TableCheck) -> float:
    """Largest gap between eigenvalues of ``a`` and those of ``b`` sharing their leading value."""
    by_lead: dict[float, list[float]] = {}
    for row in b.rows:
        by_lead.setdefault(round(row.leading, 9), []).append(row.value)
    worst = 0.0
    for row in a.rows:
        near = by_lead.get(round(row.leading, 9))
        if near is None:
            raise KeyError(f"{b.family} has no eigenvalue with leading value {row.leading:.6g}")
        worst = max(worst, min(abs(row.value - v) for v in near))
    return worst


def agreement_constant(family_a, family_b, ds) -> tuple[float, list[float]]:
    """``C`` bounding the spectral distance by ``C d^(-1/2)`` over ``ds``, with the per-``d`` values of ``distance * sqrt(d)``."""
    scaled = []
    for d in ds:
        dist = spectral_distance(spectrum_table_check(family_a, d, dense=False), spectrum_table_check(family_b, d, dense=False))
        scaled.append(dist * math.sqrt(d))
    return max(scaled), scaled
