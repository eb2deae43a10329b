"""Eigenvalue-versus-``d`` data along a family (integer ``d``)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..reduced_flow.solver import continue_in_d, solve_family
from .isotypic import rep_blocks


@dataclass(frozen=True)
class EigenRow:
    d: int
    value: float
    multiplicity: int
    rep_label: str


def eigenvalue_rows(family, d_lo: int, d_hi: int, d_seed: float = 64.0) -> list[EigenRow]:
    """Distinct Hessian eigenvalues with multiplicities for each integer ``d`` in ``[d_lo, d_hi]``."""
    if d_lo > d_hi:
        raise ValueError(f"empty range {d_lo}:{d_hi}")
    top = max(d_hi, int(d_seed))
    start = solve_family(family, top)
    path = continue_in_d(family, top, d_lo, top - d_lo, start=start) if top > d_lo else [start]
    rows = []
    for r in sorted(path, key=lambda r: r.d):
        d = int(round(float(r.d)))
        if d > d_hi:
            continue
        for label, block in rep_blocks(r).items():
            rows += [EigenRow(d, float(v), int(round(block.degree)), label) for v in block.eigenvalues]
    return rows


def growing_rows(rows: list[EigenRow], threshold_slope: float = 1 / 8) -> dict[str, float]:
    """Slopes of the eigenvalue branches that grow linearly in ``d``.

    Branches are followed by rank within each irreducible; those whose fitted
    slope exceeds ``threshold_slope`` are returned keyed ``label#rank``.
    """
    branches: dict[str, list[tuple[int, float]]] = {}
    per_d: dict[tuple[int, str], list[float]] = {}
    for row in rows:
        per_d.setdefault((row.d, row.rep_label), []).append(row.value)
    for (d, label), vals in per_d.items():
        for rank, v in enumerate(sorted(vals)):
            branches.setdefault(f"{label}#{rank}", []).append((d, v))
    out = {}
    for key, pts in branches.items():
        if len(pts) < 2:
            continue
        ds, vs = np.array(pts).T
        slope = np.polyfit(ds, vs, 1)[0]
        if slope > threshold_slope:
            out[key] = float(slope)
    return out
