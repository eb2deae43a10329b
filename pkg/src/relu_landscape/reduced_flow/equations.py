"""Reduced critical-point equations ``F(a, d) = 0`` of the block families."""
from __future__ import annotations

import math

import numpy as np

from ..symmetry import ReducedPoint, coefficient_counts
from ._gradients import GRADIENTS
from .angles import reduced_angles


def reduced_grad(r: ReducedPoint, per_entry: bool = False):
    """Closed-form reduced gradient at ``r`` (second layer in the ``lambda = 1`` gauge).

    Entry ``i`` is the derivative of the loss along coefficient ``a_i``, i.e.
    the full gradient summed over the positions holding ``a_i``. With
    ``per_entry`` each sum is divided by its number of positions, giving the
    common value of the matrix gradient on that orbit.

    Returns a float array, or a list of mpmath numbers when ``r`` carries them.
    """
    s = reduced_angles(r)
    g = GRADIENTS[r.p](r.coeffs, r.d, s.symbols(), s.arith)
    if per_entry:
        g = [v / c for v, c in zip(g, coefficient_counts(r.p, r.d))]
    return np.array(g, dtype=float) if s.arith is math else g


def grad_inf_norm(r: ReducedPoint, per_entry: bool = False) -> float:
    return float(max(abs(v) for v in reduced_grad(r, per_entry)))
