"""Transition matrices: the Hessian acting on the copies of one irreducible."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..landscape import hessian
from ..reduced_flow.angles import reduced_angles
from ..symmetry import IsotropyFamily, ReducedPoint, lift
from ._transition import transition_entries
from .isotypic import lifted_basis, verify_invariant

# closed-form entries exist for these irreducibles at diagonal points
CLOSED_FORM = {"x_p": "x", "y_p": "y", "s_p": "s", "t": "t"}


@dataclass
class TransitionMatrix:
    rep_label: str
    entries: np.ndarray
    basis: str  # how the copies were chosen

    @property
    def q(self) -> int:
        return self.entries.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.sort(np.linalg.eigvals(self.entries).real)


def transition_matrix(r: ReducedPoint, rep_label: str, H: np.ndarray | None = None,
                      basis: np.ndarray | None = None) -> TransitionMatrix:
    """Expand the full Hessian image of each copy in the copy basis (integer ``d``).

    ``basis`` may replace the default orthonormal copies by any basis of the
    same span; the eigenvalues do not depend on the choice.
    """
    H = hessian(lift(r)) if H is None else H
    V = lifted_basis(r, rep_label) if basis is None else np.asarray(basis, dtype=float)
    coef = verify_invariant(H, V)
    return TransitionMatrix(rep_label, coef, "stabilizer-fixed copies" if basis is None else "custom")


def closed_form_transition(r: ReducedPoint, rep_label: str) -> TransitionMatrix:
    """Closed-form entries at a diagonal point, evaluated from its angles (real ``d``)."""
    if r.family is not IsotropyFamily.FULL_DIAG:
        raise ValueError("closed-form transition matrices are tabulated for the diagonal families only")
    if rep_label not in CLOSED_FORM:
        raise KeyError(f"no closed form for {rep_label!r}")
    s = reduced_angles(r)
    T = transition_entries(CLOSED_FORM[rep_label], list(r.coeffs), r.d, s.symbols(), s.arith)
    return TransitionMatrix(rep_label, np.array([[float(v) for v in row] for row in T]), "closed form")


def closed_form_ok(r: ReducedPoint) -> bool:
    """The closed forms carry ``1/sin`` factors that vanish at the identity point."""
    s = reduced_angles(r)
    return all(abs(math.sin(float(v))) > 1e-6 for v in list(s.alpha_angles.values()) + list(s.beta_angles.values()))
