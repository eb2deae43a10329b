"""Isotypic reduction of the Hessian at block-symmetric points.

At a point fixed by ``S_n x S_q`` (``n = d - q`` rows in the large block,
``q`` in the small one) the Hessian commutes with the group, so each
irreducible contributes one small symmetric matrix whose eigenvalues are
Hessian eigenvalues of multiplicity equal to the irreducible's degree.

One copy of each irreducible is located through vectors fixed by the
stabilizer of one or two points: split those points off into their own
cells, keep the part that is symmetric or antisymmetric under swapping them,
and remove what the coarser splittings already account for. Everything is
done in cell coordinates, so ``d`` may be real.

Labels: ``t`` trivial; ``s_p``, ``x_p``, ``y_p`` the standard, exterior-square
and two-row ``(n-2, 2)`` irreducibles of the large block; ``s_q``, ``x_q``
their small-block counterparts; ``s_p⊗s_q`` the product of the two standard
irreducibles.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..families import FamilySpec, get_family
from ..reduced_flow.cells import CellSystem
from ..symmetry import IsotropyFamily, ReducedPoint, lift

# singular values below this (relative) are treated as zero when forming bases
RANK_TOL = 1e-9
# representative vectors whose Hessian image leaves their span by more than this are rejected
LEAK_TOL = 1e-8


class IsotypicLeakError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Rep:
    label: str
    splits: tuple[int, int]
    degree: Callable[[float, int], float]  # (n, q) -> degree
    min_q: int = 0
    max_q: int = 3


REPS = (
    Rep("t", (0, 0), lambda n, q: 1),
    Rep("s_p", (1, 0), lambda n, q: n - 1),
    Rep("x_p", (2, 0), lambda n, q: (n - 1) * (n - 2) / 2),
    Rep("y_p", (2, 0), lambda n, q: n * (n - 3) / 2),
    Rep("s_q", (0, 1), lambda n, q: q - 1, min_q=2),
    Rep("x_q", (0, 2), lambda n, q: (q - 1) * (q - 2) / 2, min_q=3),
    Rep("s_p⊗s_q", (1, 1), lambda n, q: (n - 1) * (q - 1), min_q=2),
)
REP_LABELS = tuple(r.label for r in REPS)


def reps_for(q: int) -> list[Rep]:
    return [r for r in REPS if r.min_q <= q <= r.max_q]


def _point_cell(system: CellSystem, block: int, point: int) -> int:
    for i, c in enumerate(system.cells):
        if c.block == block and c.point == point:
            return i
    raise KeyError((block, point))


def _swap(system: CellSystem, block: int) -> np.ndarray:
    a, b = _point_cell(system, block, 0), _point_cell(system, block, 1)
    return system.permutation({a: b, b: a})


def _candidates(rep: Rep, system: CellSystem) -> tuple[np.ndarray, np.ndarray]:
    """Columns spanning the stabilizer-fixed vectors of ``rep`` plus what must be removed from them."""
    q = system.p
    n = len(system)
    eye = np.eye(n)
    if rep.label == "t":
        return eye, np.zeros((n, 0))
    if rep.label in ("s_p", "s_q"):
        return eye, system.embedding(CellSystem(q))
    if rep.label == "s_p⊗s_q":
        return eye, np.hstack([system.embedding(CellSystem(q, (1, 0))), system.embedding(CellSystem(q, (0, 1)))])
    block = 0 if rep.label.endswith("_p") else 1
    sigma = _swap(system, block)
    one = CellSystem(q, (1, 0) if block == 0 else (0, 1))
    E1 = system.embedding(one)
    if rep.label.startswith("x"):
        return eye - sigma, (eye - sigma) @ E1
    return eye + sigma, np.hstack([system.embedding(CellSystem(q)), (eye + sigma) @ E1])


def _orth(A: np.ndarray, scale: float | None = None) -> np.ndarray:
    """Orthonormal basis of the column space; singular values below ``RANK_TOL * scale`` are dropped."""
    if A.shape[1] == 0:
        return A
    u, sv, _ = np.linalg.svd(A, full_matrices=False)
    ref = sv[0] if scale is None and sv.size else scale
    if not ref:
        return u[:, :0]
    return u[:, sv > RANK_TOL * ref]


def _roots(system: CellSystem, d) -> tuple[np.ndarray, np.ndarray]:
    """Square roots of the metric and their inverses; coordinates with no entries get zero."""
    m = system.metric(d)
    if np.any(m < 0):
        raise ValueError(f"negative cell size at d={d}")
    root = np.sqrt(m)
    return root, np.divide(1.0, root, out=np.zeros_like(root), where=root > 0)


def occurs(rep: Rep, q: int, d) -> bool:
    """Whether ``rep`` has positive degree at ``d`` and its cell sizes are admissible."""
    if not rep.min_q <= q <= rep.max_q or rep.degree(d - q, q) <= 1e-12:
        return False
    return bool(np.all(CellSystem(q, rep.splits).metric(d) >= 0))


def rep_basis(q: int, label: str, d) -> tuple[CellSystem, np.ndarray]:
    """Cell system for ``label`` and an orthonormal basis (in metric-scaled coordinates) of its copies."""
    rep = next(r for r in reps_for(q) if r.label == label)
    if not occurs(rep, q, d):
        raise ValueError(f"representation {label} does not occur at d={d}")
    system = CellSystem(q, rep.splits)
    root, _ = _roots(system, d)
    C, B = _candidates(rep, system)
    Cs, Bs = _orth(root[:, None] * C), _orth(root[:, None] * B)
    residual = Cs - Bs @ (Bs.T @ Cs)
    return system, _orth(residual, scale=1.0)


@dataclass
class RepBlock:
    label: str
    degree: float
    matrix: np.ndarray  # symmetric, in the orthonormal copy basis
    gauge: np.ndarray  # orthonormal columns spanning gauge directions inside the block

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def nongauge_eigenvalues(self) -> np.ndarray:
        """Eigenvalues on the complement of the scaling directions."""
        if self.gauge.shape[1] == 0:
            return self.eigenvalues
        u, _, _ = np.linalg.svd(self.gauge, full_matrices=True)
        Q = u[:, self.gauge.shape[1]:]
        return np.linalg.eigvalsh(Q.T @ self.matrix @ Q)


def _base_coords(r: ReducedPoint) -> tuple[CellSystem, list[float]]:
    base = CellSystem(r.p)
    return base, base.from_coeffs([float(c) for c in r.coeffs])


def rep_blocks(r: ReducedPoint, labels=None, first_layer_only: bool = False) -> dict[str, RepBlock]:
    """Per-irreducible Hessian blocks at ``r`` (second layer 1), for real ``d``.

    With ``first_layer_only`` the blocks are those of the Hessian restricted
    to the first layer, which has no scaling directions.
    """
    d = float(r.d)
    q = r.p
    base, x0 = _base_coords(r)
    out = {}
    for rep in reps_for(q):
        if labels is not None and rep.label not in labels:
            continue
        if not occurs(rep, q, d):
            continue
        system, V = rep_basis(q, rep.label, d)
        if V.shape[1] == 0:
            continue
        x = system.embedding(base) @ np.asarray(x0)
        _, _, H = system.derivatives(x, d)
        root, inv_root = _roots(system, d)
        Hs = inv_root[:, None] * H * inv_root[None, :]
        Gs = root[:, None] * system.gauge_vectors(x)
        if first_layer_only:
            first = np.array([k[0] != "A" for k in system.keys])
            V = _orth(V * first[:, None], scale=1.0)
            Gs = np.zeros((len(system), 0))
            if V.shape[1] == 0:
                continue
        T = V.T @ Hs @ V
        G = _orth(V.T @ Gs, scale=np.linalg.norm(Gs, 2)) if Gs.shape[1] else np.zeros((V.shape[1], 0))
        out[rep.label] = RepBlock(rep.label, rep.degree(d - q, q), 0.5 * (T + T.T), G)
    return out


def rep_spectrum(r: ReducedPoint, exclude_gauge: bool = False) -> list[tuple[float, float, str]]:
    """``(eigenvalue, multiplicity, label)`` triples from the isotypic route."""
    out = []
    for label, block in rep_blocks(r).items():
        vals = block.nongauge_eigenvalues() if exclude_gauge else block.eigenvalues
        out += [(float(v), block.degree, label) for v in vals]
    return sorted(out)


def min_nongauge_eigenvalue(r: ReducedPoint) -> float:
    return min(v for v, _, _ in rep_spectrum(r, exclude_gauge=True))


# representative vectors in the full parameter space ----------------------------


def exterior_square_pattern(d: int) -> np.ndarray:
    """Antisymmetric matrix supported on rows and columns ``0`` and ``d-1`` with zero line sums."""
    X = np.zeros((d, d))
    X[0, 1:-1] = 1.0
    X[1:-1, 0] = -1.0
    X[1:-1, -1] = 1.0
    X[-1, 1:-1] = -1.0
    X[0, -1] = -(d - 2)
    X[-1, 0] = d - 2
    return X


def two_row_pattern(d: int) -> np.ndarray:
    """Symmetric zero-diagonal matrix in the ``(d-2, 2)`` irreducible with zero line sums."""
    Y = np.zeros((d, d))
    Y[0, 1], Y[1, 0] = d - 3, d - 3
    Y[0, 2], Y[2, 0] = 3 - d, 3 - d
    Y[1, 3:], Y[3:, 1] = -1.0, -1.0
    Y[2, 3:], Y[3:, 2] = 1.0, 1.0
    return Y


def _with_zero_second_layer(M: np.ndarray) -> np.ndarray:
    return np.concatenate([M.ravel(), np.zeros(M.shape[0])])


def lifted_basis(r: ReducedPoint, label: str) -> np.ndarray:
    """Columns: full-space vectors, one per copy of ``label``, orthonormal (integer ``d`` only)."""
    d = int(round(float(r.d)))
    if d != float(r.d):
        raise ValueError("full-space vectors need an integer d")
    system, V = rep_basis(r.p, label, d)
    _, inv_root = _roots(system, d)
    return system.full_embedding(d) @ (inv_root[:, None] * V)


def verify_invariant(H: np.ndarray, vectors: np.ndarray, tol: float = LEAK_TOL) -> np.ndarray:
    """Coefficients ``C`` with ``H V = V C``; raises if the image leaves ``span(V)``."""
    image = H @ vectors
    coef, *_ = np.linalg.lstsq(vectors, image, rcond=None)
    leak = np.linalg.norm(image - vectors @ coef)
    scale = max(np.linalg.norm(image), np.linalg.norm(H, 2) * np.linalg.norm(vectors))
    if leak > tol * scale:
        raise IsotypicLeakError(f"Hessian image leaves the representative span (relative leak {leak / scale:.2e})")
    return coef


def representative_vectors(family: FamilySpec | str, d: int, point: ReducedPoint | None = None,
                           hessian: np.ndarray | None = None) -> dict[str, list[np.ndarray]]:
    """One flat ``(W, alpha)`` vector per copy of each irreducible at the family point.

    For the diagonal families the single copies of the exterior-square and
    two-row irreducibles are the explicit zero-line-sum patterns. Every set is
    checked to be Hessian-invariant.
    """
    from ..landscape import hessian as dense_hessian
    from ..reduced_flow.solver import solve_family

    f = get_family(family) if isinstance(family, str) else family
    if d < 9:
        raise ValueError("representative vectors are built for d >= 9")
    r = point if point is not None else solve_family(f, d)
    H = dense_hessian(lift(r)) if hessian is None else hessian
    out = {}
    for rep in reps_for(r.p):
        if not occurs(rep, r.p, d):
            continue
        if f.isotropy is IsotropyFamily.FULL_DIAG and rep.label == "x_p":
            cols = _with_zero_second_layer(exterior_square_pattern(d))[:, None]
        elif f.isotropy is IsotropyFamily.FULL_DIAG and rep.label == "y_p":
            cols = _with_zero_second_layer(two_row_pattern(d))[:, None]
        else:
            cols = lifted_basis(r, rep.label)
        verify_invariant(H, cols)
        out[rep.label] = [cols[:, k].copy() for k in range(cols.shape[1])]
    return out
