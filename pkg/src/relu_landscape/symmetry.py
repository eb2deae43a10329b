"""Permutation symmetry of weight matrices and the block fixed-point subspaces.

A weight matrix fixed by the diagonal action of ``S_{d-p} x S_p`` (the same
permutation applied to rows and columns, block-wise) has the template::

    [ A_{d-p}(a1, a2) | a3 ]
    [ a4              | A_p(a5, a6) ]

where ``A_n(x, y)`` has ``x`` on the diagonal and ``y`` elsewhere. Such a
matrix is described by ``m = 2, 5, 6, 6`` coefficients for ``p = 0..3``.
"""
from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .landscape import NetworkPair


class IsotropyFamily(enum.Enum):
    FULL_DIAG = 0
    SPLIT_1 = 1
    SPLIT_2 = 2
    SPLIT_3 = 3
    TRIVIAL = "trivial"
    OTHER = "other"

    @property
    def p(self) -> int | None:
        return self.value if isinstance(self.value, int) else None

    @property
    def named(self) -> bool:
        return self.p is not None

    @classmethod
    def from_p(cls, p: int) -> "IsotropyFamily":
        return {0: cls.FULL_DIAG, 1: cls.SPLIT_1, 2: cls.SPLIT_2, 3: cls.SPLIT_3}[p]


# canonical CLI names of the block classes
CLASS_NAMES = {
    "full_diag": IsotropyFamily.FULL_DIAG,
    "split1": IsotropyFamily.SPLIT_1,
    "split2": IsotropyFamily.SPLIT_2,
    "split3": IsotropyFamily.SPLIT_3,
}


@dataclass(frozen=True)
class IsotropyClass:
    """Detected symmetry class.

    ``conjugators = (rows, cols)`` maps an observed matrix into canonical
    block form: ``W[rows][:, cols]`` lies in the template.
    """

    family: IsotropyFamily
    conjugators: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def p(self) -> int | None:
        return self.family.p

    def canonical(self, W) -> np.ndarray:
        W = np.asarray(W)
        if self.conjugators is None:
            return W
        rows, cols = self.conjugators
        return W[np.ix_(rows, cols)]


def coeff_count(p: int) -> int:
    return (2, 5, 6, 6)[p]


@dataclass
class ReducedPoint:
    """A point of a fixed-point subspace, with ``d`` allowed to be real."""

    family: IsotropyFamily
    coeffs: tuple
    d: float
    lambdas: np.ndarray | None = None
    residual: float | None = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.family, IsotropyClass):
            self.family = self.family.family
        if not self.family.named:
            raise ValueError(f"{self.family} has no fixed-point template")
        self.coeffs = tuple(self.coeffs)
        m = coeff_count(self.p)
        if len(self.coeffs) != m:
            raise ValueError(f"family p={self.p} takes {m} coefficients, got {len(self.coeffs)}")
        if not self.d > self.p + 1:
            raise ValueError(f"d must exceed p+1={self.p + 1}, got {self.d}")

    @property
    def p(self) -> int:
        return self.family.p

    def as_floats(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])


def template(p: int, coeffs, d: int) -> np.ndarray:
    """The ``d x d`` matrix of the ``p``-split template."""
    if int(d) != d:
        raise ValueError("a matrix needs an integer dimension")
    d = int(d)
    if len(coeffs) != coeff_count(p):
        raise ValueError(f"p={p} takes {coeff_count(p)} coefficients")
    a = [float(c) for c in coeffs] + [0.0] * (6 - len(coeffs))
    n = d - p
    W = np.empty((d, d))
    W[:n, :n] = a[1]
    W[:n, n:] = a[2]
    W[n:, :n] = a[3]
    W[n:, n:] = a[5]
    idx = np.arange(d)
    W[idx[:n], idx[:n]] = a[0]
    W[idx[n:], idx[n:]] = a[4]
    return W


def coefficient_counts(p: int, d) -> list:
    """Number of matrix positions holding each coefficient (``d`` may be real)."""
    n = d - p
    return [n, n * (n - 1), n * p, p * n, p, p * (p - 1)][: coeff_count(p)]


def coefficient_masks(p: int, d: int) -> list[np.ndarray]:
    """Boolean masks of the positions holding each coefficient."""
    m = coeff_count(p)
    out = []
    for i in range(m):
        unit = [0.0] * m
        unit[i] = 1.0
        out.append(template(p, unit, d) != 0.0)
    return out


def _canonical_positions(p: int, d: int):
    # (row, col) read for a1..a6
    pos = [(0, 0), (0, 1), (0, d - 1), (d - 1, 0), (d - 1, d - 1), (d - 2, d - 1)]
    return pos[: coeff_count(p)]


def lift(r: ReducedPoint) -> NetworkPair:
    """Matrix ``Diag(lambda) W_p(a)`` with second layer ``1 / lambda``."""
    W = template(r.p, r.as_floats(), r.d)
    lam = np.ones(W.shape[0]) if r.lambdas is None else np.asarray(r.lambdas, float)
    return NetworkPair(lam[:, None] * W, 1.0 / lam)


def reduce(pair: NetworkPair, cls: IsotropyClass | IsotropyFamily, tol: float = 1e-9) -> ReducedPoint:
    """Read template coefficients off a matrix that lies in the subspace.

    The second layer is absorbed first (``W <- Diag(alpha) W``), so the
    result is the ``lambda = 1`` gauge representative; the original row scales
    are kept in ``lambdas``.
    """
    if isinstance(cls, IsotropyFamily):
        cls = IsotropyClass(cls)
    if not cls.family.named:
        raise ValueError(f"{cls.family} has no fixed-point template")
    if np.any(pair.alpha <= 0):
        raise ValueError("gauge normalisation needs a positive second layer")
    W = cls.canonical(pair.alpha[:, None] * pair.W)
    d = W.shape[0]
    coeffs = tuple(float(W[i, j]) for i, j in _canonical_positions(cls.p, d))
    dev = np.abs(template(cls.p, coeffs, d) - W).max()
    if dev > tol * max(1.0, np.abs(W).max()):
        raise ValueError(f"matrix is not in the p={cls.p} subspace (deviation {dev:.3e})")
    lam = 1.0 / pair.alpha
    if cls.conjugators is not None:
        lam = lam[list(cls.conjugators[0])]
    return ReducedPoint(cls.family, coeffs, d, lam)


def multiplicity(cls: IsotropyClass | IsotropyFamily, d: int) -> int:
    """Size of the ``S_d x S_d`` orbit: ``d! d! / ((d-p)! p!) = d! C(d, p)``."""
    fam = cls.family if isinstance(cls, IsotropyClass) else cls
    if not fam.named:
        raise ValueError(f"multiplicity is only defined for the named families, not {fam}")
    return math.factorial(d) * math.comb(d, fam.p)


def orbit_size_bruteforce(W, decimals: int = 12) -> int:
    """Count distinct ``P_pi W P_rho^T`` over all of ``S_d x S_d`` (tiny ``d`` only)."""
    W = np.asarray(W)
    d = W.shape[0]
    if d > 6:
        raise ValueError("brute-force enumeration is limited to d <= 6")
    seen = set()
    perms = [list(q) for q in itertools.permutations(range(d))]
    for pi in perms:
        Wp = W[pi]
        for rho in perms:
            seen.add(np.round(Wp[:, rho], decimals).tobytes())
    return len(seen)


def project_to_subspace(G, cls: IsotropyClass | IsotropyFamily) -> np.ndarray:
    """Orthogonal projection onto the fixed-point subspace.

    Averaging over the group replaces every entry by the mean over its orbit
    of positions, which is what is computed here.
    """
    if isinstance(cls, IsotropyFamily):
        cls = IsotropyClass(cls)
    G = np.asarray(G, dtype=float)
    d = G.shape[0]
    Gc = cls.canonical(G)
    out = np.empty_like(Gc)
    for mask in coefficient_masks(cls.p, d):
        vals = Gc[mask]
        # constant orbits are kept as they are so that projecting twice is exact
        out[mask] = vals[0] if np.all(vals == vals[0]) else vals.mean()
    if cls.conjugators is None:
        return out
    rows, cols = cls.conjugators
    back = np.empty_like(out)
    back[np.ix_(rows, cols)] = out
    return back


def _bucket_labels(W, tol):
    """Integer labels such that entries within ``tol`` chains share a label."""
    flat = W.ravel()
    order = np.argsort(flat)
    labels = np.empty(flat.size, dtype=int)
    current = 0
    for pos, idx in enumerate(order):
        if pos and flat[idx] - flat[order[pos - 1]] > tol:
            current += 1
        labels[idx] = current
    return labels.reshape(W.shape)


def _signature_classes(labels):
    classes: dict[tuple, list[int]] = {}
    for i, row in enumerate(labels):
        classes.setdefault(tuple(sorted(Counter(row.tolist()).items())), []).append(i)
    return list(classes.values())


def _split(classes, n, p):
    """Pick (block-1 members, block-2 members) from signature classes."""
    if p == 0:
        return (classes[0], []) if len(classes) == 1 else None
    if len(classes) != 2:
        return None
    a, b = classes
    if len(a) == n and len(b) == p:
        return a, b
    if len(b) == n and len(a) == p:
        return b, a
    return None


def _diagonal_match(labels, W, rows, cols, prefer_large):
    """Match every row to the column holding its 'diagonal' label.

    Candidate diagonal labels appear exactly once per row, at distinct
    columns. With several candidates the one of largest magnitude wins when
    ``prefer_large`` is set, otherwise the match is rejected.
    """
    if len(rows) == 1:
        return {rows[0]: cols[0]}
    sub = labels[np.ix_(rows, cols)]
    candidates = []
    for lab in np.unique(sub):
        hits = [np.flatnonzero(row == lab) for row in sub]
        if all(h.size == 1 for h in hits):
            picked = [cols[h[0]] for h in hits]
            if len(set(picked)) == len(picked):
                mag = np.abs(W[rows[0], picked[0]])
                candidates.append((mag, dict(zip(rows, picked))))
    if not candidates:
        return None
    if len(candidates) > 1 and not prefer_large:
        return None
    candidates.sort(key=lambda c: -c[0])
    return candidates[0][1]


def _try_template(W, labels, p, tol):
    d = W.shape[0]
    n = d - p
    rsplit = _split(_signature_classes(labels), n, p)
    csplit = _split(_signature_classes(labels.T), n, p)
    if rsplit is None or csplit is None:
        return None
    (r1, r2), (c1, c2) = rsplit, csplit
    m1 = _diagonal_match(labels, W, sorted(r1), sorted(c1), prefer_large=False)
    if m1 is None:
        return None
    rows = sorted(r1)
    cols = [m1[r] for r in rows]
    if p:
        m2 = _diagonal_match(labels, W, sorted(r2), sorted(c2), prefer_large=True)
        if m2 is None:
            return None
        rows2 = sorted(r2)
        rows += rows2
        cols += [m2[r] for r in rows2]
    Wc = W[np.ix_(rows, cols)]
    coeffs = [Wc[i, j] for i, j in _canonical_positions(p, d)]
    if np.abs(template(p, coeffs, d) - Wc).max() > tol:
        return None
    return tuple(rows), tuple(cols)


def detect_isotropy(W, tol: float = 1e-8) -> IsotropyClass:
    """Largest block isotropy (smallest ``p <= 3``) fixing ``W`` up to ``tol``.

    Entries are bucketed by value, rows and columns are grouped by their
    multiset of buckets, and each block template is tested in turn. For
    ``p = 2`` the two block-2 diagonal assignments are equivalent; the one
    with ``|a5| >= |a6|`` is reported.
    """
    W = np.asarray(W, dtype=float)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise ValueError("detect_isotropy expects a square matrix")
    d = W.shape[0]
    labels = _bucket_labels(W, tol)
    for p in range(4):
        if d - p < 2:
            break
        conj = _try_template(W, labels, p, tol)
        if conj is not None:
            return IsotropyClass(IsotropyFamily.from_p(p), conj)
    rows_distinct = len(_signature_classes(labels)) == d
    cols_distinct = len(_signature_classes(labels.T)) == d
    return IsotropyClass(IsotropyFamily.TRIVIAL if rows_distinct and cols_distinct else IsotropyFamily.OTHER)
