"""Loss, gradient and Hessian on orbit-reduced ("cell") coordinates.

Partition the ``d`` indices into cells and keep only matrices that are
constant on the induced pattern: one diagonal value ``D_I`` and one
off-diagonal value ``O_I`` inside each cell ``I``, one value ``c_IJ`` on each
off-diagonal cell block, and one second-layer value per cell. The loss
restricted to this pattern depends on the cell sizes only through polynomial
weights, so it extends to real ``d``. Its Hessian, with the metric that
records how many matrix entries each coordinate stands for, is the full
Hessian restricted to the pattern.

Cells come from the two blocks of a template (``d - p`` and ``p`` indices);
each block may have a few single points split off, which is what the
representation-theoretic reductions in :mod:`relu_landscape.spectrum` need.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..gauss_kernel import PARALLEL_SIN_TOL
from ..symmetry import ReducedPoint, coeff_count


@dataclass(frozen=True)
class Cell:
    block: int
    point: int | None  # index of a split-off point, None for the remainder
    slope: int
    offset: int

    def size(self, d):
        return self.slope * d + self.offset

    @property
    def singleton(self) -> bool:
        return self.slope == 0 and self.offset == 1


class _Form:
    """Quadratic polynomial ``sum q_ij x_i x_j + sum l_i x_i + c`` (sparse)."""

    def __init__(self, quad=None, lin=None, const=0.0):
        self.quad = quad or {}
        self.lin = lin or {}
        self.const = const

    def add_quad(self, i, j, c):
        key = (min(i, j), max(i, j))
        self.quad[key] = self.quad.get(key, 0.0) + c

    def value(self, x):
        v = self.const
        for (i, j), c in self.quad.items():
            v += c * x[i] * x[j]
        for i, c in self.lin.items():
            v += c * x[i]
        return v

    def grad(self, x, n):
        g = np.zeros(n)
        for (i, j), c in self.quad.items():
            g[i] += c * x[j]
            g[j] += c * x[i]
        for i, c in self.lin.items():
            g[i] += c
        return g

    def hess(self, n):
        H = np.zeros((n, n))
        for (i, j), c in self.quad.items():
            H[i, j] += c
            H[j, i] += c
        return H


_CONST_ONE = _Form(const=1.0)


def _kappa_value(P, Q, R, m):
    """``E[relu(u.x) relu(v.x)]`` from ``|u|^2 = P``, ``|v|^2 = Q``, ``u.v = R``."""
    s = m.sqrt(max(P * Q - R * R, 0))
    theta = m.atan2(s, R)
    return (s + (m.pi - theta) * R) / (2 * m.pi)


def _kappa_derivs(P, Q, R):
    """Value, first derivatives and the second-derivative matrix split as
    ``regular + z z^T / (8 pi s)``; ``z`` is None for (anti)parallel pairs."""
    s = math.sqrt(max(P * Q - R * R, 0.0))
    theta = math.atan2(s, R)
    val = (s + (math.pi - theta) * R) / (2 * math.pi)
    first = np.array([s / (4 * math.pi * P), s / (4 * math.pi * Q), (math.pi - theta) / (2 * math.pi)])
    reg = np.diag([-s / (4 * math.pi * P**2), -s / (4 * math.pi * Q**2), s / (2 * math.pi * P * Q)])
    if s < PARALLEL_SIN_TOL * math.sqrt(P * Q):
        return val, first, reg, None
    z = np.array([math.sqrt(Q / P), math.sqrt(P / Q), -2 * R / math.sqrt(P * Q)]) / math.sqrt(8 * math.pi * s)
    return val, first, reg, z


@dataclass
class _Term:
    weight: float
    mono: tuple  # coordinate indices multiplied in front (second-layer values)
    forms: tuple  # (P,) for P/2, or (P, Q, R) for the kernel


class CellSystem:
    """Cells of the ``p``-split with ``splits[b]`` points split off block ``b``."""

    def __init__(self, p: int, splits=(0, 0)):
        self.p = p
        self.splits = tuple(splits)
        blocks = [(1, -p)] + ([(0, p)] if p else [])
        cells = []
        for b, (slope, offset) in enumerate(blocks):
            k = self.splits[b] if b < len(self.splits) else 0
            cells += [Cell(b, j, 0, 1) for j in range(k)]
            if slope or offset - k:
                cells.append(Cell(b, None, slope, offset - k))
        self.cells = tuple(cells)
        keys = []
        for i, c in enumerate(self.cells):
            keys.append(("D", i))
            if not c.singleton:
                keys.append(("O", i))
        keys += [("C", i, j) for i in range(len(cells)) for j in range(len(cells)) if i != j]
        keys += [("A", i) for i in range(len(cells))]
        self.keys = tuple(keys)
        self.index = {k: n for n, k in enumerate(keys)}

    def __len__(self):
        return len(self.keys)

    @property
    def n_first_layer(self) -> int:
        return sum(1 for k in self.keys if k[0] != "A")

    def sizes(self, d):
        return [c.size(d) for c in self.cells]

    def valid_at(self, d) -> bool:
        """Every non-singleton cell needs more than one element for the metric to be positive."""
        return all(c.singleton or c.size(d) > 1 for c in self.cells)

    def metric(self, d) -> np.ndarray:
        n = self.sizes(d)
        out = np.empty(len(self))
        for pos, key in enumerate(self.keys):
            if key[0] in ("D", "A"):
                out[pos] = n[key[1]]
            elif key[0] == "O":
                out[pos] = n[key[1]] * (n[key[1]] - 1)
            else:
                out[pos] = n[key[1]] * n[key[2]]
        return out

    # coordinates -----------------------------------------------------------

    def parent_map(self, coarse: "CellSystem") -> list[int]:
        """Index of the coarse cell containing each cell of ``self``."""
        out = []
        for c in self.cells:
            for j, cc in enumerate(coarse.cells):
                if cc.block != c.block:
                    continue
                if cc.point is not None and cc.point == c.point:
                    out.append(j)
                    break
                if cc.point is None and (c.point is None or c.point >= coarse.splits[c.block]):
                    out.append(j)
                    break
            else:
                raise ValueError("coarse system is not a coarsening of this one")
        return out

    def embedding(self, coarse: "CellSystem") -> np.ndarray:
        """Linear map from ``coarse`` coordinates to coordinates of ``self``."""
        par = self.parent_map(coarse)
        E = np.zeros((len(self), len(coarse)))
        for pos, key in enumerate(self.keys):
            kind = key[0]
            if kind == "C":
                I, J = par[key[1]], par[key[2]]
                src = ("O", I) if I == J else ("C", I, J)
            else:
                src = (kind, par[key[1]])
            E[pos, coarse.index[src]] = 1.0
        return E

    def permutation(self, perm: dict[int, int]) -> np.ndarray:
        """Coordinate action of a permutation of equal-sized cells."""
        def move(i):
            return perm.get(i, i)
        P = np.zeros((len(self), len(self)))
        for pos, key in enumerate(self.keys):
            new = (key[0],) + tuple(move(i) for i in key[1:])
            P[self.index[new], pos] = 1.0
        return P

    def from_coeffs(self, coeffs, alphas=None) -> np.ndarray:
        """Base-system coordinates of template coefficients (second layer 1 by default)."""
        if self.splits != (0, 0):
            raise ValueError("template coefficients live in the unsplit system")
        a = list(coeffs)
        if len(a) != coeff_count(self.p):
            raise ValueError(f"p={self.p} takes {coeff_count(self.p)} coefficients")
        x = [0.0] * len(self)
        x[self.index[("D", 0)]] = a[0]
        x[self.index[("O", 0)]] = a[1]
        if self.p:
            x[self.index[("C", 0, 1)]] = a[2]
            x[self.index[("C", 1, 0)]] = a[3]
            x[self.index[("D", 1)]] = a[4]
        if self.p >= 2:
            x[self.index[("O", 1)]] = a[5]
        alphas = [1.0] * len(self.cells) if alphas is None else alphas
        for i, v in enumerate(alphas):
            x[self.index[("A", i)]] = v
        return x

    def gauge_vectors(self, x) -> np.ndarray:
        """Columns are the per-cell scaling tangents at ``x``."""
        G = np.zeros((len(self), len(self.cells)))
        for pos, key in enumerate(self.keys):
            if key[0] == "A":
                G[pos, key[1]] = -x[pos]
            else:
                G[pos, key[1]] = x[pos]
        return G

    def row_cells(self, d: int) -> list[int]:
        """Cell of each index ``0..d-1`` at integer ``d`` (points first within a block)."""
        out = []
        for i, c in enumerate(self.cells):
            size = c.size(d)
            if size != int(size) or size < 0:
                raise ValueError(f"cell size {size} is not a count at d={d}")
            out += [i] * int(size)
        if len(out) != d:
            raise ValueError("cell sizes do not add up to d")
        # cells are listed block by block, points first, which matches the template order
        return out

    def full_embedding(self, d: int) -> np.ndarray:
        """Map from cell coordinates to flat ``(W, alpha)`` at integer ``d``."""
        cell_of = self.row_cells(d)
        E = np.zeros((d * d + d, len(self)))
        for i in range(d):
            I = cell_of[i]
            for j in range(d):
                J = cell_of[j]
                if i == j:
                    key = ("D", I)
                elif I == J:
                    key = ("O", I)
                else:
                    key = ("C", I, J)
                E[i * d + j, self.index[key]] = 1.0
            E[d * d + i, self.index[("A", I)]] = 1.0
        return E

    # loss ------------------------------------------------------------------

    def _terms(self, d):
        n = self.sizes(d)
        cells = self.cells
        r = len(cells)
        idx = self.index

        def D(I):
            return idx[("D", I)]

        def O(I):
            return idx.get(("O", I))

        def C(I, J):
            return idx[("C", I, J)]

        def A(I):
            return idx[("A", I)]

        P = []
        for I in range(r):
            f = _Form()
            f.add_quad(D(I), D(I), 1.0)
            if O(I) is not None:
                f.add_quad(O(I), O(I), n[I] - 1)
            for J in range(r):
                if J != I:
                    f.add_quad(C(I, J), C(I, J), n[J])
            P.append(f)

        terms = []
        for I in range(r):
            terms.append(_Term(n[I] / 2, (A(I), A(I)), (P[I],)))
            terms.append(_Term(-n[I], (A(I),), (P[I], _CONST_ONE, _Form(lin={D(I): 1.0}))))
            for J in range(r):
                if J != I:
                    terms.append(_Term(-n[I] * n[J], (A(I),), (P[I], _CONST_ONE, _Form(lin={C(I, J): 1.0}))))
            if O(I) is None:
                continue
            Rii = _Form()
            Rii.add_quad(D(I), O(I), 2.0)
            Rii.add_quad(O(I), O(I), n[I] - 2)
            for J in range(r):
                if J != I:
                    Rii.add_quad(C(I, J), C(I, J), n[J])
            terms.append(_Term(n[I] * (n[I] - 1) / 2, (A(I), A(I)), (P[I], P[I], Rii)))
            terms.append(_Term(-n[I] * (n[I] - 1), (A(I),), (P[I], _CONST_ONE, _Form(lin={O(I): 1.0}))))
        for I in range(r):
            for J in range(r):
                if I == J:
                    continue
                R = _Form()
                R.add_quad(C(J, I), D(I), 1.0)
                R.add_quad(C(I, J), D(J), 1.0)
                if O(I) is not None:
                    R.add_quad(C(J, I), O(I), n[I] - 1)
                if O(J) is not None:
                    R.add_quad(C(I, J), O(J), n[J] - 1)
                for K in range(r):
                    if K not in (I, J):
                        R.add_quad(C(I, K), C(J, K), n[K])
                terms.append(_Term(n[I] * n[J] / 2, (A(I), A(J)), (P[I], P[J], R)))
        const = 0.5 * (d / 2 + d * (d - 1) / (2 * math.pi))
        return terms, const

    def loss(self, x, d, m=math):
        """Loss at cell coordinates ``x``; ``m`` may be ``mpmath.mp``."""
        terms, _ = self._terms(d)
        total = (d / 2 + d * (d - 1) / (2 * m.pi)) / 2
        for t in terms:
            f = 1
            for i in t.mono:
                f = f * x[i]
            if len(t.forms) == 1:
                k = t.forms[0].value(x) / 2
            else:
                k = _kappa_value(*(F.value(x) for F in t.forms), m)
            total += t.weight * f * k
        return total

    def derivatives(self, x, d) -> tuple[float, np.ndarray, np.ndarray]:
        """Loss, gradient and Hessian in cell coordinates (float only)."""
        x = np.asarray(x, dtype=float)
        n = len(self)
        terms, const = self._terms(d)
        val, g, H = const, np.zeros(n), np.zeros((n, n))
        for t in terms:
            f, gf, Hf = 1.0, np.zeros(n), np.zeros((n, n))
            if len(t.mono) == 1:
                f = x[t.mono[0]]
                gf[t.mono[0]] = 1.0
            elif len(t.mono) == 2:
                i, j = t.mono
                f = x[i] * x[j]
                gf[i] += x[j]
                gf[j] += x[i]
                Hf[i, j] += 1.0
                Hf[j, i] += 1.0
            if len(t.forms) == 1:
                F = t.forms[0]
                k, gk, Hk = F.value(x) / 2, F.grad(x, n) / 2, F.hess(n) / 2
            else:
                vals = [F.value(x) for F in t.forms]
                k, first, reg, z = _kappa_derivs(*vals)
                J = np.stack([F.grad(x, n) for F in t.forms])
                gk = first @ J
                Hk = sum(c * F.hess(n) for c, F in zip(first, t.forms)) + J.T @ reg @ J
                if z is not None:
                    u = z @ J
                    Hk = Hk + np.outer(u, u)
            w = t.weight
            val += w * f * k
            g += w * (k * gf + f * gk)
            H += w * (k * Hf + np.outer(gf, gk) + np.outer(gk, gf) + f * Hk)
        return val, g, 0.5 * (H + H.T)


def base_system(p: int) -> CellSystem:
    return CellSystem(p)


def reduced_loss(r: ReducedPoint):
    """Loss at a template point for real ``d`` (mpmath in, mpmath out)."""
    from .angles import arith_for

    system = CellSystem(r.p)
    m = arith_for(list(r.coeffs) + [r.d])
    x = system.from_coeffs(r.coeffs, [1] * len(system.cells))
    return system.loss(x, r.d, m)
