"""Expected squared loss of a two-layer ReLU student against a ReLU teacher.

With ``x ~ N(0, I_d)`` the loss is::

    L(W, alpha) = 1/2 E[(sum_i alpha_i relu(w_i.x) - sum_j beta_j relu(v_j.x))^2]
                = 1/2 sum_ij alpha_i alpha_j k(w_i, w_j)
                  - sum_ij alpha_i beta_j k(w_i, v_j)
                  + 1/2 sum_ij beta_i beta_j k(v_i, v_j)

Parameters are flattened row-major ``W`` first, then ``alpha``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gauss_kernel import PARALLEL_SIN_TOL, TWO_PI, KernelDomainError, kernel_matrix


@dataclass(frozen=True)
class FlatIndex:
    """Layout of ``(W, alpha)`` inside one vector of length ``k*d + k``."""

    k: int
    d: int

    @property
    def size(self) -> int:
        return self.k * self.d + self.k

    def w_pos(self, i: int, j: int) -> int:
        return i * self.d + j

    def alpha_pos(self, i: int) -> int:
        return self.k * self.d + i

    def join(self, W, alpha) -> np.ndarray:
        return np.concatenate([np.asarray(W, float).ravel(), np.asarray(alpha, float)])

    def split(self, x) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(x, float)
        if x.shape != (self.size,):
            raise ValueError(f"expected a vector of length {self.size}, got {x.shape}")
        kd = self.k * self.d
        return x[:kd].reshape(self.k, self.d).copy(), x[kd:].copy()


@dataclass
class NetworkPair:
    """Student ``(W, alpha)`` and teacher ``(V, beta)``; ``V=I`` and ``beta=1`` by default."""

    W: np.ndarray
    alpha: np.ndarray
    V: np.ndarray | None = None
    beta: np.ndarray | None = None

    def __post_init__(self):
        self.W = np.array(self.W, dtype=float)
        self.alpha = np.array(self.alpha, dtype=float)
        if self.W.ndim != 2:
            raise ValueError("W must be a matrix")
        k, d = self.W.shape
        self.V = np.eye(d) if self.V is None else np.array(self.V, dtype=float)
        self.beta = np.ones(self.V.shape[0]) if self.beta is None else np.array(self.beta, dtype=float)
        if self.alpha.shape != (k,):
            raise ValueError(f"alpha must have length {k}, got {self.alpha.shape}")
        if self.V.shape != (d, d):
            raise ValueError(f"V must be {d}x{d}, got {self.V.shape}")
        if self.beta.shape != (d,):
            raise ValueError(f"beta must have length {d}, got {self.beta.shape}")
        if np.any(np.linalg.norm(self.W, axis=1) == 0.0) or np.any(np.linalg.norm(self.V, axis=1) == 0.0):
            raise KernelDomainError("zero rows make the angles undefined")

    @property
    def k(self) -> int:
        return self.W.shape[0]

    @property
    def d(self) -> int:
        return self.W.shape[1]

    @property
    def index(self) -> FlatIndex:
        return FlatIndex(self.k, self.d)

    @cached_property
    def teacher_constant(self) -> float:
        """The parameter-free term ``1/2 beta^T K(V, V) beta``."""
        KV = kernel_matrix(self.V, self.V)
        np.fill_diagonal(KV, 0.5 * np.sum(self.V**2, axis=1))
        return 0.5 * float(self.beta @ KV @ self.beta)

    def flat(self) -> np.ndarray:
        return self.index.join(self.W, self.alpha)

    def with_flat(self, x) -> "NetworkPair":
        W, alpha = self.index.split(x)
        out = NetworkPair(W, alpha, self.V, self.beta)
        out.__dict__["teacher_constant"] = self.teacher_constant
        return out


def _pairs(U, V):
    """Norms, unit rows, cosines, sines and angles for all row pairs."""
    nu = np.linalg.norm(U, axis=1)
    nv = np.linalg.norm(V, axis=1)
    Uh = U / nu[:, None]
    Vh = V / nv[:, None]
    cos = np.clip(Uh @ Vh.T, -1.0, 1.0)
    theta = np.arccos(cos)
    return nu, nv, Uh, Vh, cos, np.sin(theta), theta


def _student_kernel(W):
    K = kernel_matrix(W, W)
    np.fill_diagonal(K, 0.5 * np.sum(W**2, axis=1))
    return K


def loss(p: NetworkPair) -> float:
    """Closed-form expected squared loss."""
    K = _student_kernel(p.W)
    Kt = kernel_matrix(p.W, p.V)
    return float(0.5 * p.alpha @ K @ p.alpha - p.alpha @ Kt @ p.beta + p.teacher_constant)


def _kernel_grads(W, V, weights, exclude_diag):
    """Rows ``sum_j weights[i, j] * grad_u k(w_i, v_j)``."""
    nu, nv, Uh, _, _, sin, theta = _pairs(W, V)
    c = weights.copy()
    if exclude_diag:
        np.fill_diagonal(c, 0.0)
    radial = (c * nv[None, :] * sin).sum(axis=1)
    return (radial[:, None] * Uh + (c * (np.pi - theta)) @ V) / TWO_PI


def grad(p: NetworkPair) -> np.ndarray:
    """Analytic gradient over ``(W, alpha)`` in flat layout."""
    W, a, V, b = p.W, p.alpha, p.V, p.beta
    gW = a[:, None] * _kernel_grads(W, W, np.outer(np.ones_like(a), a), True)
    gW += 0.5 * (a**2)[:, None] * W
    gW -= a[:, None] * _kernel_grads(W, V, np.outer(np.ones_like(a), b), False)
    ga = _student_kernel(W) @ a - kernel_matrix(W, V) @ b
    return p.index.join(gW, ga)


def _hess_uu_sum(u, nu, uh, Vs, nvs, coefs):
    """``sum_j coefs[j] * d2 k(u, v_j) / du2`` for rows ``Vs``."""
    vh = Vs / nvs[:, None]
    cos = np.clip(vh @ uh, -1.0, 1.0)
    sin = np.sqrt(np.maximum(1.0 - cos**2, 0.0))
    scale = coefs * nvs / (TWO_PI * nu)
    dim = u.size
    out = (scale * sin).sum() * (np.eye(dim) - np.outer(uh, uh))
    ok = sin >= PARALLEL_SIN_TOL
    if np.any(ok):
        r = vh[ok] - cos[ok, None] * uh[None, :]
        out += (r.T * (scale[ok] / sin[ok])) @ r
    return out


def _hess_uv_rows(uh, Vs, nvs):
    """Stack of mixed blocks ``d2 k(u, v_j) / du dv_j`` for every row ``v_j``."""
    vh = Vs / nvs[:, None]
    cos = np.clip(vh @ uh, -1.0, 1.0)
    theta = np.arccos(cos)
    sin = np.sin(theta)
    dim = uh.size
    blocks = (np.pi - theta)[:, None, None] * np.eye(dim)[None]
    blocks += sin[:, None, None] * np.einsum("i,jk->jik", uh, vh)
    ok = sin >= PARALLEL_SIN_TOL
    if np.any(ok):
        r_u = vh[ok] - cos[ok, None] * uh[None, :]
        r_v = uh[None, :] - cos[ok, None] * vh[ok]
        blocks[ok] += np.einsum("ji,jk->jik", r_u, r_v) / sin[ok, None, None]
    return blocks / TWO_PI


def hessian(p: NetworkPair) -> np.ndarray:
    """Analytic Hessian over ``(W, alpha)``; row blocks are assembled one neuron at a time."""
    W, a, V, b = p.W, p.alpha, p.V, p.beta
    k, d = W.shape
    idx = p.index
    H = np.zeros((idx.size, idx.size))
    nw = np.linalg.norm(W, axis=1)
    nv = np.linalg.norm(V, axis=1)
    Wh = W / nw[:, None]
    _, _, _, _, _, sin_ww, theta_ww = _pairs(W, W)
    _, _, _, _, _, sin_wv, theta_wv = _pairs(W, V)
    kd = k * d
    for i in range(k):
        rows = slice(i * d, (i + 1) * d)
        others = np.arange(k) != i
        block = 0.5 * a[i] ** 2 * np.eye(d)
        block += _hess_uu_sum(W[i], nw[i], Wh[i], W[others], nw[others], a[i] * a[others])
        block -= _hess_uu_sum(W[i], nw[i], Wh[i], V, nv, a[i] * b)
        H[rows, rows] = block
        mixed = _hess_uv_rows(Wh[i], W, nw) * (a[i] * a)[:, None, None]
        for j in np.flatnonzero(others):
            H[rows, j * d:(j + 1) * d] = mixed[j]
        # gradient of k(w_i, w_j) in w_i, for every j
        gk = (nw[None, :] * sin_ww[i][None, :] * Wh[i][:, None] + (np.pi - theta_ww[i])[None, :] * W.T) / TWO_PI
        gt = (nv[None, :] * sin_wv[i][None, :] * Wh[i][:, None] + (np.pi - theta_wv[i])[None, :] * V.T) / TWO_PI
        col = gk[:, others] @ a[others] + a[i] * W[i] - gt @ b
        H[rows, kd + i] = col
        for j in np.flatnonzero(others):
            H[rows, kd + j] = a[i] * gk[:, j]
    H[kd:, :kd] = H[:kd, kd:].T
    H[kd:, kd:] = _student_kernel(W)
    return 0.5 * (H + H.T)


def scaling_tangents(p: NetworkPair) -> np.ndarray:
    """Rows are the tangents of ``(w_i, alpha_i) -> (c w_i, alpha_i / c)`` at ``c=1``."""
    k, d = p.W.shape
    idx = p.index
    T = np.zeros((k, idx.size))
    for i in range(k):
        T[i, i * d:(i + 1) * d] = p.W[i]
        T[i, idx.alpha_pos(i)] = -p.alpha[i]
    return T


def apply_permutation(p: NetworkPair, pi, rho) -> NetworkPair:
    """Return ``(P_pi W P_rho^T, P_pi alpha)`` with ``(P_pi W)[i] = W[pi[i]]``.

    The teacher is left unchanged, so the loss is invariant whenever the
    teacher itself is fixed by ``rho`` (e.g. ``V = I`` with constant ``beta``).
    """
    pi = np.asarray(pi, dtype=int)
    rho = np.asarray(rho, dtype=int)
    if sorted(pi.tolist()) != list(range(p.k)) or sorted(rho.tolist()) != list(range(p.d)):
        raise ValueError("pi and rho must be permutations of range(k) and range(d)")
    return NetworkPair(p.W[pi][:, rho], p.alpha[pi], p.V, p.beta)


def central_difference(fun, x, rel_step: float = 1e-5) -> np.ndarray:
    """Central-difference Jacobian of ``fun`` at ``x`` with step ``rel_step * (1 + |x_i|)``.

    Scalar-valued ``fun`` gives a gradient vector; vector-valued ``fun`` gives
    a matrix with one column per coordinate of ``x``.
    """
    x = np.asarray(x, dtype=float)
    cols = []
    for i in range(x.size):
        h = rel_step * (1.0 + abs(x[i]))
        xp = x.copy()
        xm = x.copy()
        xp[i] += h
        xm[i] -= h
        cols.append((np.asarray(fun(xp), float) - np.asarray(fun(xm), float)) / (2.0 * h))
    return np.stack(cols, axis=-1)
