"""Closed-form Gaussian expectations of ReLU pairs (the arc-cosine kernel).

For standard Gaussian ``x`` and ``phi(z) = max(0, z)``::

    k(u, v) = E[phi(u.x) phi(v.x)]
            = |u||v| / (2 pi) * (sin(theta) + (pi - theta) cos(theta))

where ``theta`` is the angle between ``u`` and ``v``. This module provides the
value, the gradient in ``u``, both second-derivative blocks, and a seeded
Monte-Carlo estimator used as an independent oracle.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi

# Below this value of sin(theta) the pair is treated as parallel and the
# n n^T term of the Hessian is replaced by its limit (zero).
PARALLEL_SIN_TOL = 1e-8

# Samples per Monte-Carlo chunk. Chunks, not workers, own the random streams,
# so the estimate does not depend on how many workers run.
MC_CHUNK = 1 << 16


class KernelDomainError(ValueError):
    """Raised when an angle is undefined because an input has zero norm."""


@dataclass(frozen=True)
class KernelEval:
    """Kernel value with its first and second derivatives at ``(u, v)``."""

    value: float
    grad_u: np.ndarray
    hess_uu: np.ndarray
    hess_uv: np.ndarray


def _geometry(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"expected two vectors of equal length, got {u.shape} and {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise KernelDomainError("kernel is undefined for zero-norm inputs")
    uh = u / nu
    vh = v / nv
    cos = float(np.clip(uh @ vh, -1.0, 1.0))
    theta = float(np.arccos(cos))
    return u, v, nu, nv, uh, vh, cos, np.sin(theta), theta


def kernel(u, v) -> float:
    """Return ``E[relu(u.x) relu(v.x)]`` for ``x ~ N(0, I)``."""
    _, _, nu, nv, _, _, cos, sin, theta = _geometry(u, v)
    return nu * nv / TWO_PI * (sin + (np.pi - theta) * cos)


def kernel_grad(u, v) -> np.ndarray:
    """Gradient of :func:`kernel` with respect to its first argument."""
    _, v, _, nv, uh, _, _, sin, theta = _geometry(u, v)
    return (nv * sin * uh + (np.pi - theta) * v) / TWO_PI


def kernel_hessian(u, v) -> tuple[np.ndarray, np.ndarray]:
    """Second derivatives ``(d2k/du2, d2k/du dv)``.

    Entry ``[i, j]`` of the mixed block is ``d2k / du_i dv_j``. Near-parallel
    and near-antiparallel pairs use the regularized limit, in which every term
    carrying a factor ``sin(theta)`` times a bounded direction vanishes.
    """
    _, _, nu, nv, uh, vh, cos, sin, theta = _geometry(u, v)
    dim = uh.size
    eye = np.eye(dim)
    proj = eye - np.outer(uh, uh)
    hess_uu = (nv / (TWO_PI * nu)) * sin * proj
    hess_uv = (np.pi - theta) * eye
    if sin >= PARALLEL_SIN_TOL:
        n_u = (vh - cos * uh) / sin  # unit, orthogonal to u, towards v
        n_v = (uh - cos * vh) / sin  # unit, orthogonal to v, towards u
        hess_uu = hess_uu + (nv / (TWO_PI * nu)) * sin * np.outer(n_u, n_u)
        hess_uv = hess_uv + sin * (np.outer(uh, vh) + np.outer(n_u, n_v))
    return hess_uu, hess_uv / TWO_PI


def kernel_eval(u, v) -> KernelEval:
    """Bundle value, gradient and Hessian blocks for one pair."""
    hess_uu, hess_uv = kernel_hessian(u, v)
    return KernelEval(kernel(u, v), kernel_grad(u, v), hess_uu, hess_uv)


def _mc_chunk(u, v, seed, index, count):
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))
    x = rng.standard_normal((count, u.size))
    prod = np.maximum(x @ u, 0.0) * np.maximum(x @ v, 0.0)
    return prod.sum(), np.square(prod).sum()


def kernel_mc(u, v, n_samples: int, seed: int, workers: int = 1) -> tuple[float, float]:
    """Monte-Carlo estimate of the kernel and its standard error.

    Samples are drawn in fixed-size chunks, each with its own stream derived
    from ``(seed, chunk index)``. Chunk sums are combined in chunk order, so
    the result is bitwise identical for any ``workers``.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    counts = [MC_CHUNK] * (n_samples // MC_CHUNK)
    if n_samples % MC_CHUNK:
        counts.append(n_samples % MC_CHUNK)
    jobs = [(u, v, seed, i, c) for i, c in enumerate(counts)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _mc_chunk(*job), jobs))
    else:
        parts = [_mc_chunk(*job) for job in jobs]
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    mean = total / n_samples
    if n_samples == 1:
        return float(mean), float("inf")
    var = max(total_sq / n_samples - mean * mean, 0.0) * n_samples / (n_samples - 1)
    return float(mean), float(np.sqrt(var / n_samples))


def kernel_matrix(U, V) -> np.ndarray:
    """All pairwise kernel values between the rows of ``U`` and ``V``.

    Self pairs (identical rows) come out as ``|u|^2 / 2`` through the
    clamped angle, matching the scalar :func:`kernel`.
    """
    U = np.asarray(U, dtype=float)
    V = np.asarray(V, dtype=float)
    nu = np.linalg.norm(U, axis=1)
    nv = np.linalg.norm(V, axis=1)
    if np.any(nu == 0.0) or np.any(nv == 0.0):
        raise KernelDomainError("kernel is undefined for zero-norm rows")
    cos = np.clip((U @ V.T) / np.outer(nu, nv), -1.0, 1.0)
    theta = np.arccos(cos)
    return np.outer(nu, nv) / TWO_PI * (np.sin(theta) + (np.pi - theta) * cos)
