"""Minibatch SGD on the planted ReLU model and classification of where it ends.

Training uses empirical gradients on fresh Gaussian batches. Because a
stochastic gradient cannot certify ``|grad| < 1e-8``, each run that trained
is finished by an analytic polish (gradient descent, then Newton steps with a
pseudo-inverse to step over the scaling null space), and convergence is judged
on the closed-form gradient.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from dataclasses import dataclass, field

import numpy as np

from ..families import FAMILIES
from ..landscape import NetworkPair, grad, hessian, loss
from ..reduced_flow.cells import reduced_loss
from ..reduced_flow.solver import ContinuationError, NonConvergenceError, SingularJacobianError, solve_at, solve_family
from ..symmetry import IsotropyClass, IsotropyFamily, detect_isotropy, reduce

log = logging.getLogger(__name__)

DIVERGED_LOSS = 1e6


@dataclass(frozen=True)
class ExperimentConfig:
    d: int = 10
    k: int = 10
    runs: int = 100
    lr: float = 0.05
    batch: int = 64
    max_steps: int = 20000
    grad_tol: float = 1e-8
    init: str = "xavier"
    seed: int = 0
    teacher: str | tuple[float, ...] = "identity"  # or diagonal entries, also used as the teacher's second layer
    alpha_init: str = "ones"  # or "xavier"
    plateau_window: int = 1000  # steps between plateau checks
    plateau_rtol: float = 1e-3  # relative loss improvement that counts as progress
    lr_decay: float = 0.5
    polish: bool = True
    polish_gd_steps: int = 5000
    polish_newton_steps: int = 50
    classify_tol: float = 1e-4
    workers: int = 1

    def __post_init__(self):
        if not self.grad_tol > 0:
            raise ValueError("grad_tol must be positive")
        if self.k != self.d:
            raise ValueError("only k = d is supported")
        if self.init != "xavier":
            raise ValueError(f"unknown init {self.init!r}")
        if self.alpha_init not in ("ones", "xavier"):
            raise ValueError(f"unknown alpha_init {self.alpha_init!r}")
        if self.lr < 0 or self.batch < 1 or self.max_steps < 0 or self.runs < 1:
            raise ValueError("lr must be >= 0, batch, runs >= 1 and max_steps >= 0")
        if self.teacher != "identity" and len(self.teacher) != self.d:
            raise ValueError(f"teacher diagonal needs {self.d} entries")

    def teacher_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if self.teacher == "identity":
            return np.eye(self.d), np.ones(self.d)
        t = np.asarray(self.teacher, dtype=float)
        return np.diag(t), t.copy()


@dataclass
class RunRecord:
    seed: int
    final_loss: float
    final_grad_norm: float
    isotropy: IsotropyClass | None
    coefficients: tuple[float, ...] | None = None
    steps: int = 0
    family: str | None = None
    refined_loss: float | None = None
    coefficient_distance: float | None = None
    failed: bool = False
    converged: bool = False
    pair: NetworkPair | None = field(default=None, repr=False, compare=False)

    @property
    def isotropy_name(self) -> str:
        return "failed" if self.isotropy is None else self.isotropy.family.name.lower()


def xavier_init(cfg: ExperimentConfig, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    bound = np.sqrt(6.0 / (cfg.d + cfg.k))
    W = rng.uniform(-bound, bound, size=(cfg.k, cfg.d))
    if cfg.alpha_init == "ones":
        alpha = np.ones(cfg.k)
    else:
        b2 = np.sqrt(6.0 / (cfg.k + 1))
        alpha = rng.uniform(-b2, b2, size=cfg.k)
    return W, alpha


def batch_gradient(W, alpha, V, beta, X):
    """Gradient of ``mean((relu(X W^T) alpha - relu(X V^T) beta)^2) / 2``."""
    pre = X @ W.T
    h = np.maximum(pre, 0.0)
    r = h @ alpha - np.maximum(X @ V.T, 0.0) @ beta
    n = X.shape[0]
    g_alpha = h.T @ r / n
    g_W = ((r[:, None] * alpha[None, :]) * (pre > 0)).T @ X / n
    return g_W, g_alpha


def _sgd(cfg: ExperimentConfig, pair: NetworkPair, rng: np.random.Generator) -> tuple[NetworkPair, int, bool]:
    W, alpha = pair.W.copy(), pair.alpha.copy()
    V, beta = pair.V, pair.beta
    lr = cfg.lr
    best = loss(pair)
    steps = 0
    for steps in range(1, cfg.max_steps + 1):
        X = rng.standard_normal((cfg.batch, cfg.d))
        gW, ga = batch_gradient(W, alpha, V, beta, X)
        W -= lr * gW
        alpha -= lr * ga
        if steps % cfg.plateau_window == 0:
            if np.any(np.linalg.norm(W, axis=1) == 0):
                return pair, steps, True
            current = loss(NetworkPair(W, alpha, V, beta))
            if not np.isfinite(current) or current > DIVERGED_LOSS:
                return pair, steps, True
            if current > best * (1 - cfg.plateau_rtol):
                lr *= cfg.lr_decay
            best = min(best, current)
    return NetworkPair(W, alpha, V, beta), steps, False


def polish(pair: NetworkPair, grad_tol: float, gd_steps: int = 5000, newton_steps: int = 50,
           gd_lr: float = 0.1, newton_switch: float = 1e-3) -> tuple[NetworkPair, int]:
    """Analytic gradient descent until ``|grad| < newton_switch``, then pseudo-inverse Newton.

    Newton steps backtrack on the gradient norm; when no shorter step helps
    the full step is taken, since the norm may rise briefly before the
    quadratic phase.
    """
    x = pair.flat()
    p = pair
    used = 0
    for used in range(1, gd_steps + 1):
        g = grad(p)
        if np.linalg.norm(g) < newton_switch:
            break
        x = x - gd_lr * g
        p = p.with_flat(x)
    for _ in range(newton_steps):
        g = grad(p)
        gn = np.linalg.norm(g)
        if gn < grad_tol:
            break
        step = np.linalg.lstsq(hessian(p), g, rcond=1e-10)[0]
        t = 1.0
        while t > 1e-4 and not np.linalg.norm(grad(p.with_flat(x - t * step))) < gn:
            t /= 2
        x = x - (t if t > 1e-4 else 1.0) * step
        p = p.with_flat(x)
        used += 1
    return p, used


@lru_cache(maxsize=None)
def _family_coeffs(name: str, d: float) -> np.ndarray | None:
    try:
        return solve_family(name, d).as_floats()
    except (ContinuationError, NonConvergenceError) as err:  # the family may not reach this d
        log.info("family %s unavailable at d=%s: %s", name, d, err)
        return None


def classify(pair: NetworkPair, tol: float) -> tuple[IsotropyClass, tuple | None, str | None, float | None, float | None]:
    """Isotropy of the gauge-normalized endpoint and, for block classes, the family it refines to."""
    if np.any(pair.alpha <= 0):
        return IsotropyClass(IsotropyFamily.OTHER), None, None, None, None
    cls = detect_isotropy(pair.alpha[:, None] * pair.W, tol=tol)
    if not cls.family.named:
        return cls, None, None, None, None
    try:
        r = reduce(pair, cls, tol=tol)
        refined = solve_at(r)
    except (ValueError, NonConvergenceError, SingularJacobianError) as err:
        log.info("refinement failed: %s", err)
        return cls, None, None, None, None
    coeffs = tuple(float(c) for c in refined.coeffs)
    best, best_dist = None, None
    for f in FAMILIES.values():
        if f.p != cls.p:
            continue
        ref = _family_coeffs(f.name, float(refined.d))
        if ref is None:
            continue
        dist = float(np.abs(np.array(coeffs) - ref).max())
        if best_dist is None or dist < best_dist:
            best, best_dist = f.name, dist
    return cls, coeffs, best, best_dist, float(reduced_loss(refined))


def run_one(cfg: ExperimentConfig, index: int) -> RunRecord:
    seed = cfg.seed + index
    rng = np.random.default_rng(seed)
    V, beta = cfg.teacher_arrays()
    W, alpha = xavier_init(cfg, rng)
    pair = NetworkPair(W, alpha, V, beta)
    end, steps, failed = _sgd(cfg, pair, rng)
    if failed:
        return RunRecord(seed, float("nan"), float("nan"), None, steps=steps, failed=True)
    if cfg.polish and cfg.lr > 0:
        end, extra = polish(end, cfg.grad_tol, cfg.polish_gd_steps, cfg.polish_newton_steps)
        steps += extra
    gnorm = float(np.linalg.norm(grad(end)))
    rec = RunRecord(seed, float(loss(end)), gnorm, None, steps=steps, converged=gnorm < cfg.grad_tol, pair=end)
    cls, coeffs, fam, dist, rloss = classify(end, cfg.classify_tol)
    rec.isotropy, rec.coefficients, rec.family, rec.coefficient_distance, rec.refined_loss = cls, coeffs, fam, dist, rloss
    return rec


def run_sgd(cfg: ExperimentConfig) -> list[RunRecord]:
    """Run ``cfg.runs`` independent seeded runs (seeds ``cfg.seed + i``), in parallel when ``workers > 1``."""
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            return list(pool.map(run_one, [cfg] * cfg.runs, range(cfg.runs)))
    return [run_one(cfg, i) for i in range(cfg.runs)]
