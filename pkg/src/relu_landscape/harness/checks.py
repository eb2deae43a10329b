"""Runtime oracle checks for the kernel and the landscape derivatives."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..gauss_kernel import kernel, kernel_mc
from ..landscape import NetworkPair, central_difference, grad, hessian, loss


@dataclass
class Check:
    name: str
    value: float
    reference: float
    error: float
    bound: float

    @property
    def ok(self) -> bool:
        return bool(self.error <= self.bound)


def kernel_checks(n_pairs: int = 20, n_samples: int = 10**6, seed: int = 0, d: int = 5,
                  sigmas: float = 4.0, workers: int = 1) -> list[Check]:
    """Closed form against Monte-Carlo on random pairs, plus the orthogonal-unit-vector value."""
    rng = np.random.default_rng(seed)
    e1, e2 = np.eye(2)
    out = [Check("kernel(e1,e2)", kernel(e1, e2), 1 / (2 * math.pi), abs(kernel(e1, e2) - 1 / (2 * math.pi)), 1e-12)]
    for i in range(n_pairs):
        u, v = rng.standard_normal(d), rng.standard_normal(d)
        est, se = kernel_mc(u, v, n_samples, seed=seed * 1000 + i, workers=workers)
        exact = kernel(u, v)
        out.append(Check(f"mc pair {i}", est, exact, abs(est - exact), sigmas * se))
    return out


def derivative_checks(n_configs: int = 50, d: int = 5, seed: int = 0, rtol: float = 1e-5) -> list[Check]:
    """Analytic gradient and Hessian against central differences at random configurations."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n_configs):
        pair = NetworkPair(rng.standard_normal((d, d)), rng.standard_normal(d))
        x0 = pair.flat()
        g = grad(pair)
        g_fd = central_difference(lambda x: loss(pair.with_flat(x)), x0)
        H = hessian(pair)
        H_fd = central_difference(lambda x: grad(pair.with_flat(x)), x0)
        g_err = np.abs(g - g_fd).max() / max(np.abs(g_fd).max(), 1e-12)
        H_err = np.abs(H - H_fd).max() / max(np.abs(H_fd).max(), 1e-12)
        out.append(Check(f"grad config {i}", float(np.abs(g).max()), float(np.abs(g_fd).max()), float(g_err), rtol))
        out.append(Check(f"hessian config {i}", float(np.abs(H).max()), float(np.abs(H_fd).max()), float(H_err), rtol))
    return out
