"""Newton solves of the reduced equations and continuation in real ``d``."""
from __future__ import annotations

import math
from dataclasses import replace

import mpmath
import numpy as np

from ..families import FamilySpec, get_family
from ..symmetry import ReducedPoint
from .equations import reduced_grad

# equilibrated Jacobians with a larger condition number count as singular
MAX_CONDITION = 1e12
# forward-difference step on the coefficients in double precision
FD_STEP = 1e-7
# above this dimension the reduced equations are solved in extended precision
MP_THRESHOLD = 200.0
# the tangent continuation refuses steps smaller than span / 2**HALVINGS
HALVINGS = 10
# Newton steps taken after the tolerance is met
POLISH_STEPS = 2


class ContinuationError(RuntimeError):
    """A path could not be continued; ``last_good`` is the last solved point."""

    def __init__(self, msg, last_good=None):
        super().__init__(msg)
        self.last_good = last_good


class SingularJacobianError(ContinuationError):
    pass


class NonConvergenceError(RuntimeError):
    def __init__(self, msg, residual):
        super().__init__(msg)
        self.residual = residual


def mp_digits(d: float) -> int:
    """Working digits for a solve at dimension ``d``."""
    return int(20 + 3 * math.log10(max(float(d), 10.0)))



def _jacobian(r, g0, mp_mode):
    cols = []
    for i, c in enumerate(r.coeffs):
        if mp_mode:
            h = mpmath.mpf(10) ** (-(mpmath.mp.dps // 2)) * max(1, abs(c))
        else:
            h = FD_STEP * max(1.0, abs(c))
        shifted = list(r.coeffs)
        shifted[i] = c + h
        g1 = reduced_grad(replace(r, coeffs=tuple(shifted)))
        cols.append([(u - v) / h for u, v in zip(g1, g0)])
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]


def _check_condition(J):
    A = np.array([[float(v) for v in row] for row in J])
    rows = np.abs(A).max(axis=1)
    cols = np.abs(A).max(axis=0)
    if np.any(rows == 0) or np.any(cols == 0):
        return math.inf
    return float(np.linalg.cond(A / rows[:, None] / cols[None, :]))


def _solve_linear(J, g, mp_mode):
    if mp_mode:
        return list(mpmath.lu_solve(mpmath.matrix(J), mpmath.matrix(g)))
    return list(np.linalg.solve(np.array(J, dtype=float), np.array(g, dtype=float)))


def newton_solve(r0: ReducedPoint, tol: float = 1e-12, max_iter: int = 60) -> ReducedPoint:
    """Damped Newton on the reduced gradient with ``d`` fixed.

    mpmath inputs are solved in mpmath at the current working precision; the
    finite-difference step is then ``10^(-dps/2)`` instead of ``1e-7``.
    """
    mp_mode = any(isinstance(v, mpmath.mpf) for v in list(r0.coeffs) + [r0.d])
    r = replace(r0, residual=None)
    g = reduced_grad(r)
    res = max(abs(v) for v in g)
    polish = 0
    for _ in range(max_iter + 1):
        if res < tol:
            # a couple of extra steps push the residual to the rounding floor
            polish += 1
            if polish > POLISH_STEPS or res == 0:
                return replace(r, residual=float(res))
        J = _jacobian(r, g, mp_mode)
        cond = _check_condition(J)
        if not cond < MAX_CONDITION:
            raise SingularJacobianError(f"reduced Jacobian is singular (condition {cond:.3g}) at d={float(r.d):.6g}")
        step = _solve_linear(J, g, mp_mode)
        t = 1.0
        best = None
        while t >= 1.0 / 1024:
            trial = replace(r, coeffs=tuple(c - t * s for c, s in zip(r.coeffs, step)))
            try:
                g_new = reduced_grad(trial)
                res_new = max(abs(v) for v in g_new)
            except (ValueError, ZeroDivisionError):
                t /= 2
                continue
            if best is None or res_new < best[2]:
                best = (trial, g_new, res_new)
            if res_new <= (1 - 1e-4 * t) * res:
                break
            t /= 2
        if best is None:
            raise NonConvergenceError("every Newton trial left the feasible region", float(res))
        if best[2] >= res:
            break
        r, g, res = best
    if res < tol:
        return replace(r, residual=float(res))
    raise NonConvergenceError(f"Newton stalled at residual {float(res):.3e} (tol {float(tol):.1e}) at d={float(r.d):.6g}", float(res))


def _as_mp(r: ReducedPoint) -> ReducedPoint:
    return replace(r, coeffs=tuple(mpmath.mpf(c) for c in r.coeffs), d=mpmath.mpf(r.d))


def _as_float(r: ReducedPoint) -> ReducedPoint:
    return replace(r, coeffs=tuple(float(c) for c in r.coeffs), d=float(r.d))


def default_tol(d: float, digits: int = 16) -> float:
    """Reachable residual with ``digits`` significant digits; entries grow like ``d^3``."""
    return max(10.0 ** (4 - digits), 4.0 * 10.0 ** (-digits) * float(d) ** 3)


def solve_at(r0: ReducedPoint, tol: float | None = None, precision: str = "auto") -> ReducedPoint:
    """Newton solve choosing the arithmetic: ``float``, ``mp`` or ``auto`` (mp above ``MP_THRESHOLD``)."""
    d = float(r0.d)
    use_mp = precision == "mp" or (precision == "auto" and d > MP_THRESHOLD)
    if not use_mp:
        return newton_solve(_as_float(r0), default_tol(d) if tol is None else tol)
    digits = mp_digits(d)
    with mpmath.workdps(digits):
        return newton_solve(_as_mp(r0), default_tol(d, digits) if tol is None else tol)


def seed_point(family: FamilySpec | str, d: float) -> ReducedPoint:
    f = get_family(family) if isinstance(family, str) else family
    return ReducedPoint(f.isotropy, tuple(f.seed(d)), d)


def continue_in_d(family, d_start: float, d_end: float, steps: int, start: ReducedPoint | None = None,
                  tol: float | None = None) -> list[ReducedPoint]:
    """Follow a family from ``d_start`` to ``d_end`` and return it at ``steps + 1`` equispaced ``d``.

    Between sample points the path is advanced with a secant predictor and a
    Newton corrector; failed corrections halve the step down to
    ``|d_end - d_start| / 2**10``.
    """
    f = get_family(family) if isinstance(family, str) else family
    if steps < 1:
        raise ValueError("steps must be at least 1")
    targets = np.linspace(d_start, d_end, steps + 1)
    r = solve_at(start if start is not None else seed_point(f, d_start), tol, precision="float"
                 if d_start <= MP_THRESHOLD else "auto")
    r = _as_float(r)
    out = [r]
    floor = abs(d_end - d_start) / 2**HALVINGS
    prev = None
    for target in targets[1:]:
        while float(r.d) != target:
            h = target - float(r.d)
            while True:
                d_new = float(r.d) + h
                if prev is not None and float(r.d) != float(prev.d):
                    slope = [(c - q) / (float(r.d) - float(prev.d)) for c, q in zip(r.coeffs, prev.coeffs)]
                    guess = tuple(c + s * h for c, s in zip(r.coeffs, slope))
                else:
                    guess = r.coeffs
                try:
                    nxt = _as_float(solve_at(replace(r, coeffs=guess, d=d_new), tol, precision="float"))
                    break
                except (NonConvergenceError, SingularJacobianError, ValueError, ZeroDivisionError) as err:
                    h /= 2
                    if abs(h) < floor:
                        raise ContinuationError(
                            f"continuation of {f.name} failed near d={d_new:.6g}: {err}", last_good=r
                        ) from err
            prev, r = r, nxt
        out.append(r)
    return out


def solve_family(family, d: float, tol: float | None = None, d_seed: float = 64.0) -> ReducedPoint:
    """Solve a family at ``d``: from its expansion when ``d >= d_seed``, else by continuation down from ``d_seed``."""
    f = get_family(family) if isinstance(family, str) else family
    if d >= d_seed:
        return solve_at(seed_point(f, d), tol)
    steps = max(1, int(math.ceil((d_seed - d) / 2.0)))
    path = continue_in_d(f, d_seed, d, steps, tol=tol)
    return path[-1]
