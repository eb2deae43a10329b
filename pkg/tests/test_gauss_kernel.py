import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.integrate import quad
from scipy.stats import special_ortho_group

from relu_landscape.gauss_kernel import (
    KernelDomainError,
    kernel,
    kernel_eval,
    kernel_grad,
    kernel_hessian,
    kernel_matrix,
    kernel_mc,
)
from relu_landscape.landscape import central_difference

E1, E2 = np.eye(2)


def polar_oracle(u, v):
    """Planar expectation by quadrature: the radial integral gives 2, leaving (1/pi) * int relu(u.e) relu(v.e) dphi."""
    def f(phi):
        e = np.array([np.cos(phi), np.sin(phi)])
        return max(u @ e, 0.0) * max(v @ e, 0.0)

    # kinks where either factor switches on
    kinks = [(np.arctan2(w[1], w[0]) + s) % (2 * np.pi) for w in (u, v) for s in (np.pi / 2, -np.pi / 2)]
    return quad(f, 0.0, 2 * np.pi, limit=200, points=kinks, epsabs=1e-14, epsrel=1e-12)[0] / np.pi


vectors = arrays(np.float64, 4, elements=st.floats(-3, 3)).filter(lambda x: np.linalg.norm(x) > 1e-2)


def test_reference_values():
    assert kernel(E1, E1) == pytest.approx(0.5, abs=1e-15)
    assert abs(kernel(E1, E2) - 1 / (2 * math.pi)) < 1e-12
    assert abs(kernel(E1, -E1)) < 1e-15
    np.testing.assert_allclose(kernel_grad(E1, E1), E1 / 2, atol=1e-15)
    np.testing.assert_allclose(kernel_grad(E1, E2), (E1 + math.pi / 2 * E2) / (2 * math.pi), atol=1e-15)


def test_frozen_value():
    # kernel(2e1, e1+e2) = sqrt(2)/pi * (sin(pi/4) + 3pi/4 cos(pi/4)) = (1 + 3pi/4) / pi
    assert kernel(2 * E1, E1 + E2) == pytest.approx(1.0683098861837907, rel=1e-14)
    assert kernel(2 * E1, E1 + E2) == pytest.approx((1 + 0.75 * math.pi) / math.pi, rel=1e-14)


def test_planar_quadrature_oracle():
    rng = np.random.default_rng(3)
    for _ in range(10):
        u, v = rng.standard_normal(2), rng.standard_normal(2)
        assert kernel(u, v) == pytest.approx(polar_oracle(u, v), rel=1e-9, abs=1e-12)


def test_monte_carlo_agreement_on_frozen_pair():
    est, se = kernel_mc(2 * E1, E1 + E2, 10**6, seed=11)
    assert abs(est - kernel(2 * E1, E1 + E2)) < 4 * se


def test_monte_carlo_is_deterministic_and_worker_independent():
    u, v = np.array([1.0, -0.3, 0.2]), np.array([0.4, 1.0, -0.5])
    a = kernel_mc(u, v, 200_000, seed=5)
    assert a == kernel_mc(u, v, 200_000, seed=5)
    assert a == kernel_mc(u, v, 200_000, seed=5, workers=3)
    assert a != kernel_mc(u, v, 200_000, seed=6)


def test_zero_vector_is_rejected():
    with pytest.raises(KernelDomainError):
        kernel(np.zeros(3), np.ones(3))
    with pytest.raises(ValueError):
        kernel_mc(E1, E2, 0, seed=0)


def test_parallel_hessian_limit():
    u = np.array([0.3, -1.2, 0.7])
    hess_uu, _ = kernel_hessian(u, 2.5 * u)
    np.testing.assert_array_equal(hess_uu, 0.0)


def test_hessian_at_orthogonal_units():
    hess_uu, _ = kernel_hessian(E1, E2)
    fd = central_difference(lambda x: kernel_grad(x, E2), E1)
    np.testing.assert_allclose(hess_uu, fd, atol=1e-6)
    np.testing.assert_allclose(hess_uu, (np.eye(2) - np.outer(E1, E1) + np.outer(E2, E2)) / (2 * math.pi), atol=1e-15)


def test_derivatives_against_finite_differences():
    rng = np.random.default_rng(0)
    for _ in range(100):
        u, v = rng.standard_normal(5), rng.standard_normal(5)
        g_fd = central_difference(lambda x: kernel(x, v), u)
        assert np.abs(kernel_grad(u, v) - g_fd).max() < 1e-6 * np.abs(g_fd).max()
        hess_uu, hess_uv = kernel_hessian(u, v)
        huu_fd = central_difference(lambda x: kernel_grad(x, v), u)
        huv_fd = central_difference(lambda y: kernel_grad(u, y), v)
        assert np.abs(hess_uu - huu_fd).max() < 1e-6 * np.abs(huu_fd).max()
        assert np.abs(hess_uv - huv_fd).max() < 1e-6 * np.abs(huv_fd).max()


def test_near_parallel_pairs_use_regularized_branch():
    rng = np.random.default_rng(1)
    for _ in range(20):
        u = rng.standard_normal(4)
        w = rng.standard_normal(4)
        v = 1.7 * u + 1e-4 * (w - (w @ u) / (u @ u) * u)
        g_fd = central_difference(lambda x: kernel(x, v), u)
        assert np.abs(kernel_grad(u, v) - g_fd).max() < 1e-4 * np.abs(g_fd).max()


def test_kernel_matrix_matches_scalar():
    rng = np.random.default_rng(2)
    U, V = rng.standard_normal((4, 3)), rng.standard_normal((5, 3))
    K = kernel_matrix(U, V)
    np.testing.assert_allclose(K, [[kernel(u, v) for v in V] for u in U], rtol=1e-13)
    np.testing.assert_allclose(np.diag(kernel_matrix(U, U)), 0.5 * (U**2).sum(axis=1), rtol=1e-13)


@given(vectors, vectors)
def test_symmetric_and_nonnegative(u, v):
    assert kernel(u, v) == kernel(v, u)
    assert kernel(u, v) >= 0.0


@given(vectors, vectors, st.floats(0.01, 100), st.floats(0.01, 100))
def test_positive_homogeneity(u, v, a, b):
    assert kernel(a * u, b * v) == pytest.approx(a * b * kernel(u, v), rel=1e-12, abs=1e-300)


@settings(max_examples=50)
@given(vectors, vectors, st.integers(0, 2**32 - 1))
def test_rotation_invariance(u, v, seed):
    R = special_ortho_group.rvs(4, random_state=seed)
    assert kernel(R @ u, R @ v) == pytest.approx(kernel(u, v), rel=1e-12, abs=1e-12 * np.linalg.norm(u) * np.linalg.norm(v))


@settings(max_examples=50)
@given(vectors, vectors)
def test_second_derivative_block_is_symmetric(u, v):
    ev = kernel_eval(u, v)
    hvv, hvu = kernel_hessian(v, u)
    np.testing.assert_allclose(ev.hess_uu, ev.hess_uu.T, atol=1e-15)
    np.testing.assert_allclose(ev.hess_uv, hvu.T, atol=1e-14)
    block = np.block([[ev.hess_uu, ev.hess_uv], [hvu, hvv]])
    np.testing.assert_allclose(block, block.T, atol=1e-14)
