import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import family_point
from relu_landscape.gauss_kernel import KernelDomainError
from relu_landscape.landscape import (
    FlatIndex,
    NetworkPair,
    apply_permutation,
    central_difference,
    grad,
    hessian,
    loss,
    scaling_tangents,
)
from relu_landscape.symmetry import lift


def mc_loss(pair, n, seed, chunk=100_000):
    """Half the mean squared residual of the two networks on Gaussian inputs, with its standard error."""
    rng = np.random.default_rng(seed)
    vals = []
    for start in range(0, n, chunk):
        X = rng.standard_normal((min(chunk, n - start), pair.d))
        r = np.maximum(X @ pair.W.T, 0) @ pair.alpha - np.maximum(X @ pair.V.T, 0) @ pair.beta
        vals.append(0.5 * r**2)
    vals = np.concatenate(vals)
    return vals.mean(), vals.std(ddof=1) / np.sqrt(n)


def random_pair(rng, d, k=None):
    k = d if k is None else k
    return NetworkPair(rng.standard_normal((k, d)), rng.standard_normal(k))


square = st.integers(2, 4).flatmap(
    lambda d: st.tuples(
        arrays(np.float64, (d, d), elements=st.floats(-2, 2)).filter(lambda W: np.all(np.linalg.norm(W, axis=1) > 1e-2)),
        arrays(np.float64, d, elements=st.floats(-2, 2)),
    )
)


def test_global_minimum():
    p = NetworkPair(np.eye(6), np.ones(6))
    assert abs(loss(p)) < 1e-14
    assert np.abs(grad(p)).max() < 1e-12


def test_scaled_identity_closed_form():
    # W = cI: every kernel entry scales by c^2 or c, so the loss is (c-1)^2/2 times the sum of K(e_i, e_j)
    d, c = 7, 1.3
    total = d / 2 + d * (d - 1) / (2 * np.pi)
    assert loss(NetworkPair(c * np.eye(d), np.ones(d))) == pytest.approx(0.5 * (c - 1) ** 2 * total, rel=1e-13)


def test_monte_carlo_loss():
    rng = np.random.default_rng(4)
    p = random_pair(rng, 4)
    est, se = mc_loss(p, 10**6, seed=9)
    assert abs(est - loss(p)) < 4 * se


def test_family_losses_at_d10():
    assert loss(lift(family_point("typeII", 10))) == pytest.approx(0.018, abs=0.002)
    assert loss(lift(family_point("typeM_II", 10))) == pytest.approx(0.035, abs=0.002)


def test_gradient_vanishes_at_lifted_type_ii_point():
    assert np.abs(grad(lift(family_point("typeII", 12)))).max() < 1e-10


def test_gradient_and_hessian_against_finite_differences():
    rng = np.random.default_rng(0)
    for _ in range(10):
        p = random_pair(rng, 5)
        x = p.flat()
        g_fd = central_difference(lambda y: loss(p.with_flat(y)), x)
        assert np.abs(grad(p) - g_fd).max() < 1e-6 * np.abs(g_fd).max()
    for _ in range(10):
        p = random_pair(rng, 4)
        H_fd = central_difference(lambda y: grad(p.with_flat(y)), p.flat())
        assert np.abs(hessian(p) - H_fd).max() < 1e-5 * np.abs(H_fd).max()


def test_hessian_is_symmetric():
    H = hessian(random_pair(np.random.default_rng(1), 5))
    assert np.abs(H - H.T).max() < 1e-12


def test_rectangular_student():
    rng = np.random.default_rng(2)
    p = random_pair(rng, 3, k=5)
    g_fd = central_difference(lambda y: loss(p.with_flat(y)), p.flat())
    assert np.abs(grad(p) - g_fd).max() < 1e-6 * np.abs(g_fd).max()


def test_flat_index_round_trip():
    idx = FlatIndex(3, 4)
    W, a = np.arange(12.0).reshape(3, 4), np.array([-1.0, -2.0, -3.0])
    x = idx.join(W, a)
    np.testing.assert_array_equal(x[:4], W[0])
    W2, a2 = idx.split(x)
    np.testing.assert_array_equal(W2, W)
    np.testing.assert_array_equal(a2, a)
    with pytest.raises(ValueError):
        idx.split(x[:-1])


def test_invalid_pairs():
    with pytest.raises(KernelDomainError):
        NetworkPair(np.array([[1.0, 0.0], [0.0, 0.0]]), np.ones(2))
    with pytest.raises(ValueError):
        NetworkPair(np.eye(3), np.ones(2))
    with pytest.raises(ValueError):
        NetworkPair(np.eye(3), np.ones(3), V=np.eye(2))


def test_permutation_invariance():
    rng = np.random.default_rng(5)
    for _ in range(50):
        p = random_pair(rng, 5)
        q = apply_permutation(p, rng.permutation(5), rng.permutation(5))
        assert loss(q) == pytest.approx(loss(p), rel=1e-12)


def test_permutation_group_action():
    rng = np.random.default_rng(6)
    p = random_pair(rng, 4)
    ident = np.arange(4)
    q = apply_permutation(p, ident, ident)
    np.testing.assert_array_equal(q.W, p.W)
    np.testing.assert_array_equal(q.alpha, p.alpha)
    pi, rho = rng.permutation(4), rng.permutation(4)
    back = apply_permutation(apply_permutation(p, pi, rho), np.argsort(pi), np.argsort(rho))
    np.testing.assert_array_equal(back.W, p.W)
    np.testing.assert_array_equal(back.alpha, p.alpha)
    with pytest.raises(ValueError):
        apply_permutation(p, [0, 0, 1, 2], ident)


def test_nonnegative_on_random_configurations():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        d = int(rng.integers(2, 5))
        assert loss(random_pair(rng, d)) >= -1e-12


def test_hessian_at_minimizers_is_positive_semidefinite():
    for name in ("identity", "typeII"):
        H = hessian(lift(family_point(name, 12)))
        assert np.linalg.eigvalsh(H).min() >= -1e-7 * np.linalg.norm(H, 2)


def test_scaling_tangents_at_critical_point():
    p = lift(family_point("typeII", 12))
    H = hessian(p)
    T = scaling_tangents(p)
    assert T.shape == (12, p.index.size)
    forms = np.einsum("ki,ij,kj->k", T, H, T)
    assert np.abs(forms).max() < 1e-9 * np.linalg.norm(H, 2)


@settings(max_examples=100)
@given(square)
def test_loss_nonnegative(wa):
    W, a = wa
    assert loss(NetworkPair(W, a)) >= -1e-12


@settings(max_examples=100)
@given(square, st.integers(0, 2**32 - 1))
def test_scaling_invariance(wa, seed):
    W, a = wa
    lam = np.random.default_rng(seed).uniform(0.2, 5.0, size=len(a))
    base = loss(NetworkPair(W, a))
    assert abs(loss(NetworkPair(lam[:, None] * W, a / lam)) - base) < 1e-12 * (1 + abs(base))


@settings(max_examples=50)
@given(square, st.randoms(use_true_random=False))
def test_gradient_equivariance(wa, rnd):
    W, a = wa
    d = len(a)
    pi, rho = rnd.sample(range(d), d), rnd.sample(range(d), d)
    p = NetworkPair(W, a)
    gW, ga = p.index.split(grad(p))
    hW, ha = p.index.split(grad(apply_permutation(p, pi, rho)))
    np.testing.assert_allclose(hW, gW[pi][:, rho], atol=1e-12 * (1 + np.abs(gW).max()))
    np.testing.assert_allclose(ha, ga[pi], atol=1e-12 * (1 + np.abs(ga).max()))
