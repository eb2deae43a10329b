import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FAMILY_NAMES, family_point
from relu_landscape.landscape import NetworkPair, hessian
from relu_landscape.spectrum.dense import cluster_eigenvalues, default_gap, full_spectrum, gauge_forms
from relu_landscape.spectrum.figure import EigenRow, growing_rows
from relu_landscape.spectrum.isotypic import (
    IsotypicLeakError,
    exterior_square_pattern,
    lifted_basis,
    rep_blocks,
    rep_spectrum,
    representative_vectors,
    two_row_pattern,
    verify_invariant,
)
from relu_landscape.spectrum.stability import stability_threshold
from relu_landscape.spectrum.tables import (
    DEGREES,
    L1,
    L2,
    L3,
    LEADING,
    MultiplicityMismatch,
    Q_VAL,
    S_VAL,
    X_VAL,
    Y_VAL,
    assign_leading,
    spectrum_table_check,
)
from relu_landscape.spectrum.transition import closed_form_ok, closed_form_transition, transition_matrix
from relu_landscape.symmetry import lift

XV = (math.pi - 2) / (4 * math.pi)
YV = (math.pi + 2) / (4 * math.pi)


def flat(M):
    return np.concatenate([M.ravel(), np.zeros(M.shape[0])])


@pytest.fixture(scope="module")
def identity12():
    return NetworkPair(np.eye(12), np.ones(12))


def test_leading_constants():
    assert X_VAL == pytest.approx(0.25 - 1 / (2 * math.pi))
    assert Y_VAL == pytest.approx(0.25 + 1 / (2 * math.pi))
    assert S_VAL == pytest.approx(2 * X_VAL)
    assert Q_VAL == 0.25
    assert L2(10) == 3.0
    assert L1(100) - 25 == pytest.approx((math.pi**2 + math.pi - 4) / (2 * math.pi * (math.pi - 4)))
    assert L3(math.pi) - 1 == pytest.approx((math.pi**2 - 10 * math.pi + 8) / (2 * math.pi * (math.pi - 4)))


@pytest.mark.parametrize("p", range(4))
def test_degree_table_fills_the_parameter_space(p):
    for d in (9, 12, 16):
        total = sum(len(LEADING[p][label]) * deg(d) for label, deg in DEGREES[p].items())
        assert total == d * d + d


# patterns and representative vectors ---------------------------------------------


def test_exterior_square_pattern():
    X = exterior_square_pattern(6)
    assert set(np.unique(X)) == {0.0, 1.0, -1.0, 4.0, -4.0}
    np.testing.assert_array_equal(X, -X.T)
    np.testing.assert_array_equal(X.sum(axis=0), 0)
    np.testing.assert_array_equal(X.sum(axis=1), 0)
    assert np.all(X[1:-1, 1:-1] == 0)


def test_two_row_pattern():
    Y = two_row_pattern(9)
    np.testing.assert_array_equal(Y, Y.T)
    np.testing.assert_array_equal(np.diag(Y), 0)
    np.testing.assert_array_equal(Y.sum(axis=1), 0)


def test_patterns_are_eigenvectors_at_identity():
    d = 10
    H = hessian(NetworkPair(np.eye(d), np.ones(d)))
    x = flat(exterior_square_pattern(d))
    np.testing.assert_allclose(H @ x, XV * x, atol=1e-13)
    y = flat(two_row_pattern(d))
    assert (H @ y)[1] / (d - 3) == pytest.approx(YV, rel=1e-13)
    np.testing.assert_allclose(H @ y, YV * y, atol=1e-13)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_representative_vectors_span_the_blocks(name):
    r = family_point(name, 10)
    reps = representative_vectors(name, 10, point=r)
    blocks = rep_blocks(r)
    assert set(reps) == set(blocks)
    for label, vecs in reps.items():
        assert len(vecs) == blocks[label].matrix.shape[0]
        assert all(v.size == 110 for v in vecs)


def test_representative_vectors_need_d9():
    with pytest.raises(ValueError):
        representative_vectors("identity", 8)


def test_leaking_basis_is_rejected():
    H = hessian(lift(family_point("typeII", 10)))
    v = np.random.default_rng(0).standard_normal((110, 2))
    with pytest.raises(IsotypicLeakError):
        verify_invariant(H, v)


# transition matrices ----------------------------------------------------------------


def test_identity_exterior_square_transition():
    T = transition_matrix(family_point("identity", 10), "x_p")
    assert T.q == 1
    assert T.entries[0, 0] == pytest.approx(XV, abs=1e-12)


@pytest.mark.parametrize("label", ["x_p", "y_p", "s_p", "t"])
def test_closed_form_matches_dense_route(label):
    r = family_point("typeA", 12)
    assert closed_form_ok(r)
    dense = transition_matrix(r, label)
    closed = closed_form_transition(r, label)
    assert closed.q == dense.q
    if dense.q == 1:
        assert abs(closed.entries[0, 0] - dense.entries[0, 0]) < 1e-9
    else:
        np.testing.assert_allclose(closed.eigenvalues, dense.eigenvalues, rtol=1e-8, atol=1e-12)


def test_closed_form_restrictions():
    assert not closed_form_ok(family_point("identity", 12))
    with pytest.raises(ValueError):
        closed_form_transition(family_point("typeII", 12), "x_p")
    with pytest.raises(KeyError):
        closed_form_transition(family_point("typeA", 12), "s_q")


@pytest.mark.parametrize("name", ["typeA", "typeII", "typeM_I", "typeN_II"])
def test_transition_eigenvalues_in_dense_spectrum(name):
    r = family_point(name, 10)
    H = hessian(lift(r))
    raw = np.linalg.eigvalsh(H)
    for label in rep_blocks(r):
        T = transition_matrix(r, label, H=H)
        assert np.all(np.abs(np.linalg.eigvals(T.entries).imag) < 1e-9)
        for v in T.eigenvalues:
            assert np.abs(raw - v).min() < 1e-7


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["typeII", "typeM_II"]), st.integers(0, 2**32 - 1))
def test_transition_basis_independence(name, seed):
    r = family_point(name, 10)
    H = hessian(lift(r))
    for label in ("t", "s_p"):
        V = lifted_basis(r, label)
        M = np.random.default_rng(seed).standard_normal((V.shape[1], V.shape[1])) + 3 * np.eye(V.shape[1])
        a = transition_matrix(r, label, H=H).eigenvalues
        b = transition_matrix(r, label, H=H, basis=V @ M).eigenvalues
        np.testing.assert_allclose(a, b, atol=1e-9)


# dense spectra -----------------------------------------------------------------------


@pytest.mark.parametrize("name", FAMILY_NAMES)
@pytest.mark.parametrize("d", [10, 12])
def test_isotypic_route_reproduces_dense_spectrum(name, d):
    r = family_point(name, d)
    raw = np.linalg.eigvalsh(hessian(lift(r)))
    expanded = np.sort([v for v, deg, _ in rep_spectrum(r) for _ in range(int(round(deg)))])
    assert expanded.size == d * d + d
    assert np.abs(expanded - raw).max() < 1e-9 * np.abs(raw).max()


def test_eigenvalues_sum_to_trace():
    H = hessian(lift(family_point("typeM_I", 12)))
    assert np.linalg.eigvalsh(H).sum() == pytest.approx(np.trace(H), rel=1e-10)


def test_identity_first_layer_clusters(identity12):
    rep = full_spectrum(identity12, "first_layer_only")
    assert rep.dimension == 144
    by_center = {round(c.center, 4): c for c in rep.clusters}
    assert by_center[round(XV, 4)].composition["x_p"] == 55
    assert by_center[round(YV, 4)].multiplicity == 54
    assert by_center[round(YV, 4)].rep_label == "y_p"


def test_identity_full_spectrum(identity12):
    rep = full_spectrum(identity12, "full", family="identity")
    assert rep.dimension == 156
    assert rep.gauge_modes == 12
    assert sum(np.abs(rep.raw) < 1e-9 * np.abs(rep.raw).max()) == 12
    for c in rep.clusters:
        assert c.spread <= rep.cluster_gap * c.multiplicity
    centers = [c.center for c in rep.clusters]
    assert np.all(np.diff(centers) > rep.cluster_gap)
    doc = rep.as_dict("raw.csv")
    assert doc["raw_path"] == "raw.csv" and doc["family"] == "identity"


def test_full_spectrum_rejects_unknown_mode(identity12):
    with pytest.raises(ValueError):
        full_spectrum(identity12, "second-layer")


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_gauge_forms_vanish(name):
    p = lift(family_point(name, 12))
    H = hessian(p)
    assert np.abs(gauge_forms(p, H)).max() < 1e-9 * np.linalg.norm(H, 2)


@pytest.mark.parametrize("d", [16, 24, 32])
def test_skewness_count(d):
    raw = np.linalg.eigvalsh(hessian(lift(family_point("typeII", d))))
    assert int(np.sum(raw > d / 8)) == d + 1


def test_type_ii_top_eigenvalue_slopes():
    # branches are followed within their irreducible; sorting by size alone would swap them as d grows
    ds = [16, 24, 32, 48]
    branches = {}
    for d in ds:
        r = family_point("typeII", d)
        blocks = rep_blocks(r)
        top_t = np.sort(blocks["t"].eigenvalues)[::-1][:3]
        top_s = np.sort(blocks["s_p"].eigenvalues)[-1]
        for k, v in enumerate(top_t):
            branches.setdefault(f"t{k}", []).append(v)
        branches.setdefault("s", []).append(top_s)
        grown = np.sort(np.concatenate([top_t, np.full(int(round(blocks["s_p"].degree)), top_s)]))
        raw = np.sort(np.linalg.eigvalsh(hessian(lift(r))))[-(d + 1):]
        assert grown.size == d + 1
        np.testing.assert_allclose(raw, grown, rtol=1e-9)
    slopes = {k: np.polyfit(ds, v, 1)[0] for k, v in branches.items()}
    assert slopes["t0"] == pytest.approx(1 / math.pi, rel=0.05)
    for k in ("t1", "t2", "s"):
        assert slopes[k] == pytest.approx(0.25, rel=0.05)


@settings(max_examples=100)
@given(st.lists(st.floats(-5, 5), min_size=1, max_size=40), st.floats(1e-6, 0.5))
def test_clusters_partition_the_values(values, gap):
    groups = cluster_eigenvalues(values, gap)
    assert sorted(v for g in groups for v in g) == sorted(values)
    for g in groups:
        assert np.all(np.diff(g) <= gap)
    for a, b in zip(groups, groups[1:]):
        assert b[0] - a[-1] > gap


def test_default_gap():
    assert default_gap(100) == pytest.approx(0.005)
    assert default_gap(1e12) == 1e-6


# tables --------------------------------------------------------------------------------


def test_identity_table_at_d12():
    check = spectrum_table_check("identity", 12)
    d = 12
    merged = dict(check.multiplicities())
    expected = {0.0: d, XV: (d - 1) * (d - 2) // 2, S_VAL: d - 1, Q_VAL: d - 1, YV: d * (d - 3) // 2,
                L2(d): d - 1, L1(d): 1, L3(d): 1}
    assert merged == {round(k, 12): v for k, v in expected.items()}
    assert sum(merged.values()) == 156
    assert check.dense_deviation < 1e-9


def test_type_ii_table_at_d16():
    check = spectrum_table_check("typeII", 16)
    d = 16
    degrees = {row.rep_label: row.degree for row in check.rows}
    assert degrees["x_p"] == (d - 2) * (d - 3) // 2
    assert degrees["y_p"] == (d - 1) * (d - 4) // 2
    x_rows = [row for row in check.rows if row.rep_label == "x_p"]
    assert x_rows[0].leading == XV


def test_table_check_preconditions():
    with pytest.raises(ValueError):
        spectrum_table_check("identity", 8)


def test_table_mismatch_is_detected():
    r = family_point("typeII", 12)
    with pytest.raises(MultiplicityMismatch):
        spectrum_table_check("identity", 12, point=r)


def test_assignment_is_one_to_one():
    assert assign_leading([0.1, 0.11, 3.0], [3.1, 0.0, 0.2]) == [0.0, 0.2, 3.1]


# stability and figure rows -----------------------------------------------------------


def test_global_family_has_no_sign_change():
    res = stability_threshold("identity", 9, 20)
    assert res.monotone
    assert min(res.lo_eigenvalue, res.hi_eigenvalue) > 0
    assert "no sign change" in res.describe()


def test_growing_rows():
    rows = [EigenRow(d, v, 1, "t") for d in (8, 9, 10) for v in (0.1, d / 4)]
    rows += [EigenRow(d, d / math.pi, 1, "s_p") for d in (8, 9, 10)]
    slopes = growing_rows(rows)
    assert slopes == pytest.approx({"t#1": 0.25, "s_p#0": 1 / math.pi})
