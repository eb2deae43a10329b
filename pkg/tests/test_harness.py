import csv
import io
import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import family_point
from relu_landscape.harness.checks import derivative_checks, kernel_checks
from relu_landscape.harness.cli import main
from relu_landscape.harness.io import csv_text, fmt, json_text
from relu_landscape.harness.sgd import (
    ExperimentConfig,
    batch_gradient,
    classify,
    polish,
    run_one,
    run_sgd,
    xavier_init,
)
from relu_landscape.landscape import NetworkPair, apply_permutation, central_difference, grad
from relu_landscape.symmetry import IsotropyFamily, lift


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# output formatting -------------------------------------------------------------------


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_floats_round_trip(x):
    assert float(fmt(x)) == x
    assert json.loads(json_text({"v": x}))["v"] == x


def test_json_formatting():
    doc = json.loads(json_text({"a": np.float64(0.1), "b": [math.nan, math.inf], "c": np.int64(3), "d": True, "e": np.bool_(False)}))
    assert doc == {"a": 0.1, "b": [None, None], "c": 3, "d": True, "e": False}
    assert "0.10000000000000001" in json_text([0.1])
    with pytest.raises(TypeError):
        json_text({"x": object()})


def test_csv_formatting():
    text = csv_text(["a", "b", "c"], [[1 / 3, None, True]])
    assert text == "a,b,c\n0.33333333333333331,,true\n"


# SGD harness ----------------------------------------------------------------------------


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(grad_tol=0)
    with pytest.raises(ValueError):
        ExperimentConfig(d=5, k=6)
    with pytest.raises(ValueError):
        ExperimentConfig(d=3, k=3, teacher=(1.0, 2.0))
    with pytest.raises(ValueError):
        ExperimentConfig(lr=-1)
    V, beta = ExperimentConfig(d=3, k=3, teacher=(1.0, 1.0, 2.0)).teacher_arrays()
    np.testing.assert_array_equal(V, np.diag([1.0, 1.0, 2.0]))
    np.testing.assert_array_equal(beta, [1.0, 1.0, 2.0])


def test_xavier_bounds():
    cfg = ExperimentConfig(d=20, k=20)
    W, alpha = xavier_init(cfg, np.random.default_rng(0))
    assert np.abs(W).max() <= math.sqrt(6 / 40)
    np.testing.assert_array_equal(alpha, 1.0)


def test_batch_gradient_matches_finite_differences():
    rng = np.random.default_rng(1)
    W, alpha, X = rng.standard_normal((4, 4)), rng.standard_normal(4), rng.standard_normal((32, 4))
    V, beta = np.eye(4), np.ones(4)

    def empirical(x):
        Wx, ax = x[:16].reshape(4, 4), x[16:]
        r = np.maximum(X @ Wx.T, 0) @ ax - np.maximum(X @ V.T, 0) @ beta
        return 0.5 * np.mean(r**2)

    gW, ga = batch_gradient(W, alpha, V, beta, X)
    fd = central_difference(empirical, np.concatenate([W.ravel(), alpha]))
    np.testing.assert_allclose(np.concatenate([gW.ravel(), ga]), fd, atol=1e-7)


def test_zero_learning_rate_returns_the_start():
    cfg = ExperimentConfig(d=5, k=5, runs=1, lr=0.0, max_steps=50, seed=3)
    rec = run_one(cfg, 0)
    W, alpha = xavier_init(cfg, np.random.default_rng(3))
    np.testing.assert_array_equal(rec.pair.W, W)
    np.testing.assert_array_equal(rec.pair.alpha, alpha)
    assert not rec.converged


def test_polish_and_classify_a_perturbed_spurious_point():
    r = family_point("typeII", 10)
    p = lift(r)
    rng = np.random.default_rng(2)
    p = apply_permutation(p, rng.permutation(10), rng.permutation(10))
    noisy = NetworkPair(p.W + 1e-3 * rng.standard_normal(p.W.shape), p.alpha)
    end, _ = polish(noisy, 1e-8)
    assert np.linalg.norm(grad(end)) < 1e-8
    cls, coeffs, fam, dist, rloss = classify(end, 1e-4)
    assert cls.family is IsotropyFamily.SPLIT_1
    assert fam == "typeII"
    assert dist < 1e-4
    assert rloss == pytest.approx(0.018702194585602738, rel=1e-8)


def test_random_matrix_is_not_named():
    rng = np.random.default_rng(4)
    cls, coeffs, fam, _, _ = classify(NetworkPair(rng.standard_normal((6, 6)), np.ones(6)), 1e-4)
    assert not cls.family.named and coeffs is None and fam is None


def test_seeded_runs_are_reproducible():
    cfg = ExperimentConfig(d=4, k=4, runs=2, max_steps=300, seed=7)
    a, b = run_sgd(cfg), run_sgd(cfg)
    for x, y in zip(a, b):
        np.testing.assert_array_equal(x.pair.W, y.pair.W)
        assert x.final_loss == y.final_loss and x.seed == y.seed
    assert [r.seed for r in a] == [7, 8]


def test_diagonal_teacher_gives_adapted_blocks():
    d = 6
    cfg = ExperimentConfig(d=d, k=d, runs=4, teacher=(1.0, 1.0, 1.0, 1.0, 2.0, 2.0), seed=0)
    records = run_sgd(cfg)
    assert any(r.converged for r in records)
    for rec in records:
        if not rec.converged:
            continue
        W = rec.pair.alpha[:, None] * rec.pair.W
        cls = rec.isotropy
        assert cls.family is IsotropyFamily.SPLIT_2
        # the small block sits on the teacher's two heavy coordinates
        assert set(cls.conjugators[1][-2:]) == {4, 5}
        assert np.all(np.abs(W[:, [4, 5]]).max(axis=0) > 3)


# command line ------------------------------------------------------------------------------


def test_cli_multiplicity(capsys):
    code, out, _ = run_cli(capsys, "multiplicity", "--family", "split1", "--d", "10")
    assert code == 0 and out.strip() == "36288000"


@pytest.mark.parametrize("argv", [
    ["multiplicity", "--family", "nope", "--d", "10"],
    ["solve", "--family", "typeQ", "--d", "10"],
    ["solve", "--family", "typeII", "--d", "2"],
    ["figure1", "--family", "typeII", "--d-range", "20:10"],
    ["figure1", "--family", "typeII", "--d-range", "ten"],
    ["stability", "--family", "typeII", "--lo", "10", "--hi", "3"],
    ["continue", "--family", "typeII", "--from", "20", "--to", "12", "--steps", "0"],
    ["series-verify", "--family", "identity"],
    ["spectrum", "--family", "identity", "--d", "12.5"],
    ["sgd", "--d", "4", "--grad-tol", "0"],
    ["bogus"],
])
def test_cli_usage_errors(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err


def test_cli_solve_and_continue(capsys):
    code, out, _ = run_cli(capsys, "solve", "--family", "typeII", "--d", "10")
    doc = json.loads(out)
    assert code == 0 and doc["loss"] == pytest.approx(0.018702194585602738, rel=1e-12)
    code, out, _ = run_cli(capsys, "continue", "--family", "typeII", "--from", "20", "--to", "12", "--steps", "4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [float(r["d"]) for r in rows] == [20, 18, 16, 14, 12]
    assert all(float(r["residual"]) < 1e-11 for r in rows)


def test_cli_spectrum(capsys, tmp_path):
    out_path, raw_path = tmp_path / "report.json", tmp_path / "raw.csv"
    code, _, _ = run_cli(capsys, "spectrum", "--family", "identity", "--d", "12", "--out", str(out_path),
                         "--raw", str(raw_path))
    doc = json.loads(out_path.read_text())
    assert code == 0
    assert sum(c["multiplicity"] for c in doc["clusters"]) == 156
    assert doc["gauge_modes"] == 12 and doc["raw_path"] == str(raw_path)
    assert len(raw_path.read_text().splitlines()) == 157


def test_cli_kernel_check(capsys):
    code, out, _ = run_cli(capsys, "kernel-check", "--pairs", "3", "--samples", "100000", "--configs", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 + 3 + 4
    assert all(r["ok"] == "true" for r in rows)


def test_cli_sgd_is_byte_identical(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        code, _, _ = run_cli(capsys, "sgd", "--d", "4", "--runs", "2", "--max-steps", "300", "--seed", "5", "--out", str(p))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    rows = list(csv.DictReader(io.StringIO(paths[0].read_text())))
    assert [r["seed"] for r in rows] == ["5", "6"]


def test_check_suites_small():
    assert all(c.ok for c in kernel_checks(n_pairs=2, n_samples=50_000))
    checks = derivative_checks(n_configs=2)
    assert len(checks) == 4 and all(c.ok for c in checks)
