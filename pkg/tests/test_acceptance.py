"""Acceptance criteria 1-12; run directly or through pytest for the PASS/FAIL summary."""
import csv
import math
import sys
import time

import numpy as np
import pytest

from conftest import FAMILY_NAMES, family_point
from relu_landscape.harness.checks import derivative_checks, kernel_checks
from relu_landscape.harness.cli import main as cli_main
from relu_landscape.harness.sgd import ExperimentConfig, run_sgd
from relu_landscape.landscape import grad, hessian
from relu_landscape.reduced_flow.cells import reduced_loss
from relu_landscape.reduced_flow.equations import reduced_grad
from relu_landscape.reduced_flow.series import fit_family_coefficients
from relu_landscape.spectrum.dense import gauge_forms
from relu_landscape.spectrum.figure import growing_rows, EigenRow
from relu_landscape.spectrum.stability import min_nongauge, stability_threshold
from relu_landscape.spectrum.tables import agreement_constant, fit_table_constant, spectrum_table_check
from relu_landscape.symmetry import (
    IsotropyFamily,
    ReducedPoint,
    coefficient_masks,
    lift,
    multiplicity,
    orbit_size_bruteforce,
    template,
)
from relu_landscape.families import get_family

PI = math.pi
criterion = pytest.mark.criterion


@criterion(1, "kernel matches Monte-Carlo on 20 pairs; kernel(e1,e2) = 1/(2pi)")
def test_kernel_oracle():
    t0 = time.perf_counter()
    checks = kernel_checks(n_pairs=20, n_samples=10**6)
    elapsed = time.perf_counter() - t0
    bad = [c.name for c in checks if not c.ok]
    assert checks[0].name == "kernel(e1,e2)" and checks[0].bound == 1e-12
    assert len(checks) == 21
    assert not bad, bad
    assert elapsed < 10


@criterion(2, "analytic gradient and Hessian match central differences at 50 configurations")
def test_derivatives():
    t0 = time.perf_counter()
    checks = derivative_checks(n_configs=50, d=5, rtol=1e-5)
    elapsed = time.perf_counter() - t0
    assert len(checks) == 100
    assert all(c.ok for c in checks), max(c.error for c in checks)
    assert elapsed < 30


@criterion(3, "reduced gradient equals the full gradient restricted to each subspace")
def test_reduced_full_consistency():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for name in FAMILY_NAMES:
        f = get_family(name)
        base = family_point(name, 64).as_floats()
        for d in (9, 12):
            for _ in range(20):
                r = ReducedPoint(f.isotropy, tuple(base + 0.1 * rng.standard_normal(base.size)), d)
                gW, _ = lift(r).index.split(grad(lift(r)))
                sums = np.array([gW[m].sum() for m in coefficient_masks(r.p, d)])
                worst = max(worst, float(np.abs(reduced_grad(r) - sums).max()))
    print(f"max abs difference {worst:.3e}")
    assert worst < 1e-10


LOSS_CASES = {
    "typeA": lambda d: -1 / PI + 0.5 - 4 / (3 * PI * math.sqrt(d)) + (-0.5 - 2 / PI**2 + 3 / PI) / d,
    "typeII": lambda d: (0.5 - 2 / PI**2) / d,
    "typeM_II": lambda d: (PI**2 - 4) / (PI**2 * d),
    "typeN_II": lambda d: (1.5 - 6 / PI**2) / d,
}


@criterion(4, "family losses deviate from the leading terms with decay exponent -3/2 +- 0.15")
def test_loss_values():
    ds = [20, 40, 80]
    slopes = {}
    for name, leading in LOSS_CASES.items():
        dev = [abs(float(reduced_loss(family_point(name, d))) - leading(d)) for d in ds]
        slopes[name] = float(np.polyfit(np.log(ds), np.log(dev), 1)[0])
    print("log-log slopes", slopes)
    assert all(abs(s + 1.5) <= 0.15 for s in slopes.values()), slopes


@criterion(5, "fitted half-power coefficients of the type-II family match the listed ones to 1e-3")
def test_series_coefficients():
    t0 = time.perf_counter()
    f = get_family("typeII")
    fits = fit_family_coefficients(f)
    worst = 0.0
    for i, fit in enumerate(fits, start=1):
        for m, listed in f.series[i].items():
            err = abs(fit.coefficient(m) - listed) / abs(listed)
            worst = max(worst, err)
        # orders below the last listed one that the table leaves out are zero
        for m in range(max(f.series[i]) + 1):
            if m not in f.series[i]:
                worst = max(worst, abs(fit.coefficient(m)))
    a4 = fits[3]
    assert a4.coefficient(2) == pytest.approx(4 / PI, rel=1e-3)
    assert a4.coefficient(3) == pytest.approx(32 / PI**3, rel=1e-3)
    print(f"worst error {worst:.3e}")
    assert worst < 1e-3
    assert time.perf_counter() - t0 < 60


@criterion(6, "dense spectra have exactly the tabulated multiplicities; residual <= C d^-1/2")
def test_spectrum_tables():
    for name in FAMILY_NAMES:
        for d in (12, 16):
            check = spectrum_table_check(name, d)  # raises on any multiplicity mismatch
            assert sum(r.degree for r in check.rows) == d * d + d
        C, checks = fit_table_constant(name, [12, 16, 24, 32])
        print(f"{name}: C = {C:.4f}")
        assert math.isfinite(C)
        for c in checks:
            assert c.max_residual <= C / math.sqrt(c.d) * (1 + 1e-12)


@criterion(7, "scaling-tangent quadratic forms vanish at every refined critical point")
def test_gauge_kernel():
    worst = 0.0
    for name in FAMILY_NAMES:
        for d in (10, 12, 16):
            p = lift(family_point(name, d))
            H = hessian(p)
            forms = gauge_forms(p, H)
            assert forms.size == d
            worst = max(worst, float(np.abs(forms).max() / np.linalg.norm(H, 2)))
    print(f"max |t^T H t| / |H| = {worst:.3e}")
    assert worst < 1e-9


@criterion(8, "type-II stability threshold d* = 5.71 +- 0.05; unstable at d=3, stable at d=10")
def test_stability_threshold():
    res = stability_threshold("typeII", 3, 10)
    at3, label3 = min_nongauge(family_point("typeII", 3))
    at10, _ = min_nongauge(family_point("typeII", 10))
    print(res.describe(), f"| d=3: {at3:.4f} ({label3}), d=10: {at10:.4f}")
    failures = []
    if not at3 < 0:
        failures.append("d=3 has no negative non-gauge eigenvalue")
    if not at10 > 0:
        failures.append("d=10 has a negative non-gauge eigenvalue")
    if res.d_star is None or abs(res.d_star - 5.71) > 0.05:
        failures.append(f"d* = {res.d_star} outside 5.71 +- 0.05")
    assert not failures, failures


@criterion(9, "orbit multiplicities d!, d d!, d! C(d,2), d! C(d,3); brute force at d=4")
def test_multiplicities():
    for d in range(9, 13):
        f = math.factorial(d)
        assert [multiplicity(IsotropyFamily.from_p(p), d) for p in range(4)] == [
            f, d * f, f * math.comb(d, 2), f * math.comb(d, 3)]
    rng = np.random.default_rng(9)
    for p in range(4):
        coeffs = rng.permutation(np.linspace(0.3, 1.9, 6))[: (2, 5, 6, 6)[p]]
        assert orbit_size_bruteforce(template(p, coeffs, 4)) == multiplicity(IsotropyFamily.from_p(p), 4)


@criterion(10, "type-II and identity spectra agree within C d^-1/2 at d = 16, 32")
def test_spurious_global_agreement():
    C, _ = fit_table_constant("typeII", [12, 16, 24, 32])
    worst, scaled = agreement_constant("typeII", "identity", [16, 32])
    print(f"distance * sqrt(d) = {scaled}, table constant C = {C:.4f}")
    assert math.isfinite(worst)
    assert worst <= C


@criterion(11, "SGD endpoints at d=10 are classified and refine to family points with the reported losses")
def test_sgd_symmetry_breaking():
    t0 = time.perf_counter()
    records = run_sgd(ExperimentConfig(d=10, k=10, runs=100, seed=0))
    elapsed = time.perf_counter() - t0
    converged = [r for r in records if r.converged]
    named = [r for r in converged if r.isotropy is not None and r.isotropy.family.named]
    nontrivial = [r for r in named if r.isotropy.p > 0]
    counts = {}
    for r in converged:
        counts[r.isotropy_name] = counts.get(r.isotropy_name, 0) + 1
    print(f"{len(converged)} converged of {len(records)}; classes {counts}; {elapsed:.0f} s")
    assert converged
    assert all(r.isotropy is not None for r in converged)
    assert nontrivial
    for r in named:
        assert r.family is not None and r.coefficient_distance < 1e-4
        assert min(abs(r.refined_loss - v) for v in (0.0, 0.018, 0.035)) <= 0.002, r.refined_loss
    assert elapsed < 600


@criterion(12, "figure data: d+1 linearly growing eigenvalues (slopes 1/4, 1/pi) and bulk below 0.6")
def test_figure_one(tmp_path):
    out = tmp_path / "figure1.csv"
    assert cli_main(["figure1", "--family", "typeII", "--d-range", "8:64", "--out", str(out)]) == 0
    with open(out) as fh:
        rows = [EigenRow(int(r["d"]), float(r["eigenvalue"]), int(r["multiplicity"]), r["rep_label"])
                for r in csv.DictReader(fh)]
    assert sorted({r.d for r in rows}) == list(range(8, 65))
    slopes = growing_rows(rows)
    print("growing branches", slopes)
    for s in slopes.values():
        assert min(abs(s - 0.25) / 0.25, abs(s - 1 / PI) * PI) < 0.05, s
    assert any(abs(s - 1 / PI) * PI < 0.05 for s in slopes.values())
    assert any(abs(s - 0.25) / 0.25 < 0.05 for s in slopes.values())
    # multiplicity carried by the growing branches, and the bulk beneath them
    for d in range(8, 65):
        per_label = {}
        for r in rows:
            if r.d == d:
                per_label.setdefault(r.rep_label, []).append(r)
        grown, bulk = 0, []
        for label, rs in per_label.items():
            rs.sort(key=lambda r: r.value)
            for rank, r in enumerate(rs):
                if f"{label}#{rank}" in slopes:
                    grown += r.multiplicity
                else:
                    bulk.append(r.value)
        assert grown == d + 1, (d, grown)
        assert max(bulk) < 0.6, (d, max(bulk))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-p", "no:cacheprovider"]))
