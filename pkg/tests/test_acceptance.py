"""Acceptance gate: one test per advertised capability guarantee.

Each test records a one-line PASS/FAIL entry (printed in the terminal
summary) before asserting, so a red run still reports every criterion.
The two dense-solve criteria use the production grid size and dominate
the suite's wall time.
"""

import json
import math
import time

import numpy as np
import pytest

from conftest import (
    multiset_distance,
    pencil_charpoly_roots,
    random_attractive_profile,
    random_profile_values,
    record_criterion,
)
from specwave import (
    Grid,
    QuadratureSpec,
    ScenarioConfig,
    StepDamping,
    apply_skew_generator,
    assemble_companion,
    coupling_interval,
    delta_pencil_classify,
    endpoint_slopes,
    gaussian,
    lt_sum,
    modulus_lower_bound,
    negative_eigenvalues,
    resolvent_block_action,
    run,
    sampled,
    scan_real_roots,
    solve_spectrum,
    step,
    sup_hs_norm,
    verify_inequalities,
)
from specwave.cli import main

DENSE_N = 4000


def _step_argv(command, out, *extra):
    return [
        command, "--damping-kind", "step", "--a-re", "-3", "--b", "1",
        "--out-dir", str(out), *extra,
    ]


def test_criterion_1_secular_root_reproduced_by_dense_solve(tmp_path):
    out_secular = tmp_path / "secular"
    code_secular = main(_step_argv("step-secular", out_secular))
    payload = json.loads((out_secular / "report.json").read_text())
    (root,) = payload["results"]["step-secular"]["roots"]
    mu_star, residual = root["mu_star"], root["residual"]

    out_solve = tmp_path / "solve"
    t0 = time.perf_counter()
    code_solve = main(
        _step_argv("solve", out_solve, "--grid-l", "40", "--grid-n", str(DENSE_N))
    )
    wall = time.perf_counter() - t0
    genuine = json.loads((out_solve / "report.json").read_text())["results"]["solve"][
        "spectrum"
    ]["genuine"]
    rel = min(
        (abs(complex(re, im) - mu_star) / abs(mu_star) for re, im in genuine),
        default=math.inf,
    )

    ok = (
        code_secular == 0
        and code_solve == 0
        and 0.0 < mu_star < 3.0
        and residual < 1e-10
        and rel <= 1e-2
    )
    record_criterion(
        1,
        "secular root in (0,3) with residual < 1e-10, reproduced by the dense "
        f"solve within 1e-2 relative (solve wall time {wall:.0f}s; the 120s "
        "laptop runtime target is informational on this single-CPU host)",
        ok,
    )
    print(f"criterion 1 dense solve wall time: {wall:.1f} s")
    assert ok, (mu_star, residual, rel, code_secular, code_solve)


def test_criterion_2_small_dampings_have_no_point_spectrum():
    failures = []
    for kind, amp, size in (("step", -1.0, 0.5), ("gaussian", 1.0, 1.0)):
        for half_length in (20.0, 40.0):
            kw = dict(
                damping_kind=kind,
                amp=amp,
                half_length=half_length,
                interior_count=DENSE_N,
                analyses=["enclose", "solve"],
            )
            kw["half_width" if kind == "step" else "width"] = size
            report = run(ScenarioConfig(**kw))
            verdict = report.results["enclose"]["verdict"]
            count = report.results["solve"]["spectrum"]["genuine_count"]
            if verdict != "empty_point_spectrum" or count != 0 or not report.all_pass:
                failures.append((kind, half_length, verdict, count, report.failures))
    ok = not failures
    record_criterion(
        2,
        "sub-threshold step and gaussian dampings: absence verdict and zero "
        "genuine eigenvalues at both box sizes",
        ok,
    )
    assert ok, failures


def test_criterion_3_near_threshold_root_with_one_sided_slopes():
    w = StepDamping(-1.1, 1.0)
    roots = scan_real_roots(w)
    slope_lo, slope_hi = endpoint_slopes(w)
    verdict = run(
        ScenarioConfig(
            damping_kind="step", amp=-1.1, half_width=1.0, analyses=["similarity"]
        )
    ).results["similarity"]["verdict"]

    ok = (
        len(roots) == 1
        and roots[0].mu_star == pytest.approx(0.14719141982172268, abs=1e-9)
        and slope_lo == pytest.approx(-0.22, rel=1e-10)
        and slope_hi == pytest.approx(-4.62, rel=1e-10)
        and slope_lo * slope_hi > 0.0
        and verdict == "inconclusive"
    )
    record_criterion(
        3,
        "near-threshold step keeps a secular root even though both endpoint "
        "slopes (-0.22, -4.62) share a sign, and the similarity test is "
        "inconclusive there",
        ok,
    )
    assert ok, (roots, slope_lo, slope_hi, verdict)


def test_criterion_4_square_well_bounds_and_random_family():
    g = Grid(30.0, 3000)
    well = step(-1.0, 1.0)
    s = negative_eigenvalues(well, g)
    # Matching condition k tan k = sqrt(1 - k^2), i.e. cos k = k.
    k = 0.739085133215161
    lam1_oracle = k * k - 1.0
    lam1 = float(s.eigenvalues[0]) if s.count else math.nan
    root_sum = lt_sum(s, 0.5)
    suite = verify_inequalities(well, 0.5, g)
    bargmann = next(c for c in suite.checks if c.name == "bargmann_count")

    family_violations = []
    rng = np.random.default_rng(42)
    for index in range(20):
        profile = random_attractive_profile(rng, index)
        rep = verify_inequalities(profile, 0.5, g)
        if not rep.all_pass:
            family_violations.append((index, [c.name for c in rep.failures]))

    ok = (
        s.count == 1
        and abs(lam1 - (-0.4539)) < 1e-3
        and abs(lam1 - lam1_oracle) < 1e-3
        and 0.5 <= root_sum <= 1.0
        and abs(root_sum - 0.6737) < 2e-3
        and bargmann.rhs == 2.0
        and suite.all_pass
        and not family_violations
    )
    record_criterion(
        4,
        "unit square well: ground state -0.4539(1e-3), sqrt-sum 0.6737 inside "
        "[0.5, 1.0], one bound state vs cap 2; 20-member random attractive "
        "family satisfies every bound at 1e-2 relative",
        ok,
    )
    assert ok, (s.count, lam1, root_sum, bargmann.rhs, family_violations)


def test_criterion_5_certificate_ceiling_and_resolvent_identity():
    a = gaussian(1.0, 1.0)
    ceiling = math.sqrt(math.pi) / 2.0
    sup_coarse = sup_hs_norm(a, quad=QuadratureSpec(panels=400)).value
    sup_fine = sup_hs_norm(a, quad=QuadratureSpec(panels=800)).value

    g = Grid(20.0, 400)
    rng = np.random.default_rng(5)
    f1 = rng.standard_normal(400) + 1j * rng.standard_normal(400)
    f2 = rng.standard_normal(400) + 1j * rng.standard_normal(400)
    worst_identity = 0.0
    for xi in (1j, 0.01 + 0.3j, -2.0 - 5.0j, 0.001j):
        g1, g2 = resolvent_block_action(xi, f1, f2, g)
        h1, h2 = apply_skew_generator(g1, g2, g)
        worst_identity = max(
            worst_identity,
            float(np.max(np.abs(h1 - xi * g1 - f1))),
            float(np.max(np.abs(h2 - xi * g2 - f2))),
        )

    ok = (
        sup_coarse <= ceiling + 1e-6
        and abs(sup_fine - sup_coarse) < 1e-6
        and worst_identity < 1e-10
    )
    record_criterion(
        5,
        "gaussian certificate sup over the default shift grid stays below "
        "sqrt(pi)/2, is quadrature-converged to 1e-6, and the block resolvent "
        "identity holds to 1e-10",
        ok,
    )
    assert ok, (sup_coarse, sup_fine - sup_coarse, worst_identity)


def test_criterion_6_companion_matches_charpoly_roots():
    rng = np.random.default_rng(42)
    g = Grid(5.0, 6)
    worst = 0.0
    for _ in range(50):
        values = random_profile_values(rng, 6, "complex")
        spec = solve_spectrum(assemble_companion(sampled(g, values), g))
        oracle = pencil_charpoly_roots(values, g)
        worst = max(worst, multiset_distance(spec.mu, oracle))
    ok = worst < 1e-8
    record_criterion(
        6,
        "companion eigenvalues equal determinant-polynomial roots on 50 random "
        f"complex dampings (worst multiset distance {worst:.2e})",
        ok,
    )
    assert ok, worst


def test_criterion_7_structural_spectral_symmetries():
    rng = np.random.default_rng(42)
    g = Grid(10.0, 120)
    conj_worst = imag_worst = nonneg_worst = 0.0
    for _ in range(10):
        mu = solve_spectrum(
            assemble_companion(sampled(g, random_profile_values(rng, 120, "real")), g)
        ).mu
        conj_worst = max(conj_worst, multiset_distance(mu, np.conj(mu)))
    for _ in range(10):
        mu = solve_spectrum(
            assemble_companion(sampled(g, random_profile_values(rng, 120, "imag")), g)
        ).mu
        imag_worst = max(imag_worst, float(np.max(np.abs(mu.real))))
    for _ in range(10):
        mu = solve_spectrum(
            assemble_companion(sampled(g, random_profile_values(rng, 120, "nonneg")), g)
        ).mu
        nonneg_worst = max(nonneg_worst, float(np.max(mu.real)))
    ok = conj_worst < 1e-8 and imag_worst < 1e-8 and nonneg_worst <= 1e-10
    record_criterion(
        7,
        "10-profile families: real damping gives conjugate-symmetric spectra, "
        "imaginary damping purely imaginary spectra, nonnegative damping "
        "left-half-plane spectra",
        ok,
    )
    assert ok, (conj_worst, imag_worst, nonneg_worst)


def test_criterion_8_coupling_window_and_sweep_hit():
    a = step(-3.0, 1.0)
    floor_region = modulus_lower_bound(a)
    window = coupling_interval(a)
    exact = (
        floor_region.params["bound"] == 1.0 / 3.0
        and window.params["lo"] == 1.0 / 3.0
        and window.params["hi"] == 2.0 / 3.0
    )

    result = run(
        ScenarioConfig(
            damping_kind="step",
            amp=-3.0,
            half_width=1.0,
            half_length=30.0,
            interior_count=1199,
            alpha_values=[0.5, 0.6, 2.0 / 3.0],
            analyses=["sweep-alpha"],
        )
    ).results["sweep-alpha"]
    lo, hi = window.params["lo"], window.params["hi"]
    hits = [
        r["alpha"]
        for r in result["sweep"]
        if lo <= r["alpha"] <= hi and any(mu > 0.0 for mu in r["genuine_real"])
    ]

    ok = exact and result["interval_hit"] is True and len(hits) >= 1
    record_criterion(
        8,
        "trace-formula floor 1/3 and coupling window [1/3, 2/3] come out exact, "
        "and the sweep finds a genuine positive eigenvalue inside the window",
        ok,
    )
    assert ok, (floor_region.params, window.params, result["interval_hit"], hits)


def test_criterion_9_delta_coupling_trichotomy():
    rng = np.random.default_rng(42)
    wrong = []
    for _ in range(100):
        alpha = float(rng.uniform(-10.0, 10.0))
        if alpha in (-2.0, 2.0):
            continue
        if delta_pencil_classify(alpha) != "no_solution":
            wrong.append(alpha)
    ok = (
        delta_pencil_classify(-2) == "right_half_plane"
        and delta_pencil_classify(2) == "left_half_plane"
        and delta_pencil_classify(-2.0) == "right_half_plane"
        and delta_pencil_classify(2.0) == "left_half_plane"
        and delta_pencil_classify(2.0000000001) == "no_solution"
        and not wrong
    )
    record_criterion(
        9,
        "delta-damping pencil: couplings -2/+2 fill the right/left open half "
        "plane and 100 random other couplings give no point spectrum, exactly",
        ok,
    )
    assert ok, wrong
