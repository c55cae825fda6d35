import numpy as np
import pytest

from specwave import (
    BranchCutError,
    Grid,
    QuadratureSpec,
    RealShiftError,
    ResolventKernel,
    XiGrid,
    apply_skew_generator,
    bs_hs_norm,
    default_xi_grid,
    gaussian,
    green_kernel,
    hs_norm_table,
    kato_similarity_verdict,
    resolvent_block_action,
    step,
    sup_hs_norm,
    zero,
)


def test_green_kernel_closed_form_at_minus_one():
    x = np.linspace(-3.0, 3.0, 7)
    vals = green_kernel(-1.0, x[:, None], x[None, :])
    expected = 0.5 * np.exp(-np.abs(x[:, None] - x[None, :]))
    assert np.allclose(vals, expected, atol=1e-15)


def test_green_kernel_modulus_ceiling():
    rng = np.random.default_rng(7)
    x = rng.uniform(-5.0, 5.0, size=40)
    y = rng.uniform(-5.0, 5.0, size=40)
    for z in (1j, -2.0 + 0.3j, 4.0 + 1e-3j, -1e-4 - 5j, 100.0 - 1j):
        vals = green_kernel(z, x, y)
        assert np.all(np.abs(vals) <= 1.0 / (2.0 * np.sqrt(abs(z))) + 1e-15)


def test_green_kernel_branch_cut_guard():
    with pytest.raises(BranchCutError):
        green_kernel(1.0, 0.0, 0.0)
    with pytest.raises(BranchCutError):
        green_kernel(0.0, 0.0, 0.0)
    with pytest.raises(BranchCutError):
        ResolventKernel(2.5)
    # Negative real z is fine (below the cut).
    assert green_kernel(-4.0, 0.0, 0.0) == pytest.approx(0.25)


def test_resolvent_kernel_wrapper():
    ker = ResolventKernel(-1.0 + 0.5j)
    assert ker.kappa == pytest.approx(complex(np.sqrt(1.0 - 0.5j)))
    x = np.array([0.0, 1.0])
    assert np.allclose(ker(x, 0.0), green_kernel(-1.0 + 0.5j, x, 0.0))


def test_xi_grid_validation():
    with pytest.raises(RealShiftError):
        XiGrid(moduli=np.array([1.0]), phases=np.array([0.0]))
    with pytest.raises(ValueError):
        XiGrid(moduli=np.array([0.0, 1.0]), phases=np.array([np.pi / 2]))
    g = XiGrid(moduli=np.array([1.0, 2.0]), phases=np.array([np.pi / 2]))
    assert np.allclose(g.points, [1j, 2j])


def test_default_xi_grid_shape():
    g = default_xi_grid()
    assert len(g.moduli) == 25
    assert len(g.phases) == 8
    assert g.moduli[0] == pytest.approx(1e-3)
    assert g.moduli[-1] == pytest.approx(1e3)
    assert np.all(np.sin(g.phases) != 0.0)
    assert len(g.points) == 200


def test_bs_hs_norm_small_step():
    val = bs_hs_norm(step(-1.0, 0.5), 1j)
    assert 0.0 < val <= 0.5 + 1e-12  # ceiling l1/2


def test_bs_hs_norm_panel_doubling_converged():
    a = gaussian(1.0, 1.0)
    coarse = bs_hs_norm(a, 0.001j, QuadratureSpec(panels=400))
    fine = bs_hs_norm(a, 0.001j, QuadratureSpec(panels=800))
    assert abs(coarse - fine) < 1e-6


def test_bs_hs_norm_rejects_real_shift():
    with pytest.raises(RealShiftError):
        bs_hs_norm(step(-1.0, 0.5), 1.0)


def test_bs_hs_norm_zero_profile():
    assert bs_hs_norm(zero(), 1j) == 0.0


def test_hs_norm_table_layout_and_consistency():
    a = step(-1.0, 0.5)
    grid = XiGrid(
        moduli=np.array([0.1, 1.0, 10.0]),
        phases=np.array([np.pi / 4, np.pi / 2]),
    )
    table = hs_norm_table(a, grid)
    assert table.shape == (6, 3)
    assert np.allclose(table[:2, 0], 0.1)  # moduli outer
    assert np.allclose(table[::2, 1], np.pi / 4)  # phases inner
    for r, phi, val in table:
        assert val == pytest.approx(bs_hs_norm(a, r * np.exp(1j * phi)), abs=1e-14)


def test_sup_agrees_with_table():
    a = step(-1.0, 0.5)
    table = hs_norm_table(a)
    sup = sup_hs_norm(a)
    assert sup.value == pytest.approx(float(table[:, 2].max()))
    k = int(np.argmax(table[:, 2]))
    r, phi, _ = table[k]
    assert sup.xi == pytest.approx(complex(r * np.exp(1j * phi)))


def test_certificate_never_exceeds_analytic_ceiling():
    for a in (step(-1.0, 0.5), step(-3.0, 1.0), gaussian(1.0, 1.0)):
        verdict = kato_similarity_verdict(a)
        assert verdict.analytic_bound == pytest.approx(0.5 * verdict.l1_norm)
        assert verdict.sup_hs <= verdict.analytic_bound + 1e-8 + 0.5 * verdict.l1_error


def test_verdict_small_step_is_similar():
    verdict = kato_similarity_verdict(step(-1.0, 0.5))
    assert verdict.verdict == "similar_to_undamped"
    assert verdict.l1_norm == pytest.approx(1.0)


def test_verdict_above_threshold_is_inconclusive():
    verdict = kato_similarity_verdict(step(-1.1, 1.0))
    assert verdict.verdict == "inconclusive"
    assert verdict.l1_norm == pytest.approx(2.2)


def test_verdict_serialization():
    d = kato_similarity_verdict(step(-1.0, 0.5)).to_dict()
    assert set(d) == {
        "verdict", "l1_norm", "l1_error", "analytic_bound", "sup_hs", "attaining_xi",
    }
    assert isinstance(d["attaining_xi"], list) and len(d["attaining_xi"]) == 2


def test_resolvent_block_identity():
    g = Grid(10.0, 200)
    rng = np.random.default_rng(11)
    f1 = rng.standard_normal(200) + 1j * rng.standard_normal(200)
    f2 = rng.standard_normal(200) + 1j * rng.standard_normal(200)
    for xi in (1j, 0.3 + 2j, -5.0 - 0.7j):
        g1, g2 = resolvent_block_action(xi, f1, f2, g)
        h1, h2 = apply_skew_generator(g1, g2, g)
        res = max(
            np.max(np.abs(h1 - xi * g1 - f1)), np.max(np.abs(h2 - xi * g2 - f2))
        )
        assert res < 1e-10


def test_resolvent_block_action_validation():
    g = Grid(10.0, 50)
    f = np.zeros(50)
    with pytest.raises(RealShiftError):
        resolvent_block_action(2.0, f, f, g)
    with pytest.raises(ValueError):
        resolvent_block_action(1j, f, np.zeros(49), g)
    with pytest.raises(ValueError):
        resolvent_block_action(1j, np.zeros(51), np.zeros(51), g)
