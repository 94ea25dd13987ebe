"""Matrix exponentials of the cyclic generator and twisted circulants."""

import cmath
import math
import random

import numpy as np
import pytest

from cyclofun.cyclic import alpha_root, make_context
from cyclofun.demoivre import (
    cheb_norm,
    circulant_checks,
    circulant_det_direct,
    circulant_det_spectral,
    circulant_from_components,
    circulant_group_law_residual,
    demoivre_matrix,
    demoivre_sweep,
    generator_matrix,
    identity_suite,
    negative_check_non_exp,
    sylvester_matrix,
)
from cyclofun.hyperbolic import build_family, h_eval, laurent_component
from cyclofun.reports import (
    IdentityReport,
    all_pass,
    reports_to_csv,
    reports_to_json,
)
from cyclofun.series import series_exp, series_geometric


def test_generator_layout():
    g = generator_matrix(2, 5)
    assert g.tolist() == [[0, 1], [5, 0]]
    g3 = generator_matrix(3, -1j)
    assert g3[0, 1] == 1 and g3[1, 2] == 1 and g3[2, 0] == -1j
    assert g3[0, 0] == 0 and np.trace(g3) == 0
    with pytest.raises(ValueError):
        generator_matrix(1, 1)


def test_generator_power_returns_weight_times_identity():
    rng = random.Random(11)
    for n in range(2, 9):
        alpha = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        g = generator_matrix(n, alpha)
        got = np.linalg.matrix_power(g, n)
        assert cheb_norm(got - alpha * np.eye(n)) <= 1e-13


def test_matrix_at_zero_is_identity():
    m = demoivre_matrix(3, alpha_root(1, 3), 0)
    assert cheb_norm(m - np.eye(3)) <= 1e-15


def test_rotation_block_for_alternating_weight():
    t = 0.8
    m = demoivre_matrix(2, alpha_root(-1, 2), t)
    want = np.array([[math.cos(t), math.sin(t)],
                     [-math.sin(t), math.cos(t)]])
    assert cheb_norm(m - want) <= 1e-12


def test_assembled_and_taylor_routes_agree():
    for n in (2, 3, 4):
        for alpha in (1, -1, 2, 1j):
            a = alpha_root(alpha, n)
            for z in (0.7, -0.4 + 0.3j, 2.0):
                assembled = demoivre_matrix(n, a, z, "assembled")
                taylor = demoivre_matrix(n, a, z, "taylor")
                assert cheb_norm(assembled - taylor) <= 1e-11
    with pytest.raises(ValueError):
        demoivre_matrix(2, alpha_root(1, 2), 0.5, "secret")


def test_matrix_satisfies_the_shift_ode():
    n, a = 3, alpha_root(1, 3)
    g = generator_matrix(3, 1)
    z, h = 0.4, 1e-5
    lhs = (demoivre_matrix(n, a, z + h) - demoivre_matrix(n, a, z - h)) / (2 * h)
    rhs = g @ demoivre_matrix(n, a, z)
    assert cheb_norm(lhs - rhs) <= 1e-6


def test_circulant_layout():
    m = circulant_from_components([10, 20], 2)
    assert m.tolist() == [[10, 20], [40, 10]]
    m3 = circulant_from_components([1, 2, 3], -1)
    assert m3.tolist() == [[1, 2, 3], [-3, 1, 2], [-2, -3, 1]]
    with pytest.raises(ValueError):
        circulant_from_components([1], 1)


def test_circulant_equals_generator_polynomial():
    rng = random.Random(5)
    n = 4
    alpha = 0.3 - 0.2j
    vals = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n)]
    g = generator_matrix(n, alpha)
    direct = circulant_from_components(vals, alpha)
    summed = sum(vals[k] * np.linalg.matrix_power(g, k) for k in range(n))
    assert cheb_norm(direct - summed) <= 1e-13


def test_spectral_determinant_frozen_values():
    ctx = make_context(3)
    one = alpha_root(1, 3)
    assert abs(circulant_det_spectral([1, 0, 0], ctx, one) - 1) <= 1e-15

    geo = series_geometric(64)
    comps = [laurent_component(geo, ctx, one, k).evaluate(0.3) for k in range(3)]
    assert abs(circulant_det_spectral(comps, ctx, one) - 1.027749229188078) <= 1e-9

    fam = build_family(3, one)
    hz = [h_eval(fam, s, 0.7, "closed") for s in range(3)]
    assert abs(circulant_det_spectral(hz, ctx, one) - 1) <= 1e-10

    with pytest.raises(ValueError):
        circulant_det_spectral([1, 0], ctx, one)


def test_spectral_matches_lu_on_random_circulants():
    rng = random.Random(77)
    for n in (2, 3, 4, 5):
        ctx = make_context(n)
        for _ in range(5):
            alpha = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            a = alpha_root(alpha, n, branch=rng.randint(0, n - 1))
            vals = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                    for _ in range(n)]
            spec = circulant_det_spectral(vals, ctx, a)
            direct = circulant_det_direct(circulant_from_components(vals, alpha))
            assert abs(spec - direct) <= 1e-9 * max(1.0, abs(direct))


def test_sylvester_is_unitary_and_diagonalizes_the_shift():
    for n in (2, 3, 4, 6):
        ctx = make_context(n)
        s = sylvester_matrix(ctx)
        assert cheb_norm(s @ s.conj().T - np.eye(n)) <= 1e-12
        g = generator_matrix(n, 1)
        d = s.conj().T @ g @ s
        want = np.diag([ctx.omega_pow[l] for l in range(n)])
        assert cheb_norm(d - want) <= 1e-11
        assert cheb_norm(np.linalg.matrix_power(s, 4) - np.eye(n)) <= 1e-12


def test_identity_suite_all_pass_at_unit_weight():
    reps = identity_suite(3, alpha_root(1, 3), 0.7, 0.3)
    assert all_pass(reps)
    byname = {r.identity: r for r in reps}
    assert "group_law" in byname and "triple_product" in byname
    assert byname["triple_product_h011"].expect == "gt"
    assert byname["surface_invariant"].residual <= 1e-12
    assert byname["det_unimodular"].residual <= 1e-12


def test_identity_suite_handles_other_weights():
    for alpha in (-1, 2, 1j):
        reps = identity_suite(3, alpha_root(alpha, 3), 0.5, 0.2)
        assert all_pass(reps)
        names = {r.identity for r in reps}
        assert "triple_product" not in names
        assert "product_mean_rotation" not in names
        assert "group_law" in names and "det_product_geometric" in names


def test_order_two_surface_is_unimodular():
    reps = identity_suite(2, alpha_root(1, 2), 0.9, 0.2)
    byname = {r.identity: r for r in reps}
    assert byname["surface_invariant"].residual <= 1e-12
    assert all_pass(reps)


def test_quartic_value_recorded_for_order_four():
    reps = identity_suite(4, alpha_root(1, 4), 0.6, 0.1)
    assert all_pass(reps)
    byname = {r.identity: r for r in reps}
    assert "quartic_form_value" in byname["det_unimodular"].params
    assert "surface_invariant" not in byname


def test_non_exponential_series_break_the_group_law():
    geo = series_geometric(64)
    reps = negative_check_non_exp(geo, 3, 0.2, 0.2)
    byname = {r.identity: r for r in reps}
    assert byname["group_law_breaks"].passed
    assert byname["group_law_breaks"].residual > 1e-3
    assert byname["det_product_holds"].passed


def test_exponential_scalings_keep_the_group_law():
    for lam in (1, 2, -0.7):
        scaled = series_exp(64).scale_argument(lam)
        assert circulant_group_law_residual(scaled, 3, 0.2, 0.2) <= 1e-10


def test_circulant_battery_passes():
    reps = circulant_checks()
    assert all_pass(reps)
    assert len(reps) == 6
    names = {r.identity for r in reps}
    assert "group_law_breaks" in names
    assert "geometric_det_value" in names


def test_sweep_aggregates_over_draws():
    reps = demoivre_sweep(3, alpha_root(1, 3), draws=3, seed=5, trunc=48)
    assert all_pass(reps)
    byname = {r.identity: r for r in reps}
    assert byname["group_law"].params["draws"] == 3
    again = demoivre_sweep(3, alpha_root(1, 3), draws=3, seed=5, trunc=48)
    assert [r.residual for r in again] == [r.residual for r in reps]


def test_report_serialization_shapes():
    rep = IdentityReport("check", {"n": 2, "alpha": 1 + 0j}, 1e-12, 1e-10)
    data = reports_to_json([rep])[0]
    assert data["pass"] is True and data["identity"] == "check"
    assert data["params"]["alpha"] == [1.0, 0.0]
    csv_text = reports_to_csv([rep])
    lines = csv_text.splitlines()
    assert lines[0] == "identity,n,alpha_re,alpha_im,residual,pass"
    assert lines[1].startswith("check,2,1,0,")
    with pytest.raises(ValueError):
        IdentityReport("x", {}, 0.0, 0.0, "maybe")
