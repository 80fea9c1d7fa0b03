"""Quadrature engine and verification-suite tests."""

from __future__ import annotations

import math
from fractions import Fraction as F

import numpy as np
import pytest

from bc1co.algebra import AlgebraParams, direct_q_span
from bc1co.engine import (
    forward_transform,
    gram_matrix,
    q_function,
    spectral_norm_sq,
    transform_norm_sq,
)
from bc1co.errors import QuadratureError
from bc1co.model import (
    BC1Params,
    QSpec,
    SpectralPoint,
    closed_transform,
    mu_density,
    q_eval,
    q_norm_sq_closed,
    w_tilde,
)
from bc1co.quadrature import QuadConfig, integrate_real_line
from bc1co import verify

from oracles import exact_pair_integral

REF = BC1Params(1.0, 1.0, 6.0)
REF_EXACT = AlgebraParams(1, 1, 6)
CFG = QuadConfig()


class TestRealLineRule:
    def test_odd_integrand_is_exactly_zero(self):
        val = integrate_real_line(
            lambda t: math.cosh(t) ** -6.0 * math.tanh(t) * mu_density(REF, t), CFG
        )
        assert val == 0.0

    def test_weight_mass_anchor(self):
        # antiderivative oracle: 32 tanh^4(t)/4 on (0, inf) gives exactly 8
        val = integrate_real_line(
            lambda t: math.cosh(t) ** -6.0 * mu_density(REF, t), CFG
        )
        assert val == pytest.approx(8.0, rel=1e-9)

    def test_self_convergence(self):
        f = q_function(REF, QSpec(1, 0, 1))
        integrand = lambda t: f(t) ** 2 * mu_density(REF, t)
        loose = integrate_real_line(integrand, QuadConfig(rtol=1e-8))
        tight = integrate_real_line(integrand, QuadConfig(rtol=1e-12))
        assert abs(loose - tight) <= 1e-8 * abs(tight)

    def test_nonconvergence_raises(self):
        with pytest.raises(QuadratureError):
            integrate_real_line(
                lambda t: math.cos(40.0 * t) / (1.0 + t * t),
                QuadConfig(rtol=1e-13, max_level=3),
            )

    def test_truncation_picker(self):
        cfg = QuadConfig.for_params(6.0, 2.0)
        assert 10.0 <= cfg.t_max <= 30.0
        with pytest.raises(ValueError):
            QuadConfig.for_params(3.0, 2.0)

    def test_slow_decay_is_a_hard_error(self):
        # sigma barely above 2 rho: the tail cannot be truncated honestly
        with pytest.raises(QuadratureError):
            QuadConfig.for_params(4.05, 2.0)

    def test_moderately_slow_decay_still_works(self):
        params = BC1Params(1.0, 1.0, 4.5)
        cfg = QuadConfig.for_params(params.sigma, params.rho)
        assert cfg.t_max > 30.0
        f = q_function(params, QSpec(0, 0, 1))
        tv = forward_transform(params, f, SpectralPoint(1.0), cfg)
        wt = w_tilde(params, 1j)
        assert abs(tv.f_plus - wt) <= 1e-8 * abs(wt)


class TestForwardTransform:
    def test_ground_even_matches_w_tilde(self):
        f = q_function(REF, QSpec(0, 0, 1))
        for nu in (0.25, 1.0, 4.0):
            tv = forward_transform(REF, f, SpectralPoint(nu), CFG)
            wt = w_tilde(REF, 1j * nu)
            assert abs(tv.f_plus - wt) <= 1e-8 * abs(wt)
            assert abs(tv.f_minus - wt) <= 1e-8 * abs(wt)

    def test_even_components_identical(self):
        f = q_function(REF, QSpec(2, 1, 1))
        tv = forward_transform(REF, f, SpectralPoint(1.3), CFG)
        assert tv.f_plus == tv.f_minus

    def test_zero_spectral_parameter(self):
        f = q_function(REF, QSpec(0, 0, 1))
        tv = forward_transform(REF, f, 0.0, CFG)
        assert tv.f_plus.real == pytest.approx(4.0, rel=1e-8)

    def test_ground_odd_against_closed_form(self):
        f = q_function(REF, QSpec(0, 0, -1))
        nu = 1.0
        tv = forward_transform(REF, f, SpectralPoint(nu), CFG)
        lam = 1j * nu
        wt = w_tilde(REF, lam)
        expected_plus = (lam + REF.rho) * wt / REF.sigma
        expected_minus = (-lam + REF.rho) * wt / REF.sigma
        assert tv.f_plus == pytest.approx(expected_plus, rel=1e-6)
        assert tv.f_minus == pytest.approx(expected_minus, rel=1e-6)

    def test_components_conjugate_for_real_input(self):
        # mixed-parity real input: components must be complex conjugates
        def f(t: float) -> float:
            return q_eval(REF, QSpec(1, 0, 1), t) + 0.5 * q_eval(
                REF, QSpec(0, 0, -1), t
            )

        tv = forward_transform(REF, f, SpectralPoint(0.8), CFG)
        assert tv.f_minus == pytest.approx(tv.f_plus.conjugate(), rel=1e-12)

    def test_component_sum_real_for_real_input(self):
        def f(t: float) -> float:
            return q_eval(REF, QSpec(1, 1, -1), t) + q_eval(REF, QSpec(2, 0, 1), t)

        tv = forward_transform(REF, f, SpectralPoint(1.7), CFG)
        total = tv.f_plus + tv.f_minus
        assert abs(total.imag) <= 1e-12 * max(abs(total.real), 1.0)

    def test_linearity(self):
        fa = q_function(REF, QSpec(1, 0, 1))
        fb = q_function(REF, QSpec(0, 0, -1))
        al, be = 0.7, -1.3
        combo = lambda t: al * fa(t) + be * fb(t)
        p = SpectralPoint(1.1)
        tv = forward_transform(REF, combo, p, CFG)
        ta = forward_transform(REF, fa, p, CFG)
        tb = forward_transform(REF, fb, p, CFG)
        assert tv.f_plus == pytest.approx(al * ta.f_plus + be * tb.f_plus, rel=1e-9)
        assert tv.f_minus == pytest.approx(al * ta.f_minus + be * tb.f_minus, rel=1e-9)


class TestGram:
    def test_matrix_symmetric_and_positive(self):
        G = gram_matrix(REF, 4, 1, -1, CFG)
        assert np.array_equal(G, G.T)
        assert all(G[i, i] > 0 for i in range(5))

    def test_reference_diagonal_anchor(self):
        G = gram_matrix(REF, 5, 0, 1, CFG)
        assert G[0, 0] == pytest.approx(0.8, rel=1e-8)

    def test_against_exact_oracle(self):
        n_max = 3
        G = gram_matrix(REF, n_max, 1, -1, CFG)
        spans = [direct_q_span(REF_EXACT, n, 1, -1) for n in range(n_max + 1)]
        for i in range(n_max + 1):
            for j in range(n_max + 1):
                exact = float(exact_pair_integral(REF_EXACT, spans[i], spans[j]))
                assert G[i, j] == pytest.approx(exact, rel=1e-8, abs=1e-10)

    def test_mixed_parity_inner_product_vanishes(self):
        val = integrate_real_line(
            lambda t: q_eval(REF, QSpec(1, 0, 1), t)
            * q_eval(REF, QSpec(2, 0, -1), t)
            * mu_density(REF, t),
            CFG,
        )
        assert val == 0.0


class TestSpectral:
    def test_zero_function(self):
        val, tail = spectral_norm_sq(REF, lambda nu: (0j, 0j), 40.0, CFG)
        assert val == 0.0 and tail == 0.0

    def test_truncation_stability(self):
        def fpair(nu):
            w = w_tilde(REF, 1j * nu)
            return w, w

        v20, _ = spectral_norm_sq(REF, fpair, 20.0, CFG)
        v40, _ = spectral_norm_sq(REF, fpair, 40.0, CFG)
        assert abs(v40 - v20) <= 1e-4 * abs(v40)

    def test_plancherel_anchors(self):
        v, tail = transform_norm_sq(REF, QSpec(0, 0, 1), 40.0, CFG)
        assert v == pytest.approx(0.8, rel=1e-4)
        assert tail < 1e-8
        v, _ = transform_norm_sq(REF, QSpec(0, 0, -1), 40.0, CFG)
        assert v == pytest.approx(4.0 / 15.0, rel=1e-4)


class TestSuites:
    def test_bernstein_exact_on_grid(self):
        reports = verify.suite_bernstein(m_max=4)
        assert all(r.passed for r in reports)
        assert all(r.max_abs_dev == 0.0 for r in reports)

    def test_rodrigues_exact(self):
        reports = verify.suite_rodrigues(
            triples=((1, 1, 6), (F(1, 2), 2, 8)), n_max=3, k_max=2, m_max=2
        )
        assert all(r.passed for r in reports)

    def test_eigen_suite(self):
        reports = verify.suite_eigen(REF)
        assert all(r.passed for r in reports)

    def test_gram_suite(self):
        reports = verify.suite_gram(REF, n_max=3, ks=(0,), parities=(1, -1))
        assert all(r.passed for r in reports)
        even = next(r for r in reports if r.params["parity"] == 1)
        assert even.extra["diag0"] == pytest.approx(0.8, rel=1e-8)

    def test_wtilde_suite_includes_origin(self):
        reports = verify.suite_wtilde(REF)
        assert all(r.passed for r in reports)
        assert reports[0].extra["closed_values"]["0"] == pytest.approx(4.0, rel=1e-12)

    def test_transform_suite_selects_delta1(self):
        reports = verify.suite_transform(REF, n_max=1, k_max=1, nus=(0.5, 2.0))
        assert all(r.passed for r in reports)
        switched = [r for r in reports if "selected_variant" in r.extra]
        assert switched, "odd weighted cases must record the variant outcome"
        for r in switched:
            assert r.extra["selected_variant"] == "delta1"
            assert r.extra["variant_rel_dev"]["delta0"] > 1e-3

    def test_plancherel_suite_calibration(self):
        reports = verify.suite_plancherel(REF, n_max=0, k_max=0)
        assert all(r.passed for r in reports)
        for r in reports:
            assert r.extra["calibration"] == pytest.approx(1.0, abs=1e-6)
