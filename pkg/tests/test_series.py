"""Unit tests for the truncated-series engine."""

import numpy as np
import pytest

from bohrlab.series import (
    BlaschkeSpec,
    add,
    blaschke_series,
    compose,
    derivative,
    eval_blaschke,
    evaluate,
    integrate,
    majorant_eval,
    make_series,
    mobius_series,
    mul,
    power,
    scale,
)

from oracles import (
    geometric_mobius,
    mobius_by_long_division,
    py_convolve,
    rational_mobius_value,
)


def rand_series(rng, order, scale_cap=2.0, degree=None):
    d = order if degree is None else degree
    moduli = rng.uniform(0, scale_cap, d + 1)
    phases = rng.uniform(0, 2 * np.pi, d + 1)
    return make_series(moduli * np.exp(1j * phases), order)


class TestMakeSeries:
    def test_identity_function(self):
        s = make_series([0, 1], 4)
        assert s.order == 4
        assert s.exact_degree == 1
        assert np.array_equal(s.coeffs, [0, 1, 0, 0, 0])

    def test_empty_is_zero_series(self):
        s = make_series([], 4)
        assert np.all(s.coeffs == 0)
        assert s.exact_degree == 0

    def test_mobius_prefix_matches_long_division(self):
        prefix = [0.5, 0.75, -0.375]
        s = make_series(prefix, 8)
        oracle = mobius_by_long_division(0.5, 3)
        assert np.allclose(s.coeffs[:3], oracle, atol=1e-15)
        assert np.all(s.coeffs[3:] == 0)

    def test_nonfinite_rejected_with_index(self):
        with pytest.raises(ValueError, match="index 2"):
            make_series([1.0, 2.0, np.nan], 4)
        with pytest.raises(ValueError, match="index 1"):
            make_series([1.0, np.inf], 4)

    def test_too_many_coefficients(self):
        with pytest.raises(ValueError):
            make_series([1, 2, 3], 1)

    def test_instances_are_immutable(self):
        s = make_series([1, 2], 4)
        with pytest.raises(ValueError):
            s.coeffs[0] = 5.0
        with pytest.raises(Exception):
            s.exact_degree = 3


class TestAdd:
    def test_z_plus_z(self):
        z = make_series([0, 1], 4)
        assert np.array_equal(add(z, z).coeffs, [0, 2, 0, 0, 0])

    def test_additive_identity(self):
        rng = np.random.default_rng(3)
        f = rand_series(rng, 10)
        zero = make_series([], 10)
        assert np.array_equal(add(f, zero).coeffs, f.coeffs)

    def test_opposite_mobius_sum_against_geometric_oracle(self):
        n = 12
        f = mobius_series(0.5, n)
        g = mobius_series(-0.5, n)
        total = add(f, g)
        oracle = np.array(geometric_mobius(0.5, n + 1)) + np.array(geometric_mobius(-0.5, n + 1))
        assert np.allclose(total.coeffs, oracle, atol=1e-15)
        # spec pattern: zeros at even indices, 1.5 then halving at odd ones
        assert np.allclose(total.coeffs[[0, 2, 4]], 0, atol=1e-15)
        assert np.allclose(total.coeffs[[1, 3]], [1.5, 0.375], atol=1e-15)

    def test_order_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            add(make_series([1], 3), make_series([1], 4))

    def test_exact_degree_is_max_when_both_set(self):
        f = make_series([1, 1], 8)
        g = make_series([1, 0, 0, 1], 8)
        assert add(f, g).exact_degree == 3


class TestMul:
    def test_z_squared(self):
        z = make_series([0, 1], 4)
        assert np.array_equal(mul(z, z).coeffs, [0, 0, 1, 0, 0])

    def test_difference_of_squares(self):
        f = make_series([1, 1], 4)
        g = make_series([1, -1], 4)
        assert np.array_equal(mul(f, g).coeffs, [1, 0, -1, 0, 0])

    def test_first_coefficient_of_product(self):
        phi = mobius_series(0.5, 6)
        b = make_series([0.5, 0.75], 6)
        prod = mul(phi, b)
        assert prod.coeffs[1] == pytest.approx(0.5 * 0.75 + 0.75 * 0.5)

    def test_against_double_loop(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            f = rand_series(rng, 24)
            g = rand_series(rng, 24)
            oracle = py_convolve(list(f.coeffs), list(g.coeffs), 25)
            assert np.allclose(mul(f, g).coeffs, oracle, atol=1e-12)

    def test_exact_degree_sum_and_truncation(self):
        f = make_series([0, 1], 4)       # degree 1
        g = make_series([0, 0, 1], 4)    # degree 2
        assert mul(f, g).exact_degree == 3
        h = make_series([0, 0, 0, 1], 4)
        assert mul(g, h).exact_degree is None  # degree 5 exceeds order 4


class TestCompose:
    def test_inner_power(self):
        g = make_series([0, 1], 6)
        w = make_series([0, 0, 1], 6)
        assert np.array_equal(compose(g, w).coeffs, [0, 0, 1, 0, 0, 0, 0])

    def test_binomial_expansion(self):
        g = make_series([0, 0, 1], 6)
        w = make_series([0, 1, 1], 6)
        assert np.array_equal(compose(g, w).coeffs, [0, 0, 1, 2, 1, 0, 0])

    def test_rejects_nonzero_constant(self):
        g = make_series([0, 1], 6)
        w = make_series([0.5, 1], 6)
        with pytest.raises(ValueError, match="vanish"):
            compose(g, w)

    def test_majorant_contraction_under_inner_composition(self):
        # composing with an inner function cannot raise the majorant at 1/3
        g = mobius_series(0.5, 32)
        w = blaschke_series(BlaschkeSpec(zeros=(0.3,)), 32, vanish_at_origin=True)
        gw = compose(g, w)
        assert majorant_eval(gw, 1 / 3) <= majorant_eval(g, 1 / 3) + 1e-12

    def test_matches_pointwise_evaluation(self):
        rng = np.random.default_rng(5)
        g = rand_series(rng, 40, degree=6)
        w = blaschke_series(BlaschkeSpec(zeros=(0.4 + 0.2j,)), 40, vanish_at_origin=True)
        gw = compose(g, w)
        for z in [0.1, 0.2j, -0.15 + 0.1j]:
            direct = evaluate(g, complex(evaluate(w, z)))
            assert abs(complex(evaluate(gw, z)) - complex(direct)) < 1e-10

    def test_exact_degree_for_polynomial_pair(self):
        g = make_series([0, 0, 1], 10)
        w = make_series([0, 1, 1], 10)
        assert compose(g, w).exact_degree == 4
        w_trunc = blaschke_series(BlaschkeSpec(zeros=(0.5,)), 10, vanish_at_origin=True)
        assert compose(g, w_trunc).exact_degree is None


class TestPower:
    def test_cube_of_z(self):
        z = make_series([0, 1], 6)
        assert np.array_equal(power(z, 3).coeffs, [0, 0, 0, 1, 0, 0, 0])

    def test_zeroth_power_is_one(self):
        rng = np.random.default_rng(17)
        w = rand_series(rng, 6)
        p = power(w, 0)
        assert np.array_equal(p.coeffs, [1, 0, 0, 0, 0, 0, 0])
        assert p.exact_degree == 0

    def test_square_binomial(self):
        w = make_series([0, 1, 1], 6)
        assert np.array_equal(power(w, 2).coeffs, [0, 0, 1, 2, 1, 0, 0])

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            power(make_series([0, 1], 4), -1)

    def test_low_order_coefficients_vanish(self):
        rng = np.random.default_rng(23)
        for k in (2, 5, 9):
            w = blaschke_series(
                BlaschkeSpec(zeros=(rng.uniform(0, 0.9),)), 20, vanish_at_origin=True
            )
            assert np.all(power(w, k).coeffs[:k] == 0)


class TestCalculus:
    def test_derivative_of_square(self):
        s = make_series([0, 0, 1], 4)
        assert np.array_equal(derivative(s).coeffs, [0, 2, 0, 0, 0])

    def test_derivative_of_constant(self):
        s = make_series([3.5], 4)
        assert np.all(derivative(s).coeffs == 0)

    def test_derivative_at_origin_matches_difference_quotient(self):
        s = derivative(mobius_series(0.5, 16))
        h = 1e-6
        quotient = (rational_mobius_value(0.5, h) - rational_mobius_value(0.5, -h)) / (2 * h)
        assert s.coeffs[0] == pytest.approx(0.75)
        assert abs(s.coeffs[0] - quotient) < 1e-9

    def test_integral_examples(self):
        assert np.array_equal(integrate(make_series([0, 2], 4)).coeffs, [0, 0, 1, 0, 0])
        assert np.all(integrate(make_series([], 4)).coeffs == 0)

    def test_round_trip_on_zero_constant_series(self):
        s = make_series([0, 1, 0, 1], 8)
        back = integrate(derivative(s))
        assert np.array_equal(back.coeffs, s.coeffs)

    def test_round_trip_random(self):
        # multiply-then-divide by n costs two roundings, so allow 2 ulps
        rng = np.random.default_rng(29)
        coeffs = rng.normal(size=12) + 1j * rng.normal(size=12)
        coeffs[0] = 0.0
        s = make_series(coeffs, 11)
        assert np.allclose(integrate(derivative(s)).coeffs, s.coeffs, rtol=5e-16, atol=0)


class TestMajorant:
    def test_single_term(self):
        assert majorant_eval(make_series([0, 1], 4), 0.3) == pytest.approx(0.3)

    def test_mobius_tail_closed_form(self):
        f = mobius_series(0.5, 64)
        got = majorant_eval(f, 1 / 3, skip_constant=True)
        assert got == pytest.approx((1 / 3) * 0.75 / (1 - 0.5 / 3), abs=1e-12)
        assert got == pytest.approx(0.3, abs=1e-12)

    def test_mobius_with_constant(self):
        assert majorant_eval(mobius_series(0.5, 64), 1 / 3) == pytest.approx(0.8, abs=1e-12)

    def test_domain(self):
        f = make_series([1], 4)
        for r in (-0.1, 1.0, 1.5):
            with pytest.raises(ValueError):
                majorant_eval(f, r)

    def test_monotone_in_r_and_value_at_zero(self):
        rng = np.random.default_rng(31)
        f = rand_series(rng, 20)
        rs = np.linspace(0, 0.99, 50)
        vals = [majorant_eval(f, r) for r in rs]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        assert vals[0] == pytest.approx(abs(f.coeffs[0]))
        assert majorant_eval(f, 0.0, skip_constant=True) == 0.0


class TestMobiusSeries:
    def test_identity_automorphism(self):
        s = mobius_series(0.0, 6)
        assert np.array_equal(s.coeffs, [0, 1, 0, 0, 0, 0, 0])
        assert s.exact_degree == 1

    def test_half_against_long_division(self):
        s = mobius_series(0.5, 10)
        oracle = mobius_by_long_division(0.5, 11)
        assert np.allclose(s.coeffs, oracle, atol=1e-14)
        assert np.allclose(
            s.coeffs[:5], [0.5, 0.75, -0.375, 0.1875, -0.09375], atol=1e-15
        )

    def test_complex_parameter_against_long_division(self):
        a0 = 0.3 - 0.4j
        s = mobius_series(a0, 12)
        oracle = mobius_by_long_division(a0, 13)
        assert np.allclose(s.coeffs, oracle, atol=1e-14)

    def test_modulus_pattern(self):
        a0 = 0.6 * np.exp(0.7j)
        s = mobius_series(a0, 20)
        k = np.arange(1, 21)
        expected = (1 - 0.36) * 0.6 ** (k - 1)
        assert np.allclose(np.abs(s.coeffs[1:]), expected, atol=1e-14)

    def test_tagged_tail_matches_closed_form(self):
        s = mobius_series(0.5, 64)
        for r in (0.1, 1 / 3, 0.6):
            closed = r * 0.75 / (1 - 0.5 * r)
            assert s.tag.majorant(r, skip_constant=True) == pytest.approx(closed, abs=1e-15)

    def test_rejects_boundary_parameter(self):
        with pytest.raises(ValueError):
            mobius_series(1.0, 8)


class TestBlaschke:
    def test_no_zeros_vanishing_is_z(self):
        s = blaschke_series(BlaschkeSpec(), 5, vanish_at_origin=True)
        assert np.array_equal(s.coeffs, [0, 1, 0, 0, 0, 0])
        assert s.exact_degree == 1

    def test_single_zero_table(self):
        s = blaschke_series(BlaschkeSpec(zeros=(0.3,)), 3)
        assert np.allclose(s.coeffs, [-0.3, 0.91, 0.273, 0.0819], atol=1e-15)

    def test_boundary_modulus_bound(self):
        rng = np.random.default_rng(37)
        for _ in range(10):
            count = rng.integers(0, 5)
            zeros = tuple(
                rng.uniform(0, 0.9) * np.exp(2j * np.pi * rng.uniform()) for _ in range(count)
            )
            spec = BlaschkeSpec(zeros=zeros, rotation=np.exp(2j * np.pi * rng.uniform()))
            zs = 0.95 * np.exp(2j * np.pi * np.arange(360) / 360)
            assert np.max(np.abs(eval_blaschke(spec, zs))) <= 1 + 1e-9

    def test_series_tracks_rational_form_inside_disk(self):
        spec = BlaschkeSpec(zeros=(0.5, -0.2 + 0.3j), rotation=1j)
        s = blaschke_series(spec, 64)
        for z in (0.1, 0.25j, -0.3 + 0.1j):
            assert abs(complex(evaluate(s, z)) - complex(eval_blaschke(spec, z))) < 1e-12

    def test_zero_cap_enforced(self):
        with pytest.raises(ValueError, match="cap"):
            BlaschkeSpec(zeros=(0.95,))

    def test_zero_count_cap(self):
        with pytest.raises(ValueError, match="at most"):
            BlaschkeSpec(zeros=(0.1, 0.2, 0.3, 0.4, 0.5))

    def test_rotation_must_be_unimodular(self):
        with pytest.raises(ValueError, match="unimodular"):
            BlaschkeSpec(rotation=0.9)


class TestDunders:
    def test_arithmetic_sugar(self):
        z = make_series([0, 1], 4)
        assert np.array_equal((z + z).coeffs, [0, 2, 0, 0, 0])
        assert np.array_equal((2.0 * z).coeffs, [0, 2, 0, 0, 0])
        assert np.array_equal((z - z).coeffs, np.zeros(5))
        assert np.array_equal((-z).coeffs, [0, -1, 0, 0, 0])
        assert np.array_equal((z * z).coeffs, mul(z, z).coeffs)

    def test_scale_keeps_exactness(self):
        s = scale(make_series([1, 2], 6), 3.0)
        assert s.exact_degree == 1
        assert np.array_equal(s.coeffs, [3, 6, 0, 0, 0, 0, 0])
