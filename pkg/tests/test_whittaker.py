"""Tests for the hypergeometric machinery and closed-form generators.

scipy and math.gamma serve as independent oracles here; the library
itself never imports them.
"""

import cmath
import math
import random

import pytest
import scipy.special

from fuchsian.moebius import MapClass, classify, compose, normalize, projective_distance
from fuchsian.whittaker import (
    connection_map,
    connection_map_from_gammas,
    continuation_residual,
    gamma_fn,
    hde_params,
    hyp2f1,
    monodromy_zero,
    sine_product_residual,
    trig_identity_residuals,
    whittaker_generator,
    whittaker_generator_raw,
    whittaker_subgroup,
)


# --- gamma ---------------------------------------------------------------


def test_gamma_matches_stdlib_on_reals():
    rng = random.Random(41)
    for _ in range(200):
        x = rng.uniform(-20, 20)
        if abs(x - round(x)) < 1e-3:
            continue
        want = math.gamma(x)
        got = gamma_fn(x)
        assert isinstance(got, float)
        assert abs(got - want) <= 1e-12 * abs(want)


def test_gamma_matches_scipy_on_complex():
    rng = random.Random(42)
    for _ in range(100):
        z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
        if abs(z.imag) < 1e-6:
            continue
        want = complex(scipy.special.gamma(z))
        got = gamma_fn(z)
        assert abs(got - want) <= 1e-10 * abs(want)


def test_gamma_integer_values():
    assert abs(gamma_fn(1) - 1.0) < 1e-13
    assert abs(gamma_fn(5) - 24.0) < 1e-11
    assert abs(gamma_fn(0.5) - math.sqrt(math.pi)) < 1e-13


def test_gamma_poles_raise():
    for bad in (0, -1, -7, 0.0, -3.0):
        with pytest.raises(ValueError):
            gamma_fn(bad)


# --- hypergeometric series -----------------------------------------------


def test_hyp2f1_matches_scipy():
    rng = random.Random(43)
    for _ in range(120):
        al = rng.uniform(0.05, 1.5)
        be = rng.uniform(0.05, 1.5)
        ga = rng.uniform(0.3, 2.5)
        x = rng.uniform(-0.85, 0.85)
        want = scipy.special.hyp2f1(al, be, ga, x)
        got = hyp2f1(al, be, ga, x)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))
        assert abs(got.imag) < 1e-15


def test_hyp2f1_complex_argument_satisfies_euler_transform():
    rng = random.Random(44)
    for _ in range(60):
        al, be, ga = 0.3, 0.7, 1.1
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6))
        lhs = hyp2f1(al, be, ga, z)
        rhs = (1 - z) ** (ga - al - be) * hyp2f1(ga - al, ga - be, ga, z)
        assert abs(lhs - rhs) < 1e-12


def test_hyp2f1_gauss_value_at_one():
    al, be, ga = 0.2, 0.4, 0.8
    want = math.gamma(ga) * math.gamma(ga - al - be) / (
        math.gamma(ga - al) * math.gamma(ga - be)
    )
    assert abs(hyp2f1(al, be, ga, 1) - want) < 1e-12
    # frozen value for the genus-2 parameter triple
    assert abs(hyp2f1(0.2, 0.4, 0.8, 1) - 1.6180339887) < 1e-9


def test_hyp2f1_domain_errors():
    with pytest.raises(ValueError):
        hyp2f1(0.2, 0.4, 0.8, 1.5)
    with pytest.raises(ValueError):
        hyp2f1(0.2, 0.4, 0.8, -1.0)
    with pytest.raises(ValueError):
        hyp2f1(0.5, 0.8, 1.2, 1)  # gamma - alpha - beta not positive
    with pytest.raises(ValueError):
        hyp2f1(0.2, 0.4, -2.0, 0.3)  # nonpositive-integer gamma


def test_hyp2f1_polynomial_when_alpha_is_negative_integer():
    # terminating case: F(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
    b, c = 0.7, 1.3
    for z in (0.2, -0.5, 0.9):
        want = 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1))
        assert abs(hyp2f1(-2, b, c, z) - want) < 1e-14


# --- parameter triple ----------------------------------------------------


def test_hde_params_values():
    p2 = hde_params(2)
    assert (p2.alpha, p2.beta, p2.gamma) == (0.2, 0.4, 0.8)
    assert p2.a == 0.2
    p3 = hde_params(3)
    assert abs(p3.alpha - 2 / 7) < 1e-15
    assert abs(p3.beta - 3 / 7) < 1e-15
    assert abs(p3.gamma - 6 / 7) < 1e-15
    for g in range(2, 12):
        p = hde_params(g)
        assert p.gamma - p.alpha - p.beta == pytest.approx(p.a)
        assert p.a > 0
    with pytest.raises(ValueError):
        hde_params(1)


# --- analytic continuation -----------------------------------------------


def test_continuation_residual_is_tiny_on_both_sides():
    assert continuation_residual(0.2, 0.4, 0.8, 0.3) < 1e-10
    assert continuation_residual(0.2, 0.4, 0.8, 0.7) < 1e-10
    rng = random.Random(45)
    for _ in range(20):
        z = rng.uniform(0.1, 0.9)
        assert continuation_residual(0.2, 0.4, 0.8, z) < 1e-10


def test_continuation_rejects_degenerate_and_out_of_range():
    with pytest.raises(ValueError):
        continuation_residual(0.25, 0.25, 1.5, 0.3)  # integer gamma-alpha-beta
    with pytest.raises(ValueError):
        continuation_residual(0.2, 0.4, 0.8, 1.2)
    with pytest.raises(ValueError):
        continuation_residual(0.2, 0.4, 0.8, -0.5)


# --- connection and monodromy --------------------------------------------


def test_connection_map_frozen_entries_genus_two():
    w = connection_map(2)
    a = 0.2
    assert abs(w.a - 2 * math.cos(a * math.pi) * cmath.exp(-3j * a * math.pi)) < 1e-15
    assert abs(w.b - (-1j * (math.cos(0.2 * math.pi) + math.cos(0.4 * math.pi))
                      / math.sin(0.2 * math.pi))) < 1e-15
    assert abs(w.a - (-0.5 - 1.5388417686j)) < 1e-9
    assert abs(w.b - (-1.9021130326j)) < 1e-9
    assert abs(w.c - 1.1755705046j) < 1e-9
    # determinant and trace have closed forms
    assert abs(w.det - (2 - 2 * math.cos(0.2 * math.pi))) < 1e-12
    assert abs(w.trace - 4 * math.cos(0.2 * math.pi) * math.cos(0.6 * math.pi)) < 1e-12


def test_connection_map_two_constructions_agree_projectively():
    for g in range(2, 6):
        d = projective_distance(
            normalize(connection_map(g)), normalize(connection_map_from_gammas(g))
        )
        assert d < 1e-8


def test_connection_map_rejects_small_genus():
    with pytest.raises(ValueError):
        connection_map(1)
    with pytest.raises(ValueError):
        connection_map_from_gammas(1)


def test_monodromy_is_a_root_of_unity_action():
    for g in range(2, 6):
        m = monodromy_zero(g)
        assert m.b == 0 and m.c == 0
        assert abs(m.a - cmath.exp(2j * math.pi / (2 * g + 1))) < 1e-15
        power = m
        for _ in range(2 * g):
            power = compose(power, m)
        assert abs(power.a / power.d - 1.0) < 1e-10


def test_trig_identities_hold():
    for g in range(2, 9):
        r_minus, r_plus = trig_identity_residuals(g)
        assert r_minus < 1e-12
        assert r_plus < 1e-12
        assert sine_product_residual(g) < 1e-12


# --- closed-form generators ----------------------------------------------


def test_raw_generator_shape_and_determinant():
    for g in (2, 3, 5):
        a = 1.0 / (2 * g + 1)
        want_det = (2 * math.cos(a * math.pi) - 2) / (2 * math.cos(a * math.pi) - 1)
        for k in range(2 * g + 1):
            raw = whittaker_generator_raw(g, k)
            assert raw.trace == 0
            assert abs(raw.det - want_det) < 1e-12
            assert abs(abs(raw.b) - 1.0) < 1e-15
            assert abs(raw.c - (-raw.b).conjugate()) < 1e-15


def test_raw_generator_index_bounds():
    with pytest.raises(ValueError):
        whittaker_generator_raw(2, 5)
    with pytest.raises(ValueError):
        whittaker_generator_raw(2, -1)
    with pytest.raises(ValueError):
        whittaker_generator_raw(1, 0)


def test_normalized_generators_are_elliptic_involutions():
    for g in (2, 3, 4):
        for k in range(2 * g + 1):
            gen = whittaker_generator(g, k)
            assert abs(gen.det - 1.0) < 1e-12
            assert gen.trace == 0
            assert classify(gen) is MapClass.ELLIPTIC
            sq = compose(gen, gen)
            assert max(abs(sq.a + 1), abs(sq.b), abs(sq.c), abs(sq.d + 1)) < 1e-12


def test_subgroup_products_frozen_traces_genus_two():
    prods = whittaker_subgroup(2)
    assert len(prods) == 4
    want = (4.2360679775, 7.8541019662, 7.8541019662, 4.2360679775)
    for prod, expect in zip(prods, want):
        assert classify(prod) is MapClass.HYPERBOLIC
        assert abs(prod.det - 1.0) < 1e-12
        assert abs(abs(prod.trace) - expect) < 1e-8


def test_subgroup_products_hyperbolic_for_higher_genus():
    for g in (3, 4, 5, 6):
        prods = whittaker_subgroup(g)
        assert len(prods) == 2 * g
        for prod in prods:
            assert classify(prod) is MapClass.HYPERBOLIC
