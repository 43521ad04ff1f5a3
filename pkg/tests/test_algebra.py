import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normcontrol import (
    AlgebraKind,
    FunctionOnG,
    Group,
    GroupMismatchError,
    UnitizedElement,
    conv_power,
    convolve,
    forward,
    gelfand_transform,
    identity_function,
    involution,
    norm,
    unit_one,
    unitized_involution,
    unitized_multiply,
    zero_function,
)
from normcontrol.algebra import gelfand_values

from conftest import SMALL_GROUPS, random_function

Z2 = Group((2,))
Z3 = Group((3,))


def test_identity_is_convolution_unit(rng):
    e = identity_function(Z2)
    assert np.allclose(convolve(e, e).values, e.values)
    g = Group((3, 4))
    f = random_function(g, rng)
    assert np.allclose(convolve(identity_function(g), f).values, f.values, atol=1e-13)


def test_convolve_constants():
    f = FunctionOnG(Z2, [1, 1])
    assert np.allclose(convolve(f, f).values, [1, 1], atol=1e-15)


def test_convolve_zero_and_mismatch(rng):
    f = random_function(Z2, rng)
    assert np.allclose(convolve(f, zero_function(Z2)).values, 0)
    with pytest.raises(GroupMismatchError):
        convolve(f, random_function(Z3, rng))


def test_involution_examples():
    f = FunctionOnG(Z2, [0, 1j])
    assert np.allclose(involution(f).values, [0, -1j])
    even = FunctionOnG(Z3, [1.0, 2.0, 2.0])
    assert np.allclose(involution(even).values, even.values)
    shifted = FunctionOnG(Z3, [0, 1, 0])
    assert np.allclose(involution(shifted).values, [0, 0, 1])


def test_involution_spectral_conjugation(rng):
    for g in SMALL_GROUPS:
        f = random_function(g, rng)
        assert np.allclose(
            forward(involution(f)).values, np.conj(forward(f).values), atol=1e-13
        )


def test_unitized_multiply_with_adjoined_identity(rng):
    x = UnitizedElement(0.3 + 0.1j, random_function(Z2, rng))
    y = unitized_multiply(x, unit_one(Z2))
    assert y.lam == pytest.approx(x.lam)
    assert np.allclose(y.f.values, x.f.values)


def test_embedded_identity_idempotent():
    e = UnitizedElement(0.0, identity_function(Z2))
    ee = unitized_multiply(e, e)
    assert ee.lam == 0
    assert np.allclose(ee.f.values, e.f.values)


def test_conv_power_basics(rng):
    f = random_function(Z2, rng)
    assert np.allclose(conv_power(f, 1).values, f.values)
    assert np.allclose(conv_power(f, 0).values, identity_function(Z2).values)
    ones = FunctionOnG(Z2, [1, 1])
    assert np.allclose(conv_power(ones, 3).values, [1, 1], atol=1e-14)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_conv_power_spectral(n, rng):
    g = Group((3, 4))
    f = random_function(g, rng)
    lhs = forward(conv_power(f, n)).values
    rhs = forward(f).values ** n
    assert np.max(np.abs(lhs - rhs)) < 1e-11


def test_norm_examples():
    one = unit_one(Z2)
    assert norm(one, AlgebraKind.ap(1.0)) == pytest.approx(1.0)
    assert norm(one, AlgebraKind.lp(2.0)) == pytest.approx(1.0)
    e = UnitizedElement(0.0, identity_function(Z2))
    assert norm(e, AlgebraKind.ap(1.0)) == pytest.approx(3.0)
    x = UnitizedElement(0.5, FunctionOnG(Z2, [0.25, 0.25]))
    assert norm(x, AlgebraKind.lp(2.0)) == pytest.approx(0.75)


def test_kind_validation():
    with pytest.raises(ValueError):
        AlgebraKind.ap(0.5)
    with pytest.raises(ValueError):
        AlgebraKind.lp(float("inf"))


def test_gelfand_examples():
    g_const, at_inf = gelfand_transform(UnitizedElement(2.5, zero_function(Z2)))
    assert np.allclose(g_const.values, 2.5)
    assert at_inf == 2.5
    spec, lam = gelfand_transform(UnitizedElement(1.0, FunctionOnG(Z2, [-0.5, -0.5])))
    assert np.allclose(spec.values, [0.5, 1.0], atol=1e-15)
    assert lam == 1.0
    spec_e, lam_e = gelfand_transform(UnitizedElement(0.0, identity_function(Z2)))
    assert np.allclose(spec_e.values, [1, 1])
    assert lam_e == 0.0


def _random_element(g, rng):
    return UnitizedElement(
        complex(rng.standard_normal(), rng.standard_normal()), random_function(g, rng)
    )


@pytest.mark.parametrize("g", SMALL_GROUPS, ids=str)
def test_gelfand_multiplicative(g, rng):
    x = _random_element(g, rng)
    y = _random_element(g, rng)
    xy = unitized_multiply(x, y)
    scale = max(1.0, float(np.max(np.abs(gelfand_values(x)))) *
                float(np.max(np.abs(gelfand_values(y)))))
    assert np.max(np.abs(gelfand_values(xy) - gelfand_values(x) * gelfand_values(y))) / scale < 1e-11
    assert abs(xy.lam - x.lam * y.lam) < 1e-11


kind_strategy = st.sampled_from(
    [AlgebraKind.ap(1.0), AlgebraKind.ap(1.5), AlgebraKind.ap(2.0),
     AlgebraKind.ap(3.0), AlgebraKind.lp(1.0), AlgebraKind.lp(2.0),
     AlgebraKind.lp(3.0)]
)


@settings(max_examples=60, deadline=None)
@given(kind=kind_strategy, seed=st.integers(0, 10_000),
       g=st.sampled_from(SMALL_GROUPS))
def test_norm_submultiplicative(kind, seed, g):
    rng = np.random.default_rng(seed)
    x = _random_element(g, rng)
    y = _random_element(g, rng)
    assert norm(unitized_multiply(x, y), kind) <= norm(x, kind) * norm(y, kind) + 1e-10


@settings(max_examples=40, deadline=None)
@given(kind=kind_strategy, seed=st.integers(0, 10_000),
       g=st.sampled_from(SMALL_GROUPS))
def test_involution_isometric_and_conjugate(kind, seed, g):
    rng = np.random.default_rng(seed)
    x = _random_element(g, rng)
    xs = unitized_involution(x)
    assert norm(xs, kind) == pytest.approx(norm(x, kind), abs=1e-11)
    assert np.max(np.abs(gelfand_values(xs) - np.conj(gelfand_values(x)))) < 1e-11
    assert xs.lam == np.conj(x.lam)
    # conjugate linearity: (c x)* = conj(c) x*
    c = 0.7 - 1.3j
    assert np.allclose(
        unitized_involution(x.scale(c)).f.values, np.conj(c) * xs.f.values, atol=1e-12
    )


@pytest.mark.parametrize("g", SMALL_GROUPS, ids=str)
def test_spectral_radius_below_norm(g, rng):
    for kind in (AlgebraKind.ap(1.0), AlgebraKind.ap(2.5), AlgebraKind.lp(2.0)):
        x = _random_element(g, rng)
        spectrum_max = max(float(np.max(np.abs(gelfand_values(x)))), abs(x.lam))
        assert spectrum_max <= norm(x, kind) + 1e-10
