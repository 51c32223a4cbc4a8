"""Exact scalar field and radical bookkeeping, cross-checked against
plain Fraction arithmetic at rational sample points."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suq2cs.scalars import (
    ONE,
    RAD_ONE,
    RAD_ZERO,
    ZERO,
    LambdaPoly,
    RadicalScalar,
    Scalar,
    qint_scalar,
)

SAMPLES = [Fraction(7, 10), Fraction(3, 5), Fraction(9, 11)]


def frac_qint(k, s):
    """Oracle: [k] evaluated directly with Fractions."""
    q = s * s
    if k == 0:
        return Fraction(0)
    return (q**k - q**-k) / (q - q**-1)


small = st.integers(min_value=-4, max_value=4)


@st.composite
def scalars(draw):
    """Random nonzero-denominator scalars built from s-powers and integers."""
    terms = draw(st.lists(st.tuples(small, small), min_size=1, max_size=3))
    out = ZERO
    for c, e in terms:
        out = out + Scalar.from_int(c) * Scalar.s_power(e)
    return out


@given(scalars(), scalars(), scalars())
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a - a == ZERO
    if not b.is_zero():
        assert (a / b) * b == a


@given(scalars(), scalars())
@settings(max_examples=40, deadline=None)
def test_evaluation_homomorphism(a, b):
    s = Fraction(7, 10)
    assert (a * b).evaluate_fraction(s) == a.evaluate_fraction(s) * b.evaluate_fraction(s)
    assert (a + b).evaluate_fraction(s) == a.evaluate_fraction(s) + b.evaluate_fraction(s)


def test_canonical_form_is_unique():
    a = Scalar.s_power(2) - ONE
    b = (Scalar.s_power(4) - ONE) / (Scalar.s_power(2) + ONE)
    assert a == b
    assert a.num == b.num and a.den == b.den


def test_qint_against_fraction_oracle():
    for k in range(-6, 7):
        got = qint_scalar(k)
        for s in SAMPLES:
            assert got.evaluate_fraction(s) == frac_qint(k, s)


def test_qint_symmetry_and_zero():
    assert qint_scalar(0).is_zero()
    for k in range(1, 7):
        assert qint_scalar(-k) == -qint_scalar(k)


def test_q_power_parity():
    assert Scalar.q_power(Fraction(3, 2)) == Scalar.s_power(3)
    with pytest.raises(ValueError):
        Scalar.q_power(Fraction(1, 3))


def test_pole_detection():
    f = ONE / (Scalar.s_power(2) - ONE)
    with pytest.raises(ZeroDivisionError):
        f.evaluate_fraction(Fraction(1))


def test_inverse_and_pow():
    a = qint_scalar(3) + Scalar.s_power(-2)
    assert a * a.inverse() == ONE
    assert a**4 == a * a * a * a
    assert a**-2 == (a * a).inverse()


def test_sign_at_generic():
    assert (qint_scalar(2)).sign_at_generic() == 1
    assert (-qint_scalar(5)).sign_at_generic() == -1
    assert ZERO.sign_at_generic() == 0
    # a scalar vanishing at the first probe point but not identically
    probe = Scalar.s_power(1) - Scalar.from_fraction(Fraction(57, 64))
    assert probe.sign_at_generic() != 0


def test_float_evaluation_matches_fraction():
    a = (qint_scalar(4) + ONE) / (qint_scalar(2) + Scalar.s_power(3))
    s = Fraction(7, 10)
    assert math.isclose(a.evaluate(float(s)), float(a.evaluate_fraction(s)), rel_tol=1e-12)


# -- radicals ---------------------------------------------------------------


def test_radical_square_matches_atoms():
    r = RadicalScalar(ONE, {2: 1, 3: 1})
    assert r.square() == qint_scalar(2) * qint_scalar(3)


def test_radical_even_powers_fold_into_u():
    r = RadicalScalar(ONE, {3: 2})
    assert r.atoms == ()
    assert r.u == qint_scalar(3)
    r = RadicalScalar(ONE, {3: 3})
    assert r.atoms == (3,)
    assert r.u == qint_scalar(3)


def test_radical_zero_atom_annihilates():
    assert RadicalScalar(ONE, {0: 1}).u.is_zero()


def test_radical_product_pairs_shared_atoms():
    a = RadicalScalar.sqrt_qint(2) * RadicalScalar.sqrt_qint(3)
    b = RadicalScalar.sqrt_qint(3) * RadicalScalar.sqrt_qint(5)
    prod = a * b
    assert prod.atoms == (2, 5)
    assert prod.u == qint_scalar(3)


def test_radical_addition_requires_matching_radicand():
    a = RadicalScalar.sqrt_qint(2)
    b = RadicalScalar(qint_scalar(3), {2: 1})
    assert (a + b).u == ONE + qint_scalar(3)
    with pytest.raises(ValueError):
        a + RadicalScalar.sqrt_qint(3)


def test_radical_cross_form_equality():
    # sqrt([2]^3) written two ways
    a = RadicalScalar(qint_scalar(2), {2: 1})
    b = RadicalScalar(ONE, {2: 3})
    assert a == b
    assert a != -b
    assert RAD_ZERO == RadicalScalar(ZERO, {3: 1})


def test_radical_scalar_mixed_product():
    a = RadicalScalar.sqrt_qint(4)
    assert (qint_scalar(2) * a).u == qint_scalar(2)
    assert (a * qint_scalar(2)).square() == qint_scalar(2) ** 2 * qint_scalar(4)


def test_radical_float_evaluation():
    r = RadicalScalar(qint_scalar(2), {3: 1})
    s = 0.7
    want = qint_scalar(2).evaluate(s) * math.sqrt(qint_scalar(3).evaluate(s))
    assert math.isclose(r.evaluate(s), want, rel_tol=1e-12)


def test_radical_one():
    assert RAD_ONE * RAD_ONE == RAD_ONE
    assert (RAD_ONE - RAD_ONE) == RAD_ZERO


# -- log-degree scalars -----------------------------------------------------


def test_lambda_poly_arithmetic():
    lam = LambdaPoly.lam()
    c = LambdaPoly.const(qint_scalar(2))
    p = lam * lam + c
    assert p.degree() == 2
    assert (p - p).is_zero()
    with pytest.raises(ValueError):
        p.scalar_part()
    assert c.scalar_part() == qint_scalar(2)


def test_lambda_poly_evaluate():
    lam = LambdaPoly.lam()
    s = 0.8
    assert math.isclose(lam.evaluate(s), 2 * math.log(s), rel_tol=1e-12)
