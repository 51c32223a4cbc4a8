"""Invariant state: closed values, lattice series, positivity."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from suq2cs.funcalg import AlgElement, random_element
from suq2cs.haar import (
    check_haar_numeric_agreement,
    check_haar_positivity,
    check_haar_values,
    haar_monomial,
    haar_state,
    haar_state_numeric,
)
from suq2cs.scalars import ONE, Scalar
from suq2cs.zfunc import ZFunc

QV = 0.7


def test_closed_values_match_jackson_route():
    assert check_haar_values(20) == []


def test_first_values():
    assert haar_monomial(0) == ONE
    q2 = Scalar.q_power(2)
    assert haar_monomial(1) == q2 / (ONE + q2)


def test_state_kills_nontrivial_words():
    assert haar_state(AlgElement.x()).is_zero()
    assert haar_state(AlgElement.e_power(-3)).is_zero()
    assert haar_state(AlgElement.word(0, 2, 0, ZFunc([1, 5]))).is_zero()


def test_state_linear_on_zeta_polynomials():
    z = AlgElement.zeta()
    f = AlgElement.one().scale(2) + z.scale(-3) + z * z
    expect = (
        haar_monomial(0) * Scalar.from_int(2)
        - haar_monomial(1) * Scalar.from_int(3)
        + haar_monomial(2)
    )
    assert haar_state(f) == expect


def test_state_rejects_rational_coefficients():
    x = AlgElement.x()
    with pytest.raises(ValueError):
        haar_state(x.star() * x)


def test_numeric_matches_exact():
    for qv in (0.5, 0.7, 0.9):
        assert check_haar_numeric_agreement(qv) == []


def test_numeric_on_rational_coefficient():
    x = AlgElement.x()
    got = haar_state_numeric(x.star() * x, QV)
    # q^-1 z/(1-z) expands to q^-1 sum of z^(n+1)
    s = QV**0.5
    want = sum(haar_monomial(n).evaluate(s) for n in range(1, 200)) / QV
    assert math.isclose(got, want, rel_tol=1e-10)


def test_unbounded_elements_are_rejected():
    x, y = AlgElement.x(), AlgElement.y()
    with pytest.raises(ArithmeticError):
        haar_state_numeric(x * x.star(), QV)
    with pytest.raises(ArithmeticError):
        haar_state_numeric(y * y.star(), QV)


def test_positivity_on_random_samples():
    assert check_haar_positivity(random.Random(0), QV) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8))
def test_monomial_product_rule(n, m):
    z = AlgElement.zeta()
    assert haar_state(z**n * z**m) == haar_monomial(n + m)
