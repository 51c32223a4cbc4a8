"""q-special-function toolkit, checked against Fraction oracles and the
printed summation identities."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suq2cs import qanalysis as qa
from suq2cs.scalars import ONE, Scalar, qint_scalar

S0 = Fraction(7, 10)
Q0 = S0 * S0


def frac_qint(k):
    if k == 0:
        return Fraction(0)
    return (Q0**k - Q0**-k) / (Q0 - Q0**-1)


def frac_qfac(n):
    out = Fraction(1)
    for k in range(2, n + 1):
        out *= frac_qint(k)
    return out


# -- numbers ----------------------------------------------------------------


def test_q_number_oracle():
    for n in range(-5, 6):
        assert qa.q_number(n).evaluate_fraction(S0) == frac_qint(n)


def test_q_number_half_integers():
    for two_n in (1, 3, 5, -3):
        n = Fraction(two_n, 2)
        want = (S0**two_n - S0**-two_n) / (Q0 - Q0**-1)
        assert qa.q_number(n).evaluate_fraction(S0) == want


def test_q_factorial_and_binomial_oracle():
    for n in range(7):
        assert qa.q_factorial(n).evaluate_fraction(S0) == frac_qfac(n)
        for k in range(n + 1):
            want = frac_qfac(n) / (frac_qfac(k) * frac_qfac(n - k))
            assert qa.q_binomial(n, k).evaluate_fraction(S0) == want


def test_q_binomial_symmetry_and_pascal():
    for n in range(1, 9):
        for k in range(n + 1):
            assert qa.q_binomial(n, k) == qa.q_binomial(n, n - k)
    # q-Pascal: [n k] = q^-k [n-1 k-1]... use the recurrence via explicit check
    for n in range(2, 7):
        for k in range(1, n):
            lhs = qa.q_binomial(n, k)
            rhs = Scalar.q_power(n - k) * qa.q_binomial(n - 1, k - 1) + Scalar.q_power(-k) * qa.q_binomial(n - 1, k)
            assert lhs == rhs


def test_classical_binomial():
    assert qa.classical_binomial(6, 2) == 15
    with pytest.raises(ValueError):
        qa.classical_binomial(3, 5)


def test_basic_number_oracle():
    t = Scalar.q_power(2)
    t0 = Q0 * Q0
    for n in range(8):
        want = (1 - t0**n) / (1 - t0)
        assert qa.basic_number(n, t).evaluate_fraction(S0) == want
    assert qa.basic_number(5, ONE) == Scalar.from_int(5)


def test_basic_number_bracket_relation():
    # (n)_{q^2} = q^(n-1) [n]
    for n in range(1, 9):
        assert qa.basic_number(n, Scalar.q_power(2)) == Scalar.q_power(n - 1) * qint_scalar(n)


def test_sqrt_q_binomial():
    for n in range(7):
        for k in range(n + 1):
            assert qa.sqrt_q_binomial(n, k).square() == qa.q_binomial(n, k)


def test_sqrt_basic_number():
    for n in range(1, 6):
        assert qa.sqrt_basic_number(n, 2).square() == qa.basic_number(n, Scalar.q_power(2))
        assert qa.sqrt_basic_number(n, -2).square() == qa.basic_number(n, Scalar.q_power(-2))


# -- shifted factorials -----------------------------------------------------


def test_q_shifted_oracle():
    a, t = qint_scalar(2), Scalar.q_power(2)
    a0, t0 = frac_qint(2), Q0**2
    for n in range(5):
        want = Fraction(1)
        for k in range(n):
            want *= 1 - a0 * t0**k
        assert qa.q_shifted(a, t, n).evaluate_fraction(S0) == want


def test_q_shifted_numeric_matches_exact():
    exact = qa.q_shifted(Scalar.from_fraction(Fraction(3, 10)), qa.Q, 5)
    assert math.isclose(qa.q_shifted_numeric(0.3, float(Q0), 5), exact.evaluate(float(S0)), rel_tol=1e-12)


def test_q_shifted_infinite_product_split():
    for a in (0.3, -0.4, 0.9):
        assert qa.check_qshifted_split(a, 0.7, 4)
        assert qa.check_qshifted_split(a, 0.5, 7)


def test_qid2_exact():
    for m in range(13):
        for n in range(m + 1):
            assert qa.check_qid2(n, m)


def test_binomial_shifted_factorial_form():
    for m in range(9):
        for k in range(m + 1):
            assert qa.check_bn_qfac(m, k)


# -- basic hypergeometric series --------------------------------------------


def test_q_binomial_theorem_numeric():
    for qv in (0.5, 0.7, 0.9):
        assert qa.check_q_binomial_theorem(0.25, 0.4, qv)


def test_phi11_transformation_numeric():
    for qv in (0.5, 0.7, 0.9):
        assert qa.check_phi11_special(0.3, 0.12, qv)


def test_series_detects_divergence():
    with pytest.raises(ArithmeticError):
        qa.basic_hypergeometric_numeric([2.0], [], 0.9, 3.0)


def test_exact_partial_sum_matches_numeric():
    v = qa.basic_hypergeometric_exact(
        [qint_scalar(2)], [Scalar.q_power(2)], Scalar.q_power(2), Scalar.from_fraction(Fraction(1, 10)), 12
    )
    w = qa.basic_hypergeometric_numeric([frac_qint(2)], [float(Q0**2)], float(Q0**2), 0.1)
    assert math.isclose(v.evaluate(float(S0)), w, rel_tol=1e-8)


# -- Jackson calculus -------------------------------------------------------


@st.composite
def polys(draw):
    coeffs = draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=4))
    x = qa.rat_var()
    out = qa.RAT_ZERO
    for i, c in enumerate(coeffs):
        out = out + (x**i).scale_coeffs(Scalar.from_int(c))
    return out


@given(polys(), polys())
@settings(max_examples=30, deadline=None)
def test_leibniz_rule(f, g):
    assert qa.check_leibniz(f, g, qa.Q)


def test_leibniz_on_rationals():
    x = qa.rat_var()
    f = qa.RAT_ONE / (qa.RAT_ONE - x)
    g = x * x
    assert qa.check_leibniz(f, g, qa.Q)


def test_derivative_power_and_product_forms():
    for n in range(1, 6):
        assert qa.check_derivative_forms(n, qa.Q)
    for a in range(1, 5):
        for k in range(0, a + 1):
            assert qa.check_derivative_form2(a, k, qa.Q)


def test_fundamental_theorem():
    x = qa.rat_var()
    f = x**3 + (x * x).scale_coeffs(qint_scalar(2)) + x
    assert qa.check_fundamental(f, qa.Q, qint_scalar(2))
    assert qa.check_fundamental(f, Scalar.q_power(2), ONE)


@given(polys(), polys())
@settings(max_examples=20, deadline=None)
def test_integration_by_parts(f, g):
    assert qa.check_by_parts(f, g, qa.Q, ONE, 1)
    assert qa.check_by_parts(f, g, qa.Q, ONE, 2)


def test_jackson_integral_power_rule():
    x = qa.rat_var()
    t = Scalar.q_power(2)
    for n in range(5):
        got = qa.jackson_integral_exact(x**n, t, qint_scalar(2))
        want = qint_scalar(2) ** (n + 1) / qa.basic_number(n + 1, t)
        assert got == want


def test_jackson_numeric_matches_exact():
    x = qa.rat_var()
    f = x**2 + x.scale_coeffs(qint_scalar(2))
    exact = qa.jackson_integral_exact(f, Scalar.q_power(2), ONE).evaluate(float(S0))
    got = qa.jackson_integral_numeric(f, float(Q0**2), 1.0, float(S0))
    assert math.isclose(got, exact, rel_tol=1e-10)


def test_jackson_numeric_pole_detection():
    x = qa.rat_var()
    f = qa.RAT_ONE / (x.scale_coeffs(Scalar.from_fraction(Fraction(100, 49))) - qa.RAT_ONE)
    with pytest.raises(ArithmeticError):
        qa.jackson_integral_numeric(f, 0.49, 1.0, float(S0))


# -- summation identities ---------------------------------------------------


def test_sum_identities_exhaustive():
    assert qa.verify_sum_identities(12) == []


def test_formal_and_field_routes_agree():
    for m in range(5):
        for n in range(m + 1):
            assert qa.check_qrel2_formal(n, m) == qa.check_qrel2(n, m, qa.Q)
            assert qa.check_identity_for_h_formal(m, n) == qa.check_identity_for_h(m, n, qa.Q)


def test_certified_fractions_catch_wrong_identities():
    # perturbed exponent must fail, proving the zero test has teeth
    lhs = qa._cf_basic(3) * qa._cf_basic(4)
    assert lhs == qa._cf_basic(4) * qa._cf_basic(3)
    assert not lhs == lhs * qa._CertFrac.tpow(1)
    assert not qa.check_qrel2_formal(1, 3) is False
