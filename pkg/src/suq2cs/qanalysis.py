"""q-analysis toolkit: bracket numbers, basic numbers, shifted factorials,
basic hypergeometric series, the Jackson derivative/integral, and the sum
identities the resolution-of-unity and orthonormality proofs lean on.

Exact objects live in QQ(s) with q = s**2; infinite products and series
exist only numerically for 0 < q < 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ratfunc import Field, RatFunc
from .scalars import ONE, ZERO, RadicalScalar, Scalar, qint_scalar

_PROBE_AT = Fraction(7, 5)


def _probe_scalar(sc):
    """Exact value at s = 7/5; lets rational-function gcds short-circuit."""
    num = Fraction(0)
    for c in reversed(sc.num):
        num = num * _PROBE_AT + c
    den = Fraction(0)
    for c in reversed(sc.den):
        den = den * _PROBE_AT + c
    return num / den


SCALAR_FIELD = Field(ZERO, ONE, _probe_scalar)

Q = Scalar.q_power(1)
Q_INV = Scalar.q_power(-1)


def rat_const(sc):
    """Embed a Scalar as a constant rational function."""
    return RatFunc.const(SCALAR_FIELD, sc)


def rat_var():
    return RatFunc.var(SCALAR_FIELD)


RAT_ONE = RatFunc.one(SCALAR_FIELD)
RAT_ZERO = RatFunc.zero(SCALAR_FIELD)


# ---------------------------------------------------------------------------
# bracket and basic numbers


def q_number(n):
    """[n] = (q**n - q**-n)/(q - q**-1); n may be a half-integer."""
    n = Fraction(n)
    if n.denominator == 1:
        return qint_scalar(n.numerator)
    num = Scalar.q_power(n) - Scalar.q_power(-n)
    return num / (Q - Q_INV)


def q_factorial(n):
    out = ONE
    for k in range(2, n + 1):
        out = out * qint_scalar(k)
    return out


def q_binomial(n, k):
    """[n]!/([k]![n-k]!)."""
    if not 0 <= k <= n:
        raise ValueError("q-binomial index out of range")
    return q_factorial(n) / (q_factorial(k) * q_factorial(n - k))


def classical_binomial(n, k):
    if not 0 <= k <= n:
        raise ValueError("binomial index out of range")
    return math.comb(n, k)


def basic_number(n, base):
    """(n)_t = (1 - t**n)/(1 - t), with the limit n at t = 1."""
    if base.is_one():
        return Scalar.from_int(n)
    return (ONE - base**n) / (ONE - base)


def basic_factorial(n, base):
    out = ONE
    for k in range(2, n + 1):
        out = out * basic_number(k, base)
    return out


def sqrt_q_binomial(n, k):
    """Square root of a q-binomial as a RadicalScalar over [i] atoms."""
    if not 0 <= k <= n:
        raise ValueError("q-binomial index out of range")
    counts = {}
    for i in range(2, n + 1):
        counts[i] = counts.get(i, 0) + 1
    for i in range(2, k + 1):
        counts[i] = counts.get(i, 0) - 1
    for i in range(2, n - k + 1):
        counts[i] = counts.get(i, 0) - 1
    return RadicalScalar(ONE, counts)


def sqrt_basic_number(n, base_exp):
    """sqrt((n)_{q**base_exp}) for even base_exp, via (n)_t = q**(..)[n]."""
    if base_exp not in (2, -2):
        raise ValueError("only the q**±2 bases are needed")
    if n == 0:
        return RadicalScalar.from_scalar(ZERO)
    # (n)_{q^2} = q^(n-1) [n] ;  (n)_{q^-2} = q^-(n-1) [n]
    u = Scalar.s_power((n - 1) if base_exp == 2 else -(n - 1))
    return RadicalScalar(u, {n: 1})


# ---------------------------------------------------------------------------
# q-shifted factorials and basic hypergeometric series


def q_shifted(a, base, n):
    """(a; t)_n = prod_{k<n} (1 - a t**k), exactly."""
    if n < 0:
        raise ValueError("negative order")
    out = ONE
    p = ONE
    for _ in range(n):
        out = out * (ONE - a * p)
        p = p * base
    return out


def q_shifted_numeric(a, base, n=None, tol=1e-17):
    """Float (a; t)_n; n = None gives the infinite product for |t| < 1."""
    if n is None:
        if not abs(base) < 1:
            raise ValueError("infinite product needs |base| < 1")
        out = 1.0
        factor = a
        while abs(factor) > tol:
            out *= 1.0 - factor
            factor *= base
        return out
    out = 1.0
    for k in range(n):
        out *= 1.0 - a * base**k
    return out


def basic_hypergeometric_numeric(uppers, lowers, base, z, tol=1e-15, cap=10000):
    """Converged value of r_phi_s(uppers; lowers; base, z) for |base| < 1."""
    if not abs(base) < 1:
        raise ValueError("numeric mode needs |base| < 1")
    extra = 1 + len(lowers) - len(uppers)
    total = 0.0
    term = 1.0
    growth = 0
    for n in range(cap):
        total += term
        if abs(term) < tol * max(1.0, abs(total)) and n > 2:
            return total
        ratio = z
        for a in uppers:
            ratio *= 1.0 - a * base**n
        ratio /= 1.0 - base ** (n + 1)
        for b in lowers:
            ratio /= 1.0 - b * base**n
        if extra:
            ratio *= (-(base**n)) ** extra
        new = term * ratio
        growth = growth + 1 if abs(new) > abs(term) > tol else 0
        if growth > 40:
            raise ArithmeticError("series diverges")
        term = new
    raise ArithmeticError("series did not converge within cap")


def basic_hypergeometric_exact(uppers, lowers, base, z, nterms):
    """Partial sum of the series to order nterms, as a Scalar.

    Terms are accumulated over the order-nterms common denominator so the
    only rational-function division happens once at the end.
    """
    extra = 1 + len(lowers) - len(uppers)
    N = nterms
    total = ZERO
    for n in range(N + 1):
        term = z**n
        for a in uppers:
            term = term * q_shifted(a, base, n)
        # complementary factors (t^(n+1);t)_(N-n) and (b t^n; t)_(N-n)
        term = term * q_shifted(base ** (n + 1), base, N - n)
        for b in lowers:
            term = term * q_shifted(b * base**n, base, N - n)
        if extra:
            sign = Scalar.from_int((-1) ** n)
            term = term * (sign * base ** (n * (n - 1) // 2)) ** extra
        total = total + term
    den = q_shifted(base, base, N)
    for b in lowers:
        den = den * q_shifted(b, base, N)
    return total / den


# ---------------------------------------------------------------------------
# Jackson derivative and integral on rational functions of one variable


def q_derivative(f, base):
    """D_t f = (f(x) - f(t x))/((1 - t) x)."""
    shifted = f.scale_var(base)
    diff = f - shifted
    den = (RAT_ONE - rat_const(base)) * rat_var()
    return diff / den


def jackson_integral_exact(f, base, upper):
    """Integral over [0, upper] of a polynomial, termwise x**n -> upper**(n+1)/(n+1)_t."""
    if not f.is_polynomial():
        raise ValueError("exact mode needs a polynomial integrand")
    total = ZERO
    p = upper
    for n, c in enumerate(f.num):
        total = total + c * p / basic_number(n + 1, base)
        p = p * upper
    return total


def jackson_integral_numeric(f, base, upper, s_value, tol=1e-15, cap=100000):
    """Lattice sum (1-t) upper sum_k f(upper t**k) t**k at numeric s."""
    if not 0 < base < 1:
        raise ValueError("numeric mode needs 0 < base < 1")
    total = 0.0
    tk = 1.0
    for k in range(cap):
        x = upper * tk
        dv = 1.0
        for c in reversed(f.den):
            dv = dv * x + c.evaluate(s_value)
        if abs(dv) < 1e-13:
            raise ArithmeticError("pole on the Jackson lattice")
        term = f.evaluate_numeric(x, s_value) * tk
        total += term
        if abs(term) < tol * max(1.0, abs(total)) and k > 3:
            return (1.0 - base) * upper * total
        tk *= base
    raise ArithmeticError("Jackson sum did not converge")


# ---------------------------------------------------------------------------
# identity suites


def check_qshifted_split(a, base, n, tol=1e-12):
    """(a;t)_n = (a;t)_inf / (a t**n; t)_inf, numerically."""
    lhs = q_shifted_numeric(a, base, n)
    rhs = q_shifted_numeric(a, base) / q_shifted_numeric(a * base**n, base)
    return abs(lhs - rhs) <= tol


def check_qid2(n, m):
    """(t;t)_m/(t;t)_{m-n} = (-1)^n t^(mn - n(n-1)/2) (t^-m;t)_n, exactly."""
    t = Q
    lhs = q_shifted(t, t, m) / q_shifted(t, t, m - n)
    sign = Scalar.from_int((-1) ** n)
    rhs = sign * t ** (m * n - n * (n - 1) // 2) * q_shifted(t.inverse() ** m, t, n)
    return lhs == rhs


def check_bn_qfac(m, k):
    """q-binomial [m k] = (-1)^k q^((m+1)k) (q^-2m;q^2)_k / (q^2;q^2)_k."""
    q2 = Scalar.q_power(2)
    sign = Scalar.from_int((-1) ** k)
    rhs = sign * Scalar.q_power((m + 1) * k) * q_shifted(Scalar.q_power(-2 * m), q2, k) / q_shifted(q2, q2, k)
    return q_binomial(m, k) == rhs


def check_q_binomial_theorem(a, z, qv, tol=1e-12):
    """1_phi_0(a; -; q, z) = (az;q)_inf/(z;q)_inf, numerically."""
    lhs = basic_hypergeometric_numeric([a], [], qv, z)
    rhs = q_shifted_numeric(a * z, qv) / q_shifted_numeric(z, qv)
    return abs(lhs - rhs) <= tol


def check_phi11_special(a, c, qv, tol=1e-12):
    """1_phi_1(a; c; q, c/a) = (c/a;q)_inf/(c;q)_inf, numerically."""
    lhs = basic_hypergeometric_numeric([a], [c], qv, c / a)
    rhs = q_shifted_numeric(c / a, qv) / q_shifted_numeric(c, qv)
    return abs(lhs - rhs) <= tol


# Fractions of integer polynomials in the formal base t, represented by their
# value at t = 2**512 together with a running bound on the coefficient 1-norm.
# While the bound stays below 2**511 the balanced base-t digits of the value
# determine the polynomial uniquely, so a zero value certifies the zero
# polynomial and the equality tests below are exact.

_BIG_BITS = 512
_BIG = 1 << _BIG_BITS


class _CertFrac:
    """Unreduced fraction of integer polynomials, held as certified values."""

    __slots__ = ("num", "den", "nb", "db")

    def __init__(self, num, den, nb, db):
        if nb >= _BIG // 2 or db >= _BIG // 2:
            raise OverflowError("coefficient bound certificate exhausted")
        self.num, self.den, self.nb, self.db = num, den, nb, db

    @classmethod
    def integer(cls, k):
        return cls(k, 1, abs(k), 1)

    @classmethod
    def tpow(cls, e):
        if e >= 0:
            return cls(_BIG**e, 1, 1, 1)
        return cls(1, _BIG ** (-e), 1, 1)

    def __mul__(self, other):
        return _CertFrac(self.num * other.num, self.den * other.den, self.nb * other.nb, self.db * other.db)

    def __add__(self, other):
        return _CertFrac(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.nb * other.db + other.nb * self.db,
            self.db * other.db,
        )

    def __sub__(self, other):
        return self + _CertFrac(-other.num, other.den, other.nb, other.db)

    def __eq__(self, other):
        if self.nb * other.db + other.nb * self.db >= _BIG // 2:
            raise OverflowError("coefficient bound certificate exhausted")
        return self.num * other.den - other.num * self.den == 0

    def inverse(self):
        if self.num == 0:
            raise ZeroDivisionError
        return _CertFrac(self.den, self.num, self.db, self.nb)


_CF_ONE = _CertFrac.integer(1)


def _cf_shifted(a_exp, n):
    """(t**a_exp; t)_n as a certified fraction."""
    out = _CF_ONE
    for k in range(n):
        out = out * (_CF_ONE - _CertFrac.tpow(a_exp + k))
    return out


def _cf_basic(n):
    """(n)_t = (1 - t**n)/(1 - t)."""
    return (_CF_ONE - _CertFrac.tpow(n)) * (_CF_ONE - _CertFrac.tpow(1)).inverse()


def _cf_basic_factorial(n):
    out = _CF_ONE
    for k in range(2, n + 1):
        out = out * _cf_basic(k)
    return out


def check_qrel1_formal(m):
    """(Z;t)_m expansion, compared coefficientwise in Z over the formal base."""
    coeffs = [_CF_ONE]
    for k in range(m):
        shift = _CertFrac.tpow(k)
        new = [coeffs[0]]
        for i in range(1, len(coeffs)):
            new.append(coeffs[i] - coeffs[i - 1] * shift)
        new.append(_CertFrac.integer(0) - coeffs[-1] * shift)
        coeffs = new
    for k in range(m + 1):
        want = _CertFrac.tpow(m * k) * _cf_shifted(-m, k) * _cf_shifted(1, k).inverse()
        if coeffs[k] != want:
            return False
    return True


def check_qrel2_formal(n, m):
    lhs = _CertFrac.integer(0)
    for k in range(m - n + 1):
        term = _CertFrac.tpow((m - n + 1) * k) * _cf_basic(n + k + 1).inverse()
        term = term * _cf_shifted(-(m - n), k) * _cf_shifted(1, k).inverse()
        lhs = lhs + term
    rhs = _CertFrac.integer((-1) ** n) * _CertFrac.tpow(-m * n + n * (n - 1) // 2) * _cf_basic(m + 1).inverse()
    rhs = rhs * _cf_shifted(1, n) * _cf_shifted(-m, n).inverse()
    return lhs == rhs


def check_identity_for_h_formal(u, v):
    lhs = _CertFrac.integer(0)
    for k in range(v + 1):
        term = _cf_shifted(-v, k) * _cf_shifted(1, k).inverse()
        term = term * _CertFrac.tpow(u + k) * _cf_basic(u + k + 1).inverse()
        lhs = lhs + term
    rhs = _CertFrac.tpow(u * v) * _cf_basic_factorial(u) * _cf_basic_factorial(v)
    rhs = rhs * _cf_basic_factorial(u + v).inverse()
    rhs = rhs * _CertFrac.tpow(u + v) * _cf_basic(u + v + 1).inverse()
    return lhs == rhs


def check_qrel1(m, base):
    """(Z;t)_m = sum_k t^{mk} (t^-m;t)_k/(t;t)_k Z^k as polynomials in Z."""
    z = rat_var()
    lhs = RAT_ONE
    p = ONE
    for _ in range(m):
        lhs = lhs * (RAT_ONE - z.scale_coeffs(p))
        p = p * base
    rhs = RAT_ZERO
    for k in range(m + 1):
        c = base ** (m * k) * q_shifted(base.inverse() ** m, base, k) / q_shifted(base, base, k)
        rhs = rhs + (z**k).scale_coeffs(c)
    return lhs == rhs


def check_qrel2(n, m, base):
    """The telescoped Jackson-lattice sum behind the resolution of unity."""
    t = base
    lhs = ZERO
    for k in range(m - n + 1):
        c = t ** ((m - n + 1) * k) / basic_number(n + k + 1, t)
        c = c * q_shifted(t.inverse() ** (m - n), t, k) / q_shifted(t, t, k)
        lhs = lhs + c
    sign = Scalar.from_int((-1) ** n)
    rhs = sign * t ** (-m * n + n * (n - 1) // 2) / basic_number(m + 1, t)
    rhs = rhs * q_shifted(t, t, n) / q_shifted(t.inverse() ** m, t, n)
    return lhs == rhs


def check_identity_for_h(u, v, base):
    """The shifted-moment sum evaluating the diagonal Bargmann inner products.

    u = j+m, v = j-m in the original display.
    """
    t = base
    lhs = ZERO
    for k in range(v + 1):
        c = q_shifted(t.inverse() ** v, t, k) / q_shifted(t, t, k)
        c = c * t ** (u + k) / basic_number(u + k + 1, t)
        lhs = lhs + c
    rhs = t ** (u * v) * basic_factorial(u, t) * basic_factorial(v, t) / basic_factorial(u + v, t)
    rhs = rhs * t ** (u + v) / basic_number(u + v + 1, t)
    return lhs == rhs


def verify_sum_identities(m_max, cross_check_max=4):
    """Check qrel1/qrel2 and the inner-product identity for all index pairs.

    The exhaustive sweep runs over the formal base via certified evaluation;
    small orders are re-checked in QQ(s) at base q and q**2 as a second route.
    """
    failures = []
    for m in range(m_max + 1):
        if not check_qrel1_formal(m):
            failures.append(("qrel1", m))
        for n in range(m + 1):
            if not check_qrel2_formal(n, m):
                failures.append(("qrel2", n, m))
            if not check_identity_for_h_formal(m, n):
                failures.append(("moment-sum", m, n))
    for base in (Q, Scalar.q_power(2)):
        for m in range(min(cross_check_max, m_max) + 1):
            if not check_qrel1(m, base):
                failures.append(("qrel1-field", m))
            for n in range(m + 1):
                if not check_qrel2(n, m, base):
                    failures.append(("qrel2-field", n, m))
                if not check_identity_for_h(m, n, base):
                    failures.append(("moment-sum-field", m, n))
    return failures


def check_leibniz(f, g, base):
    """D(fg) = (Df) g(tx) + f Dg."""
    lhs = q_derivative(f * g, base)
    rhs = q_derivative(f, base) * g.scale_var(base) + f * q_derivative(g, base)
    return lhs == rhs


def check_derivative_forms(n, base):
    """D x^n = (n)_t x^(n-1) and D (x/t; t)_n = -(n)_t/t (x;t)_(n-1)."""
    x = rat_var()
    lhs = q_derivative(x**n, base)
    rhs = (x ** (n - 1)).scale_coeffs(basic_number(n, base))
    if lhs != rhs:
        return False
    tinv = base.inverse()
    prod = RAT_ONE
    p = tinv
    for _ in range(n):
        prod = prod * (RAT_ONE - x.scale_coeffs(p))
        p = p * base
    lhs = q_derivative(prod, base)
    prod2 = RAT_ONE
    p = ONE
    for _ in range(n - 1):
        prod2 = prod2 * (RAT_ONE - x.scale_coeffs(p))
        p = p * base
    rhs = prod2.scale_coeffs(-tinv * basic_number(n, base))
    return lhs == rhs


def check_derivative_form2(a, k, base):
    """D (t^(k-a) x; t)_a = -t^(k-a) (a)_t (t^(k-a+1) x; t)_(a-1)."""
    x = rat_var()

    def shifted_prod(start, count):
        out = RAT_ONE
        p = base**start
        for _ in range(count):
            out = out * (RAT_ONE - x.scale_coeffs(p))
            p = p * base
        return out

    lhs = q_derivative(shifted_prod(k - a, a), base)
    rhs = shifted_prod(k - a + 1, a - 1).scale_coeffs(-(base ** (k - a)) * basic_number(a, base))
    return lhs == rhs


def check_fundamental(f, base, upper):
    """Both directions of the fundamental theorem on a polynomial."""
    # D then integrate: the lattice sum telescopes to f(upper) - f(0)
    df = q_derivative(f, base)
    val = jackson_integral_exact(df, base, upper)
    if val != f.evaluate(upper) - f.constant_coeff():
        return False
    # integrate then D: termwise integral as a polynomial in the upper limit
    cs = [ZERO]
    for n, c in enumerate(f.num):
        cs.append(c / basic_number(n + 1, base))
    integral = RatFunc(SCALAR_FIELD, cs)
    return q_derivative(integral, base) == f


def check_by_parts(f, g, base, upper, variant):
    """Both integration-by-parts forms on polynomials, with the boundary
    term f g evaluated between 0 and the upper limit."""
    df, dg = q_derivative(f, base), q_derivative(g, base)
    gq = g.scale_var(base)
    fq = f.scale_var(base)
    fg = f * g
    boundary = fg.evaluate(upper) - fg.constant_coeff()
    if variant == 1:
        lhs = jackson_integral_exact(df * gq, base, upper)
        rhs = boundary - jackson_integral_exact(f * dg, base, upper)
    else:
        lhs = jackson_integral_exact(df * g, base, upper)
        rhs = boundary - jackson_integral_exact(fq * dg, base, upper)
    return lhs == rhs
