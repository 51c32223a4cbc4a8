"""The invariant state on the function algebra.

Only the zeta part of an element contributes: every word carrying x, y
or E powers averages to zero.  On powers of zeta the state has the
closed value q^(2n)/(n+1)_{q^2}, which is also the Jackson integral of
t^n over [0, 1] after the substitution t -> q^2 t; the numeric evaluator
sums that lattice series directly, so it also covers rational
coefficients as long as no pole sits on a lattice point.
"""

from __future__ import annotations

from .qanalysis import basic_number, jackson_integral_exact, rat_const, rat_var
from .scalars import ONE, ZERO, Scalar

_QP = Scalar.q_power


def haar_monomial(n):
    """Value on the n-th zeta power."""
    return _QP(2 * n) / basic_number(n + 1, _QP(2))


def haar_state(f):
    """Exact value on an element with a polynomial zeta coefficient."""
    coeff = f.terms.get((0, 0, 0))
    if coeff is None:
        return ZERO
    out = ZERO
    for n, c in enumerate(coeff.polynomial_coeffs()):
        if not c.is_zero():
            out = out + c * haar_monomial(n)
    return out


def haar_state_numeric(f, q, pole_tol=1e-13, tol=1e-16, cap=2000):
    """Lattice-series value at numeric q; rational coefficients allowed.

    Raises ArithmeticError when a denominator factor vanishes on the
    summation lattice, which is exactly when the element fails to be
    integrable.
    """
    coeff = f.terms.get((0, 0, 0))
    if coeff is None:
        return 0.0
    s = q ** 0.5
    alphas = [(alpha.evaluate(s), e) for alpha, e in coeff.den]
    total = 0.0
    weight = 1.0
    quiet = 0
    for k in range(cap):
        v = q ** (2 * k + 2)
        for aval, _ in alphas:
            if abs(1.0 - aval * v) < pole_tol:
                raise ArithmeticError("pole on the summation lattice")
        term = weight * coeff.evaluate(s, v)
        total += term
        weight *= q * q
        quiet = quiet + 1 if abs(term) <= tol * (1.0 + abs(total)) else 0
        if quiet >= 5:
            break
    return (1.0 - q * q) * total


def check_haar_values(n_max=20):
    """Closed values against the Jackson-integral route."""
    base = _QP(2)
    bad = []
    t = rat_var()
    p = rat_const(ONE)
    for n in range(n_max + 1):
        other = _QP(2 * n) * jackson_integral_exact(p, base, ONE)
        if haar_monomial(n) != other:
            bad.append(n)
        p = p * t
    return bad


def check_haar_numeric_agreement(q, n_max=12, tol=1e-12):
    """Exact closed values against the numeric lattice sum."""
    from .funcalg import AlgElement

    s = q ** 0.5
    bad = []
    zn = AlgElement.one()
    for n in range(n_max + 1):
        exact = haar_state(zn).evaluate(s)
        approx = haar_state_numeric(zn, q)
        if abs(exact - approx) > tol:
            bad.append((n, exact, approx))
        zn = zn * AlgElement.zeta()
    return bad


def check_haar_positivity(rng, q, count=40, min_ok=10, tol=1e-10):
    """H[f* f] >= 0 on random elements; non-integrable samples skipped."""
    from .funcalg import AlgElement, random_element

    ok = 0
    bad = []
    for i in range(count):
        f = random_element(rng)
        if f.is_zero():
            continue
        g = f.star() * f
        try:
            val = haar_state_numeric(g, q)
        except ArithmeticError:
            continue
        ok += 1
        if val < -tol:
            bad.append((i, val))
    if ok < min_ok:
        bad.append(("too-few-integrable-samples", ok))
    return bad
