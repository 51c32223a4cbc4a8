"""Holomorphic realization of the spin representations.

Spin-j states become polynomials in x of degree at most 2j, with the
inner product (f, g) = (2j+1)_{q^2} H[f* e(-jz*) e(-jz) g].  The
normalized monomials are an orthonormal basis, and the algebra acts
through the q^2-difference operator, so ladder coefficients come out as
square roots of basic numbers rather than of q-integers.

Vectors carry their radical normalizations the same way coherent-state
components do: dicts from square-free atom tuples to elements that are
polynomial in x.
"""

from __future__ import annotations

from fractions import Fraction

from .funcalg import AlgElement, gauss_a
from .haar import haar_state
from .qanalysis import (
    basic_number,
    q_binomial,
    sqrt_basic_number,
    sqrt_q_binomial,
)
from .scalars import ONE, RadicalScalar, Scalar, ZERO

_QP = Scalar.q_power
_SP = Scalar.s_power
_Q2 = _QP(2)


def basis_vector(two_j, p):
    """Normalized monomial of degree p = j + m, as an atoms dict."""
    if not 0 <= p <= two_j:
        raise ValueError("degree out of range")
    rad = sqrt_q_binomial(two_j, p) * _SP(-p * two_j - 2 * (two_j - p))
    return {rad.atoms: AlgElement.word(p, 0, 0).scale(rad.u)}


def inner(two_j, f, g):
    """(f, g) for atoms dicts of x-polynomials, as a RadicalScalar."""
    mid = gauss_a() ** two_j * AlgElement.e_power(-two_j)
    acc = {}
    for af, ef in f.items():
        for ag, eg in g.items():
            h = haar_state(ef.star() * mid * eg)
            if h.is_zero():
                continue
            r = RadicalScalar._make(ONE, af) * RadicalScalar._make(ONE, ag)
            acc[r.atoms] = acc.get(r.atoms, ZERO) + r.u * h
    acc = {a: v for a, v in acc.items() if not v.is_zero()}
    if len(acc) > 1:
        raise ValueError("mixed radicals in an inner product")
    norm = basic_number(two_j + 1, _Q2)
    for atoms, v in acc.items():
        return RadicalScalar._make(norm * v, atoms)
    return RadicalScalar.from_scalar(ZERO)


def _map_terms(f, fn):
    out = {}
    for atoms, el in f.items():
        terms = AlgElement.zero()
        for (p, n, m), r in el.terms.items():
            if n or m:
                raise ValueError("not a polynomial in x")
            terms = terms + fn(p, r.as_scalar())
        if not terms.is_zero():
            out[atoms] = terms
    return out


def op_jp(two_j, f):
    """((2j)_{q^2} x - x^2 D_{q^2}) q^(3/2 - 3j - J0)."""
    def act(p, c):
        u = (basic_number(two_j, _Q2) - basic_number(p, _Q2)) * _SP(
            3 - 2 * two_j - 2 * p
        )
        return AlgElement.word(p + 1, 0, 0).scale(c * u)

    return _map_terms(f, act)


def op_jm(two_j, f):
    """D_{q^2} q^(-1/2 + j - J0)."""
    def act(p, c):
        u = basic_number(p, _Q2) * _SP(2 * two_j - 2 * p - 1)
        return AlgElement.word(p - 1, 0, 0).scale(c * u) if p else AlgElement.zero()

    return _map_terms(f, act)


def op_j0(two_j, f):
    """x d/dx - j."""
    def act(p, c):
        u = Scalar.from_fraction(Fraction(2 * p - two_j, 2))
        return AlgElement.word(p, 0, 0).scale(c * u)

    return _map_terms(f, act)


# ---------------------------------------------------------------------------
# checks


def check_monomial_integrals(two_j):
    """Haar values of (x*)^p e(-jz*) e(-jz) x^p against the closed form."""
    mid = gauss_a() ** two_j * AlgElement.e_power(-two_j)
    bad = []
    for p in range(two_j + 1):
        lhs = haar_state(
            AlgElement.word(p, 0, 0).star() * mid * AlgElement.word(p, 0, 0)
        )
        want = (
            _SP(two_j * (two_j + 2) + (2 * p - two_j) * (two_j - 2))
            / q_binomial(two_j, p)
            / basic_number(two_j + 1, _Q2)
        )
        if lhs != want:
            bad.append(p)
    return bad


def check_orthonormal(two_j):
    bad = []
    for pp in range(two_j + 1):
        for p in range(two_j + 1):
            got = inner(two_j, basis_vector(two_j, pp), basis_vector(two_j, p))
            want = ONE if pp == p else ZERO
            if got != want:
                bad.append((pp, p))
    return bad


def check_ladder_action(two_j):
    """Operator images of basis monomials against the spin matrix elements."""
    bad = []
    for p in range(two_j + 1):
        psi = basis_vector(two_j, p)
        want_p = {}
        if p < two_j:
            rad = sqrt_basic_number(two_j - p, 2) * sqrt_basic_number(p + 1, 2)
            want_p = _scale_rc(basis_vector(two_j, p + 1), rad)
        if op_jp(two_j, psi) != want_p:
            bad.append(("raise", p))
        want_m = {}
        if p > 0:
            rad = sqrt_basic_number(p, 2) * sqrt_basic_number(two_j - p + 1, 2)
            want_m = _scale_rc(basis_vector(two_j, p - 1), rad)
        if op_jm(two_j, psi) != want_m:
            bad.append(("lower", p))
        u = Scalar.from_fraction(Fraction(2 * p - two_j, 2))
        want_0 = {} if u.is_zero() else {a: el.scale(u) for a, el in psi.items()}
        if op_j0(two_j, psi) != want_0:
            bad.append(("weight", p))
    return bad


def _scale_rc(f, rad):
    out = {}
    for atoms, el in f.items():
        r = RadicalScalar._make(ONE, atoms) * rad
        if not r.is_zero():
            out[r.atoms] = el.scale(r.u)
    return out


def check_commutator(two_j):
    """[J+, J-] is diagonal with the q^(2j-1)-rescaled weight q-number.

    The basic-number ladder coefficients carry a uniform extra
    q^(j-1/2) relative to the q-integer spin matrices, so on this one
    spin block the commutator picks up its square.
    """
    bad = []
    for p in range(two_j + 1):
        psi = basis_vector(two_j, p)
        got = _rc_sub(
            op_jp(two_j, op_jm(two_j, psi)), op_jm(two_j, op_jp(two_j, psi))
        )
        two_m = 2 * p - two_j
        u = (
            _SP(2 * two_j - 2)
            * (_SP(2 * two_m) - _SP(-2 * two_m))
            / (_QP(1) - _QP(-1))
        )
        want = {a: el.scale(u) for a, el in psi.items()} if not u.is_zero() else {}
        if got != want:
            bad.append(p)
    return bad


def _rc_sub(f, g):
    out = dict(f)
    for a, el in g.items():
        out[a] = out[a] - el if a in out else -el
    return {a: el for a, el in out.items() if not el.is_zero()}


def check_hermiticity(two_j):
    """J0 is symmetric and the ladder operators are mutually adjoint."""
    basis = [basis_vector(two_j, p) for p in range(two_j + 1)]
    bad = []
    for pp, f in enumerate(basis):
        for p, g in enumerate(basis):
            if inner(two_j, op_j0(two_j, f), g) != inner(
                two_j, f, op_j0(two_j, g)
            ):
                bad.append(("weight", pp, p))
            if inner(two_j, op_jp(two_j, f), g) != inner(
                two_j, f, op_jm(two_j, g)
            ):
                bad.append(("ladder", pp, p))
    return bad
