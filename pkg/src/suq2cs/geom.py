"""The quantum 2-sphere inside the function algebra, and one-forms on it.

The sphere coordinates arise twice: from quadratic combinations of the
Gauss letters, and from coherent-state expectations of dressed ladder
elements; the two presentations coincide element by element.  Stray
sqrt(1+q^2) normalizations ride along as radical atoms dicts, the same
bookkeeping used for coherent-state components.

The one-form layer is the left-covariant calculus with basis forms
w0, w1, w2 dual to the tangent elements chi_i.  Coordinates cross the
basis forms through a weight automorphism of the function algebra, and
the differential of any polynomial element follows letterwise from the
differentials of the Gauss letters.  The same differential must equal
the tangent-element actions computed through the pairing engine, which
is checked, not assumed.
"""

from __future__ import annotations

import math
import random

from .csrep import _rc_add, _rc_mul, _rc_scale, _rc_star, classical_monomials
from .funcalg import (
    AlgElement,
    gauss_a,
    gauss_b,
    gauss_c,
    gauss_d,
    gauss_d_inv,
    x_star,
)
from .qanalysis import q_number
from .scalars import ONE, RadicalScalar, Scalar, qint_scalar
from .zfunc import ZFunc

_QP = Scalar.q_power
_SP = Scalar.s_power


# ---------------------------------------------------------------------------
# sphere coordinates


def sphere_entries():
    """Coordinates from the Gauss letters: sqrt(1+q^2) ab, 1+(q+1/q) bc,
    sqrt(1+1/q^2) dc."""
    return {
        -1: {(2,): (gauss_a() * gauss_b()).scale(_SP(1))},
        0: {(): AlgElement.one() + (gauss_b() * gauss_c()).scale(q_number(2))},
        1: {(2,): (gauss_d() * gauss_c()).scale(_SP(-1))},
    }


def sphere_cs():
    """The same coordinates in coherent-state form: functions of x, x*."""
    zero_to_one = AlgElement.one() - AlgElement.zeta()
    return {
        -1: {(2,): AlgElement.x() * zero_to_one},
        0: {(): AlgElement.from_coeff(ZFunc([ONE, -_QP(-1) * q_number(2)]))},
        1: {(2,): (zero_to_one * x_star()).scale(-_QP(1))},
    }


def _rc_sub(f, g):
    return _rc_add(f, _rc_scale(g, -ONE))


def check_sphere_routes():
    ent, cs = sphere_entries(), sphere_cs()
    return [k for k in (-1, 0, 1) if ent[k] != cs[k]]


def check_podles_relations(coords):
    """The four defining relations of the embedded q-sphere."""
    xm, x0, xp = coords[-1], coords[0], coords[1]
    one = {(): AlgElement.one()}
    w = ONE - _QP(-2)
    rels = {
        "unit": _rc_sub(
            _rc_sub(
                _rc_sub(_rc_mul(x0, x0), _rc_scale(_rc_mul(xp, xm), _QP(-1))),
                _rc_scale(_rc_mul(xm, xp), _QP(1)),
            ),
            one,
        ),
        "mixed": _rc_sub(
            _rc_add(
                _rc_scale(_rc_mul(x0, x0), w),
                _rc_sub(
                    _rc_scale(_rc_mul(xm, xp), _QP(-1)),
                    _rc_scale(_rc_mul(xp, xm), _QP(-1)),
                ),
            ),
            _rc_scale(x0, w),
        ),
        "lower": _rc_sub(
            _rc_sub(_rc_mul(xm, x0), _rc_scale(_rc_mul(x0, xm), _QP(-2))),
            _rc_scale(xm, w),
        ),
        "raise": _rc_sub(
            _rc_sub(_rc_mul(x0, xp), _rc_scale(_rc_mul(xp, x0), _QP(-2))),
            _rc_scale(xp, w),
        ),
    }
    return [name for name, rc in rels.items() if rc]


def check_sphere_star(coords):
    bad = []
    if _rc_star(coords[1]) != _rc_scale(coords[-1], -_QP(1)):
        bad.append("raise")
    if _rc_star(coords[0]) != coords[0]:
        bad.append("middle")
    if _rc_star(coords[-1]) != _rc_scale(coords[1], -_QP(-1)):
        bad.append("lower")
    return bad


def check_zeta_from_x():
    """zeta as a Mobius function of qx*x and of qxx*."""
    zeta = AlgElement.zeta()
    bad = []
    t = (x_star() * AlgElement.x()).scale(_QP(1))
    if t * (AlgElement.one() + t).inverse() != zeta:
        bad.append("normal")
    u = AlgElement.x() * x_star()
    lhs = u.scale(_QP(3)) * (AlgElement.one() + u.scale(_QP(1))).inverse()
    if lhs != zeta:
        bad.append("reversed")
    return bad


def check_infinitesimal_character(coords):
    """q^(J0) - q^(-J0) annihilates every sphere coordinate."""
    from .duality import UElement, left_act

    u = UElement.group_like(2) - UElement.group_like(-2)
    bad = []
    for k, rc in coords.items():
        for el in rc.values():
            if not left_act(u, el).is_zero():
                bad.append(k)
    return bad


# ---------------------------------------------------------------------------
# coherent-state expectations


def cs_expectations(two_j):
    """<J+ q^-J0>, <q^-J0 J->, <q^-J0 [J0]> in the coherent state."""
    from .csrep import CSVector, overlap_state

    cs = CSVector.coherent(two_j)
    return {
        "+": overlap_state(cs, cs.ket_weight_power(-1).ket_jp()),
        "-": overlap_state(cs, cs.ket_jm().ket_weight_power(-1)),
        "0": overlap_state(cs, cs.ket_qnum_weight().ket_weight_power(-1)),
    }


def check_cs_expectations(two_j):
    got = cs_expectations(two_j)
    big = q_number(two_j)
    zero_to_one = AlgElement.one() - AlgElement.zeta()
    from .csrep import spin_qnum

    want = {
        "+": (zero_to_one * x_star()).scale(big),
        "-": (AlgElement.x() * zero_to_one).scale(big),
        "0": AlgElement.zeta().scale(_QP(-2) * big)
        - AlgElement.one().scale(_SP(two_j) * spin_qnum(two_j)),
    }
    return [k for k in want if got[k] != want[k]]


def check_sphere_from_expectations(two_j):
    """Rescaled expectations give the j-independent sphere coordinates."""
    from .csrep import spin_qnum

    ex = cs_expectations(two_j)
    big = q_number(two_j)
    shift = AlgElement.one().scale(_SP(two_j) * spin_qnum(two_j))
    got = {
        1: {(2,): ex["+"].scale(-_QP(1) / big)},
        0: {(): AlgElement.one() - (ex["0"] + shift).scale(_QP(1) * q_number(2) / big)},
        -1: {(2,): ex["-"].scale(ONE / big)},
    }
    cs = sphere_cs()
    return [k for k in (-1, 0, 1) if got[k] != cs[k]]


# ---------------------------------------------------------------------------
# classical limit


def classical_sphere_residuals(qv=1.0 - 1e-4, samples=25, seed=0):
    """Largest residual of the four relations with commuting numerics."""
    rng = random.Random(seed)
    sv = math.sqrt(qv)
    coords = {}
    for k, rc in sphere_cs().items():
        acc = {}
        for atoms, el in rc.items():
            rad = RadicalScalar._make(ONE, atoms).evaluate(sv)
            for key, v in classical_monomials(el, qv).items():
                acc[key] = acc.get(key, 0.0) + rad * v
        coords[k] = acc

    def at(poly, xv, ev, yv):
        return sum(
            v * xv**k * ev**n * yv**m for (k, n, m), v in poly.items()
        )

    w = 1.0 - qv**-2
    worst = 0.0
    for _ in range(samples):
        xv = rng.uniform(-0.8, 0.8)
        yv = rng.uniform(-0.8, 0.8)
        ev = rng.uniform(0.6, 1.5)
        xmv = at(coords[-1], xv, ev, yv)
        x0v = at(coords[0], xv, ev, yv)
        xpv = at(coords[1], xv, ev, yv)
        rels = (
            x0v * x0v - xpv * xmv / qv - qv * xmv * xpv - 1.0,
            w * x0v * x0v + (xmv * xpv - xpv * xmv) / qv - w * x0v,
            xmv * x0v - x0v * xmv / qv**2 - w * xmv,
            x0v * xpv - xpv * x0v / qv**2 - w * xpv,
        )
        worst = max(worst, max(abs(r) for r in rels))
    return worst


# ---------------------------------------------------------------------------
# one-forms: w0, w1, w2 with left coefficients


def form_zero():
    return {}

def form_add(u, v):
    out = dict(u)
    for i, el in v.items():
        out[i] = out[i] + el if i in out else el
    return {i: el for i, el in out.items() if not el.is_zero()}

def form_scale(u, c):
    out = {i: el.scale(c) for i, el in u.items()}
    return {i: el for i, el in out.items() if not el.is_zero()}

def form_lmul(f, u):
    out = {i: f * el for i, el in u.items()}
    return {i: el for i, el in out.items() if not el.is_zero()}

def lambda_map(f, i):
    """The crossing automorphism: w_i f = lambda_i(f) w_i."""
    out = AlgElement.zero()
    for (k, n, m), r in f.terms.items():
        e = 4 * n + 8 * m if i == 1 else 2 * n + 4 * m
        out = out + AlgElement({(k, n, m): r}).scale(_SP(e))
    return out

def form_rmul(u, f):
    out = {i: el * lambda_map(f, i) for i, el in u.items()}
    return {i: el for i, el in out.items() if not el.is_zero()}


_DIFF_CACHE = {}


def _letter_diffs():
    """Gauss letters, E powers, and x, y with their differentials."""
    if _DIFF_CACHE:
        return _DIFF_CACHE
    a, b, c, d = gauss_a(), gauss_b(), gauss_c(), gauss_d()
    dinv = gauss_d_inv()
    da = {1: a, 2: b}
    db = {0: a, 1: b.scale(-_QP(-2))}
    dc = {1: c, 2: d}
    dd = {0: c, 1: d.scale(-_QP(-2))}
    ddinv = form_scale(form_rmul(form_lmul(dinv, dd), dinv), -ONE)
    dx = form_scale(
        form_add(form_rmul(db, dinv), form_lmul(b, ddinv)), _SP(-1)
    )
    dy = form_scale(
        form_add(form_rmul(ddinv, c), form_lmul(dinv, dc)), _SP(1)
    )
    _DIFF_CACHE.update(
        {
            "a": (a, da),
            "b": (b, db),
            "c": (c, dc),
            "d": (d, dd),
            "x": (AlgElement.x(), dx),
            "y": (AlgElement.y(), dy),
            "E": (AlgElement.e_power(1), ddinv),
            "Einv": (AlgElement.e_power(-1), dd),
        }
    )
    return _DIFF_CACHE


def differential(f):
    """df as a one-form; f needs polynomial zeta coefficients."""
    from .duality import _term_letters

    prim = _letter_diffs()
    out = form_zero()
    for key, coeff in f.terms.items():
        for c, letters in _term_letters(key, coeff):
            prefix = AlgElement.one()
            acc = form_zero()
            for name in letters:
                el, dl = prim[name]
                acc = form_add(form_rmul(acc, el), form_lmul(prefix, dl))
                prefix = prefix * el
            out = form_add(out, form_scale(acc, c))
    return out


def d_product(f, g):
    """Leibniz route for a product, differentiating each factor."""
    return form_add(form_rmul(differential(f), g), form_lmul(f, differential(g)))


def tangent_elements():
    """chi_1 = (q^(4J0)-1)/(q^2-1), chi_0 = q^(1/2) J+ q^(J0),
    chi_2 = q^(-1/2) J- q^(J0)."""
    from .duality import UElement

    chi1 = (UElement.group_like(8) - UElement.one()).scale(
        ONE / (_QP(2) - ONE)
    )
    chi0 = UElement.mono(1, 0, 0, 2, _SP(1))
    chi2 = UElement.mono(0, 0, 1, 2, _SP(-1))
    return {0: chi0, 1: chi1, 2: chi2}


def check_differential_action_route(probes=None):
    """df agrees with the tangent-element actions through the pairing."""
    from .duality import left_act

    chi = tangent_elements()
    if probes is None:
        a, b, c, d = gauss_a(), gauss_b(), gauss_c(), gauss_d()
        probes = [
            a,
            b,
            c,
            d,
            AlgElement.x(),
            AlgElement.y(),
            AlgElement.zeta(),
            a * b,
            b * c,
            d * d,
            AlgElement.x() ** 2,
            (AlgElement.one() - AlgElement.zeta()) * x_star(),
            a * a * b,
        ]
    bad = []
    for w, f in enumerate(probes):
        got = differential(f)
        want = {i: left_act(chi[i], f) for i in (0, 1, 2)}
        want = {i: el for i, el in want.items() if not el.is_zero()}
        if got != want:
            bad.append(w)
    return bad


def check_calculus_respects_relations():
    """Leibniz differentials of both sides of each defining relation."""
    a, b, c, d = gauss_a(), gauss_b(), gauss_c(), gauss_d()
    qi = _QP(-1)
    rels = {
        "ab": form_add(d_product(a, b), form_scale(d_product(b, a), -qi)),
        "ac": form_add(d_product(a, c), form_scale(d_product(c, a), -qi)),
        "bd": form_add(d_product(b, d), form_scale(d_product(d, b), -qi)),
        "cd": form_add(d_product(c, d), form_scale(d_product(d, c), -qi)),
        "bc": form_add(d_product(b, c), form_scale(d_product(c, b), -ONE)),
        "ad-da": form_add(
            form_add(d_product(a, d), form_scale(d_product(d, a), -ONE)),
            form_scale(d_product(b, c), _QP(1) - qi),
        ),
        "det": form_add(d_product(a, d), form_scale(d_product(b, c), -qi)),
    }
    return [name for name, w in rels.items() if w]


def check_coordinates_commute_with_forms():
    """lambda_i fixes x and x*, so the forms commute with both."""
    bad = []
    for i in (0, 1, 2):
        for name, el in (("x", AlgElement.x()), ("x*", x_star())):
            if lambda_map(el, i) != el:
                bad.append((name, i))
    return bad


def check_lambda_automorphism(rng, count=40):
    from .funcalg import random_element

    bad = 0
    for _ in range(count):
        f, g = random_element(rng), random_element(rng)
        for i in (0, 1, 2):
            if lambda_map(f * g, i) != lambda_map(f, i) * lambda_map(g, i):
                bad += 1
    return bad
