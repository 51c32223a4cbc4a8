"""Complex differential calculus in the coordinates x, x*.

Working over the commuting coordinate t = x*x, every element of the
x, x* subalgebra is a sum  r(t) x^b  or  r(t) (x*)^a  with rational r,
and the calculus closes on these: moving x, x*, dx, or dx* through a
rational function substitutes a Mobius map of t into it.  A FormElement
stores terms keyed by the signed letter excess (+b for x^b, -a for
(x*)^a) and the differential word, with the rational coefficient kept
on the left.

The two basic one-forms anticommute only up to the rational factor
C(t), and (dx)^2 = (dx*)^2 = 0.  The exterior differential follows the
graded Leibniz rule from dx and dx* alone; its closed forms and its
square are checked, not assumed.
"""

from __future__ import annotations

from .qanalysis import RAT_ONE, SCALAR_FIELD, rat_const, rat_var
from .ratfunc import RatFunc
from .scalars import ONE, ZERO, Scalar

_QP = Scalar.q_power
OMEGA = _QP(1) - _QP(-1)

# t -> (a t + b)/(c t + d) substituted when the symbol moves left past r(t)
_PHI = {
    "x": (_QP(-2), ZERO, OMEGA, ONE),
    "xs": (_QP(2), ZERO, -_QP(2) * OMEGA, ONE),
    "dx": (_QP(-4), ZERO, (ONE - _QP(-4)) * _QP(1), ONE),
    "dxs": (_QP(4), ZERO, (ONE - _QP(4)) * _QP(1), ONE),
}


def push(r, sym):
    """r(t) -> r(phi_sym(t)), so that sym r(t) = push(r, sym) sym."""
    return r.mobius(*_PHI[sym])


_PHI_ITER = {}


def _iterate_phi(sym, count):
    key = (sym, count)
    if key not in _PHI_ITER:
        h = rat_var()
        for _ in range(count):
            h = h.mobius(*_PHI[sym])
        _PHI_ITER[key] = h
    return _PHI_ITER[key]


def f_plus():
    """1/(1 + (1-q^4) q t)."""
    return (RAT_ONE + rat_var() * rat_const((ONE - _QP(4)) * _QP(1))).inverse()


def f_minus():
    """1/(1 + (1-q^-4) q t)."""
    return (RAT_ONE + rat_var() * rat_const((ONE - _QP(-4)) * _QP(1))).inverse()


_TWO_FORM = None


def two_form_factor():
    """C with dx dx* = C(t) dx* dx."""
    global _TWO_FORM
    if _TWO_FORM is None:
        t = rat_var()
        swap = (RAT_ONE - rat_const(_QP(2) * OMEGA) * t) / (
            RAT_ONE + rat_const(OMEGA) * t
        )
        _TWO_FORM = rat_const(-_QP(-2)) * f_minus() * swap
    return _TWO_FORM


# d-letter crossing a letter: (scalar, left rational factor)
def _cross_rules():
    return {
        ("dx", "x"): (_QP(-2), RAT_ONE),
        ("dx", "xs"): (_QP(-2), f_minus()),
        ("dxs", "x"): (_QP(2), push(f_plus(), "x")),
        ("dxs", "xs"): (_QP(2), RAT_ONE),
    }


_RULES = None


def _rule(dletter, sym):
    global _RULES
    if _RULES is None:
        _RULES = _cross_rules()
    return _RULES[(dletter, sym)]


def _cross_letters(r, excess):
    sym = "x" if excess > 0 else "xs"
    for _ in range(abs(excess)):
        r = push(r, sym)
    return r


class FormElement:
    """Sum of r(t) letters dword terms; see the module docstring."""

    __slots__ = ("terms",)

    def __init__(self, items=()):
        terms = {}
        items = items.items() if isinstance(items, dict) else items
        for key, r in items:
            if key in terms:
                r = terms[key] + r
            terms[key] = r
        self.terms = {k: r for k, r in terms.items() if not r.is_zero()}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def func(cls, r):
        return cls([((0, ()), r)])

    @classmethod
    def one(cls):
        return cls.func(RAT_ONE)

    @classmethod
    def x(cls):
        return cls([((1, ()), RAT_ONE)])

    @classmethod
    def xs(cls):
        return cls([((-1, ()), RAT_ONE)])

    @classmethod
    def dx(cls):
        return cls([((0, ("dx",)), RAT_ONE)])

    @classmethod
    def dxs(cls):
        return cls([((0, ("dxs",)), RAT_ONE)])

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {len(dw) for _, dw in self.terms}

    def scale(self, c):
        if isinstance(c, Scalar):
            c = rat_const(c)
        return FormElement([(k, c * r) for k, r in self.terms.items()])

    def __add__(self, other):
        return FormElement(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def __eq__(self, other):
        return isinstance(other, FormElement) and self.terms == other.terms

    __hash__ = None

    def __mul__(self, other):
        out = []
        for (e1, dw1), r1 in self.terms.items():
            for (e2, dw2), r2 in other.terms.items():
                got = _term_mul(e1, dw1, r1, e2, dw2, r2)
                if got is not None:
                    out.append(got)
        return FormElement(out)

    def __pow__(self, k):
        out = FormElement.one()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"FormElement({self.terms!r})"


def _term_mul(e1, dw1, r1, e2, dw2, r2):
    # slide r2 left through the d-word, then the letters, of the first term
    for dletter in reversed(dw1):
        r2 = push(r2, dletter)
    r = r1 * _cross_letters(r2, e1)
    e, dw = e1, dw1
    sym = "x" if e2 > 0 else "xs"
    for _ in range(abs(e2)):
        got = _feed_letter(r, e, dw, sym)
        if got is None:
            return None
        r, e, dw = got
    for dletter in dw2:
        got = _feed_dletter(r, e, dw, dletter)
        if got is None:
            return None
        r, e, dw = got
    if r.is_zero():
        return None
    return (e, dw), r


def _feed_letter(r, e, dw, sym):
    fun = RAT_ONE
    for dletter in reversed(dw):
        c, g = _rule(dletter, sym)
        fun = push(fun, dletter) * g * rat_const(c)
    if fun is not RAT_ONE:
        r = r * _cross_letters(fun, e)
    if sym == "x":
        if e < 0:
            return r * _iterate_phi("xs", -e - 1), e + 1, dw
        return r, e + 1, dw
    if e > 0:
        return r * _iterate_phi("x", e), e - 1, dw
    return r, e - 1, dw


def _feed_dletter(r, e, dw, dletter):
    if dw == ():
        return r, e, (dletter,)
    if len(dw) == 2:
        return None
    if dw[0] == dletter:
        return None
    if dw == ("dxs",):
        return r, e, ("dxs", "dx")
    return r * _cross_letters(two_form_factor(), e), e, ("dxs", "dx")


# ---------------------------------------------------------------------------
# exterior differential


def dt_form():
    """dt = dx* x + x* dx."""
    return FormElement.dxs() * FormElement.x() + FormElement.xs() * FormElement.dx()


_D_POWERS = {}


def _d_power(n):
    if n not in _D_POWERS:
        t = FormElement.func(rat_var())
        dt = dt_form()
        out = FormElement.zero()
        for i in range(n):
            out = out + t**i * dt * t ** (n - 1 - i)
        _D_POWERS[n] = out
    return _D_POWERS[n]


def _d_func(r):
    if r.is_polynomial():
        out = FormElement.zero()
        for k, c in enumerate(r.num):
            if k and not c.is_zero():
                out = out + _d_power(k).scale(c)
        return out
    p = RatFunc(r.field, list(r.num))
    den = RatFunc(r.field, list(r.den))
    inv = FormElement.func(den.inverse())
    return _d_func(p) * inv - FormElement.func(p * den.inverse()) * _d_func(den) * inv


def _d_letters(e):
    if e == 0:
        return FormElement.zero()
    letter = FormElement.x() if e > 0 else FormElement.xs()
    dletter = FormElement.dx() if e > 0 else FormElement.dxs()
    out = FormElement.zero()
    for i in range(abs(e)):
        out = out + letter**i * dletter * letter ** (abs(e) - 1 - i)
    return out


def d(w):
    """Exterior differential by the graded Leibniz rule."""
    out = FormElement.zero()
    for (e, dw), r in w.terms.items():
        if len(dw) == 2:
            continue
        letters = FormElement([((e, ()), RAT_ONE)])
        zero_part = _d_func(r) * letters + FormElement.func(r) * _d_letters(e)
        if dw:
            zero_part = zero_part * FormElement([((0, dw), RAT_ONE)])
        out = out + zero_part
    return out


def dt_power_closed(n):
    """The resummed d(t^n) with explicit rational coefficients."""
    t = rat_var()
    lead = (
        rat_const(_QP(1) / OMEGA)
        * (RAT_ONE + rat_const(OMEGA) * t)
        / (RAT_ONE + rat_const(_QP(1)) * t)
        * t ** (n - 1)
    )
    inner_x = RAT_ONE - rat_const(_QP(2 * n)) * (
        RAT_ONE - rat_const(_QP(2) * OMEGA) * t
    ) ** (-n)
    inner_xs = RAT_ONE - rat_const(_QP(-2 * n)) * (
        RAT_ONE + rat_const(OMEGA) * t
    ) ** (-n)
    return FormElement.func(-lead * inner_x) * FormElement.x() * FormElement.dxs() + (
        FormElement.func(lead * inner_xs) * FormElement.xs() * FormElement.dx()
    )


# ---------------------------------------------------------------------------
# checks


def check_letter_rules():
    """The four coordinate / one-form crossing rules."""
    x, xs = FormElement.x(), FormElement.xs()
    dx, dxs = FormElement.dx(), FormElement.dxs()
    rels = {
        "x-dx": x * dx - (dx * x).scale(_QP(2)),
        "xs-dxs": xs * dxs - (dxs * xs).scale(_QP(-2)),
        "dx-xs": dx * xs - (xs * dx).scale(rat_const(_QP(-2)) * f_minus()),
        "dxs-x": dxs * x - (x * FormElement.func(f_plus()) * dxs).scale(_QP(2)),
    }
    return [name for name, w in rels.items() if not w.is_zero()]


def check_nilpotent():
    dx, dxs = FormElement.dx(), FormElement.dxs()
    bad = []
    if not (dx * dx).is_zero():
        bad.append("dx")
    if not (dxs * dxs).is_zero():
        bad.append("dxs")
    top = dxs * dx
    for name, w in (("top-dx", top * dx), ("top-dxs", top * dxs)):
        if not w.is_zero():
            bad.append(name)
    return bad


def check_dt_closed_forms(max_n=4):
    return [
        n
        for n in range(1, max_n + 1)
        if d(FormElement.func(rat_var() ** n)) != dt_power_closed(n)
    ]


def check_d_squared():
    t = rat_var()
    probes = {
        "t": FormElement.func(t),
        "t2": FormElement.func(t**2),
        "x": FormElement.x(),
        "xs": FormElement.xs(),
        "x2": FormElement.x() ** 2,
        "x-xs": FormElement.x() * FormElement.xs(),
        "f-": FormElement.func(f_minus()),
    }
    return [name for name, w in probes.items() if not d(d(w)).is_zero()]


def random_form(rng, degree=None, max_terms=2, rational=True):
    dwords = {0: [()], 1: [("dx",), ("dxs",)], 2: [("dxs", "dx")]}
    pool = dwords[degree] if degree is not None else [w for v in dwords.values() for w in v]
    items = []
    for _ in range(rng.randint(1, max_terms)):
        e = rng.randint(-2, 2)
        dw = pool[rng.randrange(len(pool))]
        num = [Scalar.from_int(rng.randint(-2, 2)) for _ in range(rng.randint(1, 2))]
        r = RatFunc(SCALAR_FIELD, num)
        if rational and rng.random() < 0.4:
            r = r / (RAT_ONE + rat_const(_QP(2 * rng.randint(-1, 1))) * rat_var())
        items.append(((e, dw), r))
    return FormElement(items)


def check_associativity(rng, count=60):
    bad = 0
    for _ in range(count):
        u, v, w = (random_form(rng) for _ in range(3))
        if (u * v) * w != u * (v * w):
            bad += 1
    return bad


def check_graded_leibniz(rng, count=40):
    # polynomial coefficients; d on rational ones is covered by d-squared
    bad = 0
    for _ in range(count):
        deg = rng.randint(0, 1)
        u = random_form(rng, degree=deg, rational=False)
        v = random_form(rng, degree=rng.randint(0, 1), rational=False)
        lhs = d(u * v)
        rhs = d(u) * v + (u * d(v) if deg == 0 else -(u * d(v)))
        if lhs != rhs:
            bad += 1
    return bad


def check_pushes_against_elements(rng, count=40):
    """phi_x, phi_xs against the noncommutative product, via t = x*x.

    With r = p/d and r' = push(r), the claim letter r = r' letter is the
    denominator-free identity  d'(t) letter p(t) = p'(t) letter d(t).
    """
    from .funcalg import AlgElement, x_star
    from .zfunc import ZFunc

    tz = ZFunc([ZERO, _QP(-1)], [(ONE, 1)])  # q^-1 Z / (1 - Z)

    def as_poly(coeffs):
        out = ZFunc.const(ZERO)
        power = ZFunc.const(ONE)
        for c in coeffs:
            out = out + ZFunc.const(c) * power
            power = power * tz
        return AlgElement.from_coeff(out)

    bad = 0
    for _ in range(count):
        num = [Scalar.from_int(rng.randint(-2, 2)) for _ in range(rng.randint(1, 3))]
        r = RatFunc(SCALAR_FIELD, num)
        if rng.random() < 0.5:
            r = r / (RAT_ONE + rat_const(_QP(2 * rng.randint(0, 1))) * rat_var())
        if r.is_zero():
            continue
        for sym, letter in (("x", AlgElement.x()), ("xs", x_star())):
            rp = push(r, sym)
            lhs = as_poly(rp.den) * letter * as_poly(r.num)
            rhs = as_poly(rp.num) * letter * as_poly(r.den)
            if lhs != rhs:
                bad += 1
    return bad


def func_eval(r, sv, tv):
    num = 0.0
    for c in reversed(r.num):
        num = num * tv + c.evaluate(sv)
    den = 0.0
    for c in reversed(r.den):
        den = den * tv + c.evaluate(sv)
    return num / den


def classical_two_form_residual(qv=1.0 - 1e-4, samples=20, seed=0):
    """C(t) approaches -1, so dx and dx* anticommute in the limit."""
    import random as _random

    rng = _random.Random(seed)
    sv = qv**0.5
    c = two_form_factor()
    return max(
        abs(func_eval(c, sv, rng.uniform(0.0, 1.0)) + 1.0) for _ in range(samples)
    )
