"""Rational functions of one central variable with factored denominators.

Coefficient layer for the noncommutative engine: every function is a
polynomial over QQ(s) divided by a product of linear factors
prod (1 - alpha*V)**e.  Keeping the denominator factored makes products,
geometric substitutions V -> c*V and series extraction cheap, and avoids
the coefficient blow-up of a generic polynomial gcd over QQ(s).  Because
linear factorizations are unique and every constructor cancels shared
factors, the stored form is canonical and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, Scalar

# ---------------------------------------------------------------------------
# polynomial helpers (lists of Scalars, ascending powers)


def _ttrim(cs):
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return list(cs[:n])


def _tadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _ttrim(out)


def _tmul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _ttrim(out)


def _rev_eval(cs, alpha):
    """Sum c_i * alpha**(d-i); zero iff 1/alpha is a root of the polynomial."""
    acc = ZERO
    for c in cs:
        acc = acc * alpha + c
    return acc


def _div_linear(cs, alpha):
    """Exact quotient of cs by (1 - alpha*V); call only after a root test."""
    out = [cs[0]]
    for i in range(1, len(cs) - 1):
        out.append(cs[i] + alpha * out[-1])
    return out


def _expand_den(den):
    """Multiply out prod (1 - alpha*V)**e as a plain coefficient list."""
    out = [ONE]
    for alpha, e in den:
        lin = [ONE, -alpha]
        for _ in range(e):
            out = _tmul(out, lin)
    return out


def _akey(alpha):
    return (alpha.num, alpha.den)


def _coerce_scalar(c):
    return c if isinstance(c, Scalar) else Scalar.from_fraction(c)


def _monomial_parts(sc):
    """(rational, s-exponent) when the scalar is r * s**k, else None."""
    nnum = [(i, c) for i, c in enumerate(sc.num) if c]
    nden = [(i, c) for i, c in enumerate(sc.den) if c]
    if len(nnum) != 1 or len(nden) != 1:
        return None
    (i, n), (j, m) = nnum[0], nden[0]
    return Fraction(n, m), i - j


def _lattice_candidates(p):
    """Roots of the shape c*s**t: c from divisor pairs of the root product,
    t scanned over a bounded window (fallback for gaps and multiplicities)."""
    parts = _monomial_parts(p[-1] / p[0])
    if parts is None:
        return
    r, m = parts
    u, v = abs(r.numerator), r.denominator
    if u > 1000 or v > 1000:
        return
    bound = min(40, abs(m) + 2 * (len(p) - 1) + 4)
    bases = []
    for du in range(1, u + 1):
        if u % du:
            continue
        for dv in range(1, v + 1):
            if v % dv:
                continue
            bases.append(Scalar.from_fraction(Fraction(du, dv)))
    for t in sorted(range(-bound, bound + 1), key=abs):
        mono = Scalar.s_power(t)
        for base in bases:
            cand = base * mono
            yield cand
            yield -cand


def _first_root(p, cands, seen):
    for beta in cands:
        if beta.is_zero():
            continue
        key = _akey(beta)
        if key in seen:
            continue
        seen.add(key)
        if _rev_eval(p, beta).is_zero():
            return beta
    return None


def _factor_linear(cs):
    """Write a polynomial as unit * prod (1 - beta*V)**m.

    Root candidates target what the engine produces: geometric ladders in
    q**2 or q**-2, their shifts, and monomial roots c*s**t with small
    rational part.  Anything outside that family raises ArithmeticError.
    """
    p = list(cs)
    if p[0].is_zero():
        raise ArithmeticError("vanishing constant term has no representable inverse")
    q2 = Scalar.q_power(2)
    qm2 = Scalar.q_power(-2)
    found = {}
    recent = []
    while len(p) > 1:
        d = len(p) - 1
        a1 = p[1] / p[0]
        cands = [-a1]
        for ratio in (ONE, q2, qm2):
            step, ssum = ONE, ONE
            for k in range(2, d + 1):
                step = step * ratio
                ssum = ssum + step
                rung = -a1 / ssum
                for _ in range(k):
                    cands.append(rung)
                    rung = rung * ratio
        for beta in recent:
            cands.append(beta * q2)
            cands.append(beta * qm2)
        seen = set()
        hit = _first_root(p, cands, seen)
        if hit is None:
            hit = _first_root(p, _lattice_candidates(p), seen)
        if hit is None:
            raise ArithmeticError("numerator does not factor over the expected q-ladders")
        p = _div_linear(p, hit)
        k = _akey(hit)
        found[k] = (hit, found[k][1] + 1) if k in found else (hit, 1)
        recent.append(hit)
    return p[0], [v for _, v in sorted(found.items())]


class ZFunc:
    """num(V) / prod (1 - alpha*V)**e with Scalar coefficients.

    den stores (alpha, e) pairs sorted by alpha, e >= 1, alpha nonzero;
    the zero function is () / ().  Negative exponents passed to the
    constructor multiply the matching factors into the numerator instead.
    """

    __slots__ = ("num", "den")
    var = "Z"

    def __init__(self, num, den_factors=()):
        num = _ttrim([_coerce_scalar(c) for c in num])
        fac = {}
        items = den_factors.items() if isinstance(den_factors, dict) else den_factors
        for alpha, e in items:
            alpha = _coerce_scalar(alpha)
            if alpha.is_zero() or e == 0:
                continue
            if e < 0:
                lin = [ONE, -alpha]
                for _ in range(-e):
                    num = _tmul(num, lin)
                continue
            k = _akey(alpha)
            fac[k] = (alpha, fac[k][1] + e) if k in fac else (alpha, e)
        if not num:
            self.num, self.den = (), ()
            return
        out = []
        for k in sorted(fac):
            alpha, e = fac[k]
            while e and len(num) > 1 and _rev_eval(num, alpha).is_zero():
                num = _div_linear(num, alpha)
                e -= 1
            if e:
                out.append((alpha, e))
        self.num, self.den = tuple(num), tuple(out)

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    # -- constructors

    @classmethod
    def const(cls, c):
        c = _coerce_scalar(c)
        return cls._raw(() if c.is_zero() else (c,), ())

    @classmethod
    def variable(cls):
        return cls._raw((ZERO, ONE), ())

    @classmethod
    def from_product(cls, unit, factors):
        """unit * prod (1 - alpha*V)**e with literal exponents of either sign."""
        unit = _coerce_scalar(unit)
        return cls((unit,), [(a, -e) for a, e in factors])

    # -- predicates and access

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (ONE,) and not self.den

    def is_polynomial(self):
        return not self.den

    def is_constant(self):
        return len(self.num) <= 1 and not self.den

    def as_scalar(self):
        if not self.is_constant():
            raise ValueError("not a constant function")
        return self.num[0] if self.num else ZERO

    def constant_coeff(self):
        return self.num[0] if self.num else ZERO

    def polynomial_coeffs(self):
        if self.den:
            raise ValueError("not a polynomial")
        return self.num

    def num_degree(self):
        return len(self.num) - 1

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, ZFunc):
            return other
        if isinstance(other, (Scalar, int)):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return type(self)(_tadd(self.num, other.num), self.den)
        da = {_akey(a): (a, e) for a, e in self.den}
        db = {_akey(a): (a, e) for a, e in other.den}
        union = dict(da)
        for k, (a, e) in db.items():
            if k not in union or union[k][1] < e:
                union[k] = (a, e)
        na, nb = list(self.num), list(other.num)
        for k, (a, e) in union.items():
            lift_a = e - (da[k][1] if k in da else 0)
            lift_b = e - (db[k][1] if k in db else 0)
            lin = [ONE, -a]
            for _ in range(lift_a):
                na = _tmul(na, lin)
            for _ in range(lift_b):
                nb = _tmul(nb, lin)
        return type(self)(_tadd(na, nb), list(union.values()))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return type(self)._raw((), ())
        merged = {}
        for a, e in self.den + other.den:
            k = _akey(a)
            merged[k] = (a, merged[k][1] + e) if k in merged else (a, e)
        return type(self)(_tmul(list(self.num), list(other.num)), list(merged.values()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = type(self).const(ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero function")
        unit, nfac = _factor_linear(self.num)
        inv_unit = unit.inverse()
        num = [c * inv_unit for c in _expand_den(self.den)]
        return type(self)(num, nfac)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    # -- substitutions and series

    def scale(self, c):
        """Multiply by a Scalar."""
        c = _coerce_scalar(c)
        if c.is_zero() or not self.num:
            return type(self)._raw((), ())
        return type(self)._raw(tuple(x * c for x in self.num), self.den)

    def scale_var(self, c):
        """Substitute V -> c*V."""
        c = _coerce_scalar(c)
        if not self.num:
            return self
        if c.is_zero():
            return type(self).const(self.num[0])
        num, pw = [], ONE
        for i, x in enumerate(self.num):
            if i:
                pw = pw * c
            num.append(x * pw)
        return type(self)(num, [(a * c, e) for a, e in self.den])

    def mobius_scale(self, a, c):
        """Substitute V -> a*V/(1 + c*V); the class is closed under this."""
        a, c = _coerce_scalar(a), _coerce_scalar(c)
        if not self.num:
            return self
        if c.is_zero():
            return self.scale_var(a)
        d = len(self.num) - 1
        etot = sum(e for _, e in self.den)
        lin = [ONE, c]
        apow = [ONE]
        for _ in range(d):
            apow.append(apow[-1] * a)
        num, lift = [], [ONE]
        for i in range(d, -1, -1):
            coeff = self.num[i] * apow[i]
            num = _tadd(num, [ZERO] * i + [coeff * t for t in lift])
            lift = _tmul(lift, lin)
        den = [(a * alpha - c, e) for alpha, e in self.den]
        balance = etot - d
        if balance > 0:
            for _ in range(balance):
                num = _tmul(num, lin)
        elif balance < 0:
            den.append((-c, -balance))
        return type(self)(num, den)

    def series_coeff(self, k):
        """Taylor coefficient of V**k at V = 0."""
        dexp = _expand_den(self.den)
        out = []
        for i in range(k + 1):
            v = self.num[i] if i < len(self.num) else ZERO
            for j in range(1, min(i, len(dexp) - 1) + 1):
                v = v - dexp[j] * out[i - j]
            out.append(v)
        return out[k]

    # -- evaluation

    def evaluate(self, svalue, v):
        """Numeric value at (s, V); works for float, complex or mpf inputs."""
        acc = 0 * v
        for c in reversed(self.num):
            acc = acc * v + c.evaluate(svalue)
        den = 1
        for alpha, e in self.den:
            den = den * (1 - alpha.evaluate(svalue) * v) ** e
        return acc / den

    def evaluate_fraction(self, svalue, v):
        """Exact value at rational (s, V)."""
        v = Fraction(v)
        acc = Fraction(0)
        for c in reversed(self.num):
            acc = acc * v + c.evaluate_fraction(svalue)
        den = Fraction(1)
        for alpha, e in self.den:
            den = den * (1 - alpha.evaluate_fraction(svalue) * v) ** e
        if den == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return acc / den

    def __repr__(self):
        n = _fmt_terms(self.num, self.var)
        if not self.den:
            return n
        parts = []
        for alpha, e in self.den:
            base = f"(1 - ({alpha!r})*{self.var})"
            parts.append(base + (f"^{e}" if e > 1 else ""))
        return f"({n})/" + "".join(parts)


def _fmt_terms(cs, var):
    if not cs:
        return "0"
    parts = []
    for i, c in enumerate(cs):
        if c.is_zero():
            continue
        if i == 0:
            parts.append(f"{c!r}")
        else:
            head = "" if c.is_one() else f"({c!r})*"
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(parts)


Z_ZERO = ZFunc.const(0)
Z_ONE = ZFunc.const(1)
Z_VAR = ZFunc.variable()
