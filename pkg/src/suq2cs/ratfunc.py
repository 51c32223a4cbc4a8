"""Rational functions of one variable over an arbitrary coefficient field.

Coefficients only need the usual arithmetic dunders plus is_zero/is_one
and inverse(), so these towers nest: rational functions of Z over Scalar,
and rational functions of Z2 over those again for two-leg tensors.
Canonical form: monic denominator, gcd-reduced by field Euclid.
"""

from __future__ import annotations


class Field:
    """Zero/one exemplars of a coefficient field.

    `probe`, when set, maps coefficients to exact rationals (a partial
    homomorphism; it may raise ZeroDivisionError) and lets reductions
    certify coprimality without running the full Euclid.
    """

    __slots__ = ("zero", "one", "probe")

    def __init__(self, zero, one, probe=None):
        self.zero = zero
        self.one = one
        self.probe = probe


def _trimf(cs):
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return tuple(cs[:n])


def _fadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _trimf(out)


def _fneg(a):
    return tuple(-c for c in a)


def _fmul(a, b, zero):
    if not a or not b:
        return ()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _trimf(out)


def _fscale(a, c):
    return _trimf([t * c for t in a])


def _frem(a, b):
    lb_inv = b[-1].inverse()
    r = list(a)
    db = len(b) - 1
    while True:
        while r and r[-1].is_zero():
            r.pop()
        if len(r) - 1 < db:
            return _trimf(r)
        c = r[-1] * lb_inv
        shift = len(r) - 1 - db
        for k in range(db + 1):
            r[shift + k] = r[shift + k] - c * b[k]
        r.pop()


def _fdivexact(a, b, zero):
    if not a:
        return ()
    lb_inv = b[-1].inverse()
    q = [zero] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(q) - 1, -1, -1):
        c = r[len(b) - 1 + i] * lb_inv
        q[i] = c
        if not c.is_zero():
            for k in range(len(b)):
                r[k + i] = r[k + i] - c * b[k]
    if any(not t.is_zero() for t in r):
        raise ArithmeticError("inexact division")
    return _trimf(q)


def _fgcd(a, b):
    # keep remainders monic; unnormalized Euclid piles up huge coefficients
    a, b = _trimf(a), _trimf(b)
    while b:
        r = _frem(a, b)
        if r and not r[-1].is_one():
            r = _fscale(r, r[-1].inverse())
        a, b = b, r
    if a and not a[-1].is_one():
        a = _fscale(a, a[-1].inverse())
    return a


def _probe_coprime(field, a, b):
    """True only when a and b are certainly coprime.

    Evaluating the coefficients at a rational point maps the pair to
    Q[T].  When both degrees survive, the image of a common factor
    keeps its degree too, so a coprime image certifies the originals.
    """
    probe = field.probe
    if probe is None:
        return False
    try:
        av = [probe(c) for c in a]
        bv = [probe(c) for c in b]
    except ZeroDivisionError:
        return False
    if not av[-1] or not bv[-1]:
        return False
    while bv:
        lead = bv[-1]
        db = len(bv) - 1
        r = list(av)
        while len(r) - 1 >= db:
            c = r[-1] / lead
            off = len(r) - 1 - db
            for k in range(db):
                r[off + k] -= c * bv[k]
            r.pop()
            while r and not r[-1]:
                r.pop()
        av, bv = bv, r
    return len(av) == 1


def _maybe_gcd(field, a, b):
    """gcd of two coefficient tuples, with the cheap certificates first."""
    if len(a) == 1 or len(b) == 1:
        return (field.one,)
    if _probe_coprime(field, a, b):
        return (field.one,)
    return _fgcd(a, b)


class RatFunc:
    """num/den with monic den, reduced; coefficients live in self.field."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None):
        self.field = field
        num = _trimf(num)
        den = _trimf(den) if den is not None else (field.one,)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (field.one,)
            return
        g = _maybe_gcd(field, num, den)
        if len(g) > 1:
            num = _fdivexact(num, g, field.zero)
            den = _fdivexact(den, g, field.zero)
        if not den[-1].is_one():
            inv = den[-1].inverse()
            num, den = _fscale(num, inv), _fscale(den, inv)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, field, num, den):
        r = object.__new__(cls)
        r.field, r.num, r.den = field, num, den
        return r

    # -- constructors

    @classmethod
    def const(cls, field, c):
        return cls._raw(field, (c,) if not c.is_zero() else (), (field.one,))

    @classmethod
    def var(cls, field):
        return cls._raw(field, (field.zero, field.one), (field.one,))

    @classmethod
    def zero(cls, field):
        return cls._raw(field, (), (field.one,))

    @classmethod
    def one(cls, field):
        return cls._raw(field, (field.one,), (field.one,))

    # -- predicates

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.den == (self.field.one,) and len(self.num) == 1 and self.num[0].is_one()

    def is_polynomial(self):
        return len(self.den) == 1

    def constant_coeff(self):
        """Value at var = 0; den must not vanish there."""
        d = self.den[0]
        if d.is_zero():
            raise ZeroDivisionError("pole at the origin")
        n = self.num[0] if self.num else self.field.zero
        return n * d.inverse()

    # -- arithmetic

    def __add__(self, other):
        f = self.field
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RatFunc(f, _fadd(self.num, other.num), self.den)
        num = _fadd(_fmul(self.num, other.den, f.zero), _fmul(other.num, self.den, f.zero))
        if len(_maybe_gcd(f, self.den, other.den)) == 1:
            # coprime denominators: the sum is already reduced
            num = _trimf(num)
            if not num:
                return RatFunc.zero(f)
            return RatFunc._raw(f, num, _fmul(self.den, other.den, f.zero))
        return RatFunc(f, num, _fmul(self.den, other.den, f.zero))

    def __neg__(self):
        return RatFunc._raw(self.field, _fneg(self.num), self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if not self.num or not other.num:
            return RatFunc.zero(f)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g = _maybe_gcd(f, n1, d2)
        if len(g) > 1:
            n1 = _fdivexact(n1, g, f.zero)
            d2 = _fdivexact(d2, g, f.zero)
        g = _maybe_gcd(f, n2, d1)
        if len(g) > 1:
            n2 = _fdivexact(n2, g, f.zero)
            d1 = _fdivexact(d1, g, f.zero)
        # cross-reduced factors leave nothing for the product to cancel
        num = _fmul(n1, n2, f.zero)
        den = _fmul(d1, d2, f.zero)
        if not den[-1].is_one():
            inv = den[-1].inverse()
            num, den = _fscale(num, inv), _fscale(den, inv)
        return RatFunc._raw(f, num, den)

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        c = self.num[-1].inverse()
        return RatFunc._raw(
            self.field, _fscale(self.den, c), _fscale(self.num, c)
        )

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- substitutions

    def scale_coeffs(self, c):
        """Multiply by a base-field constant c."""
        if c.is_zero():
            return RatFunc.zero(self.field)
        return RatFunc._raw(self.field, _fscale(self.num, c), self.den)

    def map_coeffs(self, fn):
        """Apply a field automorphism coefficientwise."""
        return RatFunc._raw(self.field, _trimf([fn(c) for c in self.num]), tuple(fn(c) for c in self.den))

    def scale_var(self, c):
        """Substitute var -> c*var for invertible c."""
        f = self.field
        num, den = list(self.num), list(self.den)
        p = f.one
        for i in range(1, max(len(num), len(den))):
            p = p * c
            if i < len(num):
                num[i] = num[i] * p
            if i < len(den):
                den[i] = den[i] * p
        return RatFunc(f, num, den)

    def mobius(self, a, b, c, d):
        """Substitute var -> (a*var + b)/(c*var + d)."""
        f = self.field
        up = (b, a)
        dn = (d, c)
        n = max(len(self.num), len(self.den)) - 1
        pow_up = [(f.one,)]
        pow_dn = [(f.one,)]
        for _ in range(n):
            pow_up.append(_fmul(pow_up[-1], up, f.zero))
            pow_dn.append(_fmul(pow_dn[-1], dn, f.zero))

        def homog(cs):
            out = ()
            for i, ci in enumerate(cs):
                if not ci.is_zero():
                    out = _fadd(out, _fscale(_fmul(pow_up[i], pow_dn[n - i], f.zero), ci))
            return out

        return RatFunc(f, homog(self.num), homog(self.den))

    def series_coeff(self, k):
        """Taylor coefficient at the origin of order k."""
        f = self.field
        d0 = self.den[0]
        if d0.is_zero():
            raise ZeroDivisionError("pole at the origin")
        inv = d0.inverse()
        cs = []
        for i in range(k + 1):
            acc = self.num[i] if i < len(self.num) else f.zero
            for j in range(1, min(i, len(self.den) - 1) + 1):
                acc = acc - self.den[j] * cs[i - j]
            cs.append(acc * inv)
        return cs[k]

    def evaluate(self, x):
        """Evaluate at a field element x."""
        f = self.field

        def horner(cs):
            acc = f.zero
            for c in reversed(cs):
                acc = acc * x + c
            return acc

        return horner(self.num) * horner(self.den).inverse()

    def evaluate_numeric(self, z, s):
        """Float value at var = z with the base variable at s."""
        def horner(cs):
            acc = 0.0
            for c in reversed(cs):
                acc = acc * z + c.evaluate(s)
            return acc

        d = horner(self.den)
        return horner(self.num) / d

    def __repr__(self):
        def fmt(cs):
            if not cs:
                return "0"
            return " + ".join(f"({c!r})*Z^{i}" if i else f"({c!r})" for i, c in enumerate(cs) if not c.is_zero())

        if self.den == (self.field.one,):
            return fmt(self.num)
        return f"[{fmt(self.num)}] / [{fmt(self.den)}]"


def ratfunc_field(base):
    """The field of rational functions over `base`, as a Field."""
    f = Field(None, None)
    f.zero = RatFunc._raw(f, (), (base.one,))
    f.one = RatFunc._raw(f, (base.one,), (base.one,))
    return f
