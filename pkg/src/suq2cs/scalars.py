"""Exact scalar arithmetic over the rational functions QQ(s).

The deformation parameter is kept as s with q = s**2, so half-integer
powers of q stay polynomial.  Coefficients are plain Python ints in
ascending order; canonical form has coprime numerator/denominator and a
positive leading denominator coefficient.  Square roots of q-integer
products are tracked symbolically by RadicalScalar and never extracted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# ---------------------------------------------------------------------------
# integer polynomial helpers (tuples of ints, ascending powers)


def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _idiv(a, k):
    return tuple(c // k for c in a)


def _prem(a, b):
    """Pseudo-remainder of a by b; exact over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while True:
        while r and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if dr < db:
            return tuple(r)
        c = r[-1]
        r = [lb * t for t in r]
        shift = dr - db
        for k in range(db + 1):
            r[shift + k] -= c * b[k]


def _pgcd(a, b):
    """Primitive-PRS gcd, normalized primitive with positive leading coeff."""
    a, b = _trim(a), _trim(b)
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return ()
        a = _idiv(a, _content(a))
        return a if a[-1] > 0 else _pneg(a)
    a = _idiv(a, _content(a))
    b = _idiv(b, _content(b))
    while b:
        r = _prem(a, b)
        if r:
            r = _idiv(r, _content(r))
        a, b = b, r
    return a if a[-1] > 0 else _pneg(a)


def _pdivexact(a, b):
    """Exact quotient a/b; raises if the division leaves a remainder."""
    a, b = _trim(a), _trim(b)
    if not a:
        return ()
    if len(b) == 1:
        k = b[0]
        if any(c % k for c in a):
            raise ArithmeticError("inexact constant division")
        return tuple(c // k for c in a)
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = r[len(b) - 1 + i]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        q[i] = c
        if c:
            for k in range(len(b)):
                r[k + i] -= c * b[k]
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _reduce_pair(a, b):
    """Cancel the common factor of a and b (content and polynomial part)."""
    if not a or not b:
        return a, b
    c = math.gcd(_content(a), _content(b))
    if c > 1:
        a, b = _idiv(a, c), _idiv(b, c)
    g = _pgcd(a, b)
    if len(g) > 1 or g[0] != 1:
        a, b = _pdivexact(a, g), _pdivexact(b, g)
    return a, b


def _phorner(a, x):
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


class Scalar:
    """Rational function of one variable with integer coefficients."""

    __slots__ = ("num", "den")
    var = "s"

    def __init__(self, num, den=(1,)):
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        num, den = _reduce_pair(num, den)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        s = object.__new__(cls)
        s.num, s.den = num, den
        return s

    # -- constructors

    @classmethod
    def from_int(cls, k):
        return cls._raw((k,) if k else (), (1,))

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        n = f.numerator
        return cls._raw((n,) if n else (), (f.denominator,))

    @classmethod
    def s_power(cls, k):
        """The monomial s**k for any integer k."""
        if k >= 0:
            return cls._raw((0,) * k + (1,), (1,))
        return cls._raw((1,), (0,) * (-k) + (1,))

    @classmethod
    def q_power(cls, h):
        """q**h = s**(2h) for h with integral 2h."""
        e = Fraction(h) * 2
        if e.denominator != 1:
            raise ValueError(f"q**{h} is not a power of s")
        return cls.s_power(e.numerator)

    # -- predicates

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # -- arithmetic

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return type(self)(_padd(self.num, other.num), self.den)
        return type(self)(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)._raw(_pneg(self.num), self.den)

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if not self.num or not other.num:
            return type(self)._raw((), (1,))
        n1, d2 = _reduce_pair(self.num, other.den)
        n2, d1 = _reduce_pair(other.num, self.den)
        num, den = _pmul(n1, n2), _pmul(d1, d2)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return type(self)._raw(num, den)

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        if not self.num:
            return type(self)._raw((), (1,))
        n1, n2 = _reduce_pair(self.num, other.num)
        d1, d2 = _reduce_pair(self.den, other.den)
        num, den = _pmul(n1, d2), _pmul(d1, n2)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return type(self)._raw(num, den)

    def inverse(self):
        return type(self)._raw((1,), (1,)) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = type(self)._raw((1,), (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation

    def evaluate(self, x):
        """Numeric value at var = x (float)."""
        d = _phorner(self.den, x)
        return _phorner(self.num, x) / d

    def evaluate_fraction(self, x):
        """Exact value at a rational point."""
        x = Fraction(x)
        d = _phorner(self.den, x)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return _phorner(self.num, x) / d

    def sign_at_generic(self):
        """Sign of the function on a generic point of (0, 1)."""
        if not self.num:
            return 0
        for pt in (Fraction(57, 64), Fraction(23, 32), Fraction(11, 13), Fraction(5, 7)):
            v = self.evaluate_fraction(pt)
            if v:
                return 1 if v > 0 else -1
        raise ArithmeticError("could not resolve sign")

    def __repr__(self):
        n = _fmt_poly(self.num, self.var)
        if self.den == (1,):
            return n
        return f"({n})/({_fmt_poly(self.den, self.var)})"


def _fmt_poly(cs, var):
    if not cs:
        return "0"
    parts = []
    for i, c in enumerate(cs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else "-" if c == -1 else str(c) + "*"
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    out = " + ".join(parts).replace("+ -", "- ")
    return out


ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)


def qint_scalar(k):
    """The q-integer [k] = (q**k - q**-k)/(q - q**-1) as a Scalar."""
    if k < 0:
        return -qint_scalar(-k)
    if k == 0:
        return ZERO
    num = [0] * (4 * (k - 1) + 1)
    for i in range(k):
        num[4 * i] = 1
    return Scalar._raw(_trim(num), (0,) * (2 * (k - 1)) + (1,))


class RadicalScalar:
    """u * sqrt(prod [k]) with u a Scalar and the radicand square-free.

    Radicands are kept factored over q-integer atoms, so products of
    square roots collapse exactly without any polynomial root finding.
    """

    __slots__ = ("u", "atoms")

    def __init__(self, u, counts=None):
        atoms = []
        if u.is_zero():
            self.u, self.atoms = ZERO, ()
            return
        if counts:
            for k in sorted(counts):
                e = counts[k]
                if k < 0:
                    raise ValueError("negative q-integer under a radical")
                if e == 0 or k == 1:
                    continue
                if k == 0:
                    self.u, self.atoms = ZERO, ()
                    return
                half, odd = divmod(e, 2)
                if half:
                    u = u * qint_scalar(k) ** half
                if odd:
                    atoms.append(k)
        self.u = u
        self.atoms = tuple(atoms)

    @classmethod
    def from_scalar(cls, u):
        return cls(u)

    @classmethod
    def sqrt_qint(cls, k):
        return cls(ONE, {k: 1})

    def radicand(self):
        """The square-free part prod [k] as a Scalar."""
        v = ONE
        for k in self.atoms:
            v = v * qint_scalar(k)
        return v

    def is_zero(self):
        return self.u.is_zero()

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return RadicalScalar._make(self.u * other, self.atoms)
        counts = {k: 1 for k in self.atoms}
        for k in other.atoms:
            counts[k] = counts.get(k, 0) + 1
        return RadicalScalar(self.u * other.u, counts)

    __rmul__ = __mul__

    @classmethod
    def _make(cls, u, atoms):
        r = object.__new__(cls)
        if u.is_zero():
            r.u, r.atoms = ZERO, ()
        else:
            r.u, r.atoms = u, atoms
        return r

    def __neg__(self):
        return RadicalScalar._make(-self.u, self.atoms)

    def __add__(self, other):
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.atoms != other.atoms:
            raise ValueError("cannot add radicals with different radicands")
        return RadicalScalar._make(self.u + other.u, self.atoms)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = RadicalScalar.from_scalar(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.atoms == other.atoms:
            return self.u == other.u
        if self.u * self.u * self.radicand() != other.u * other.u * other.radicand():
            return False
        return self.u.sign_at_generic() == other.u.sign_at_generic()

    def square(self):
        return self.u * self.u * self.radicand()

    def evaluate(self, s):
        val = self.u.evaluate(s)
        for k in self.atoms:
            val *= math.sqrt(qint_scalar(k).evaluate(s))
        return val

    def __repr__(self):
        if not self.atoms:
            return repr(self.u)
        rad = "*".join(f"[{k}]" for k in self.atoms)
        return f"({self.u!r})*sqrt({rad})"


RAD_ZERO = RadicalScalar.from_scalar(ZERO)
RAD_ONE = RadicalScalar.from_scalar(ONE)


class LambdaPoly:
    """Polynomial in the logarithm L = log q with Scalar coefficients.

    Pairings against powers of the Cartan generator land here; in every
    identity we verify the L-degree collapses to zero, but the container
    keeps the bookkeeping honest.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, sc):
        return cls((sc,))

    @classmethod
    def lam(cls):
        return cls((ZERO, ONE))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def scalar_part(self):
        """The constant coefficient, asserting L-degree zero."""
        if len(self.coeffs) > 1:
            raise ValueError("nonzero log-degree")
        return self.coeffs[0] if self.coeffs else ZERO

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] + c
        return LambdaPoly(a)

    def __neg__(self):
        return LambdaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return LambdaPoly(())
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return LambdaPoly(out)

    def scale(self, sc):
        return LambdaPoly(tuple(c * sc for c in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = LambdaPoly.const(other)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, s):
        lam = 2.0 * math.log(s)
        return sum(c.evaluate(s) * lam**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"({c!r})*L^{i}" if i else repr(c) for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts)


@dataclass(frozen=True)
class NumericConfig:
    """Shared knobs for the sampled-numeric side of every check."""

    q: Fraction = Fraction(7, 10)
    tol: float = 1e-10
    trunc: int = 8
    seed: int = 0

    @property
    def s_value(self):
        return math.sqrt(float(self.q))
