"""Noncommutative function algebra on the deformed group manifold.

Elements are finite sums of normal-ordered words x^k E^n y^m (k, m >= 0,
n any integer, never x and y together) with a rational function of the
central-for-nothing but well-behaved coordinate zeta attached on the
RIGHT of the word.  Moving a coefficient right across any single letter
substitutes zeta -> q^2 zeta (q^-2 for inverse letters), which keeps the
coefficient ring closed under multiplication.

The commutation rules are E x = q^-1 x E, E y = q^-1 y E, x y = y x, and
the mixed normal form x E^n y = -q^(n+1) E^(n+2) zeta.
"""

from __future__ import annotations

from .scalars import ONE, Scalar
from .zfunc import Z_ONE, Z_VAR, ZFunc

_QP = Scalar.q_power


def _migrated(coeff, t):
    """Move a coefficient right across a word of signed letter count t."""
    if t == 0 or coeff.is_zero():
        return coeff
    return coeff.scale_var(_QP(2 * t))


def _reduce_key(k, n, m):
    """Normal-order a word with both x and y powers; returns (key, ZFunc)."""
    extra = Z_ONE
    while k > 0 and m > 0:
        extra = extra * ZFunc([0, -_QP(n + 1) * _QP(2 * (m - 1))])
        k, n, m = k - 1, n + 2, m - 1
    return (k, n, m), extra


class AlgElement:
    """Finite sum of x^k E^n y^m r(zeta) keyed by (k, n, m)."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (k, n, m), coeff in items:
            if k < 0 or m < 0:
                raise ValueError("negative x or y powers")
            if coeff.is_zero():
                continue
            key, extra = _reduce_key(k, n, m)
            if not extra.is_one():
                coeff = coeff * extra
            if key in data:
                data[key] = data[key] + coeff
            else:
                data[key] = coeff
        self.terms = {key: c for key, c in data.items() if not c.is_zero()}

    # -- constructors

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([((0, 0, 0), Z_ONE)])

    @classmethod
    def from_coeff(cls, coeff):
        if isinstance(coeff, (Scalar, int)):
            coeff = ZFunc.const(coeff)
        return cls([((0, 0, 0), coeff)])

    @classmethod
    def word(cls, k, n, m, coeff=Z_ONE):
        return cls([((k, n, m), coeff)])

    @classmethod
    def x(cls):
        return cls.word(1, 0, 0)

    @classmethod
    def y(cls):
        return cls.word(0, 0, 1)

    @classmethod
    def e_power(cls, n):
        return cls.word(0, n, 0)

    @classmethod
    def zeta(cls):
        return cls.from_coeff(Z_VAR)

    # -- predicates and access

    def is_zero(self):
        return not self.terms

    def coeff_of(self, key):
        return self.terms.get(key, ZFunc.const(0))

    def support(self):
        return sorted(self.terms)

    def as_coeff(self):
        """The coefficient of the empty word; element must have no other."""
        if not self.terms:
            return ZFunc.const(0)
        if set(self.terms) != {(0, 0, 0)}:
            raise ValueError("element is not a function of zeta alone")
        return self.terms[(0, 0, 0)]

    def counit(self):
        """Evaluation at the group identity: x, y -> 0, E -> 1, zeta -> 0."""
        out = Scalar.from_int(0)
        for (k, n, m), r in self.terms.items():
            if k == 0 and m == 0:
                out = out + r.constant_coeff()
        return out

    # -- ring operations

    def __add__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        data = dict(self.terms)
        for key, c in other.terms.items():
            data[key] = data[key] + c if key in data else c
        out = object.__new__(AlgElement)
        out.terms = {key: c for key, c in data.items() if not c.is_zero()}
        return out

    def __neg__(self):
        out = object.__new__(AlgElement)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Multiply every coefficient by a constant Scalar."""
        if isinstance(c, int):
            c = Scalar.from_int(c)
        out = object.__new__(AlgElement)
        out.terms = {}
        if not c.is_zero():
            out.terms = {key: r.scale(c) for key, r in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if isinstance(other, ZFunc):
            other = AlgElement.from_coeff(other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        items = []
        for (k1, n1, m1), r1 in self.terms.items():
            for (k2, n2, m2), r2 in other.terms.items():
                t2 = k2 + n2 + m2
                coeff = _migrated(r1, t2) * r2
                pref = m1 * n2 - n1 * k2
                if pref:
                    coeff = coeff.scale(_QP(pref))
                items.append(((k1 + k2, n1 + n2, m1 + m2), coeff))
        return AlgElement(items)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if isinstance(other, ZFunc):
            return AlgElement.from_coeff(other) * self
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = AlgElement.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Inverse of a single term E^n r(zeta); anything else raises."""
        if len(self.terms) != 1:
            raise ValueError("only single-term elements invert")
        ((k, n, m), r), = self.terms.items()
        if k or m:
            raise ValueError("words containing x or y are not invertible")
        return AlgElement([((0, -n, 0), r.inverse().scale_var(_QP(-2 * n)))])

    def __truediv__(self, other):
        if isinstance(other, AlgElement):
            return self * other.inverse()
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    # -- star and antipode

    def star(self):
        """Conjugate-linear antihomomorphism fixing zeta."""
        out = AlgElement.zero()
        for (k, n, m), r in self.terms.items():
            w = AlgElement.from_coeff(r)
            if m:
                w = w * _star_power("y", m)
            if n:
                w = w * _star_power("E", n)
            if k:
                w = w * _star_power("x", k)
            out = out + w
        return out

    def antipode(self):
        """Antihomomorphism with S(x) = y*, S(y) = x*, S(E) = E*."""
        out = AlgElement.zero()
        for (k, n, m), r in self.terms.items():
            w = AlgElement.from_coeff(r)
            if m:
                w = w * _star_power("x", m)
            if n:
                w = w * _star_power("E", n)
            if k:
                w = w * _star_power("y", k)
            out = out + w
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, n, m) in sorted(self.terms):
            word = []
            if k:
                word.append("x" + (f"^{k}" if k > 1 else ""))
            if n:
                word.append("E" + (f"^{n}" if n != 1 else ""))
            if m:
                word.append("y" + (f"^{m}" if m > 1 else ""))
            head = "*".join(word) if word else "1"
            parts.append(f"{head}*({self.terms[(k, n, m)]!r})")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# distinguished elements

_ELEMENTS = {}


def _named(name, build):
    if name not in _ELEMENTS:
        _ELEMENTS[name] = build()
    return _ELEMENTS[name]


def x_star():
    """x* = -q^-2 E^-2 y (1 - q^-2 zeta)^-1."""
    return _named(
        "x*",
        lambda: AlgElement.word(0, -2, 1, ZFunc.from_product(-_QP(-2), [(_QP(-2), -1)])),
    )


def y_star():
    """y* = -q^2 x E^-2 (1 - q^-2 zeta)^-1."""
    return _named(
        "y*",
        lambda: AlgElement.word(1, -2, 0, ZFunc.from_product(-_QP(2), [(_QP(-2), -1)])),
    )


def e_star():
    """E* = E^-1 (1 - q^-2 zeta)^-1, the inverse of E(1 - zeta)."""
    return _named(
        "E*", lambda: AlgElement.word(0, -1, 0, ZFunc.from_product(1, [(_QP(-2), -1)]))
    )


def e_star_inv():
    """(E*)^-1 = E (1 - zeta)."""
    return _named("E*^-1", lambda: AlgElement.word(0, 1, 0, ZFunc([1, -1])))


def _star_power(letter, n):
    """(letter*)^n with negative E powers sent to (E*)^-1 powers."""
    if letter == "E":
        base = e_star() if n > 0 else e_star_inv()
        key = ("E*", n > 0, abs(n))
        n = abs(n)
    else:
        base = x_star() if letter == "x" else y_star()
        key = (letter + "*", True, n)
    if key not in _ELEMENTS:
        _ELEMENTS[key] = base ** n
    return _ELEMENTS[key]


def gauss_a():
    """a = E(1 - zeta)."""
    return e_star_inv()


def gauss_b():
    """b = q^(1/2) x E^-1."""
    return _named("b", lambda: AlgElement.word(1, -1, 0, ZFunc.const(Scalar.s_power(1))))


def gauss_c():
    """c = q^(-1/2) E^-1 y."""
    return _named("c", lambda: AlgElement.word(0, -1, 1, ZFunc.const(Scalar.s_power(-1))))


def gauss_d():
    """d = E^-1."""
    return _named("d", lambda: AlgElement.e_power(-1))


def gauss_a_inv():
    """a^-1 = E^-1 (1 - q^-2 zeta)^-1."""
    return e_star()


def gauss_d_inv():
    """d^-1 = E."""
    return _named("d^-1", lambda: AlgElement.e_power(1))


def qshifted_element(shift, count, ratio=2):
    """prod_{i=0}^{count-1} (1 - q^(shift + ratio*i) zeta) as a coefficient."""
    return ZFunc.from_product(1, [(_QP(shift + ratio * i), 1) for i in range(count)])


# ---------------------------------------------------------------------------
# random elements for property suites


def random_element(rng, max_terms=2):
    """Small random element; occasionally with a standard inverse factor."""
    items = []
    for _ in range(rng.randint(1, max_terms)):
        if rng.random() < 0.5:
            k, m = rng.randint(0, 2), 0
        else:
            k, m = 0, rng.randint(0, 2)
        n = rng.randint(-2, 2)
        num = [Scalar.from_int(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))]
        coeff = ZFunc(num)
        if rng.random() < 0.3:
            coeff = coeff * ZFunc.from_product(1, [(_QP(2 * rng.randint(-1, 1)), -1)])
        items.append(((k, n, m), coeff))
    return AlgElement(items)


# ---------------------------------------------------------------------------
# identity checks


def check_slq2_relations():
    """Commutation table and determinant of the Gauss matrix letters."""
    a, b, c, d = gauss_a(), gauss_b(), gauss_c(), gauss_d()
    qi = _QP(-1)
    rels = {
        "ab": a * b - (b * a).scale(qi),
        "ac": a * c - (c * a).scale(qi),
        "bd": b * d - (d * b).scale(qi),
        "cd": c * d - (d * c).scale(qi),
        "bc": b * c - c * b,
        "ad-da": a * d - d * a - (b * c).scale(qi - _QP(1)),
        "det": a * d - (b * c).scale(qi) - AlgElement.one(),
    }
    return [name for name, el in rels.items() if not el.is_zero()]


def check_unitarity_relations():
    """Star table of the Gauss letters and both matrix unitarity products."""
    a, b, c, d = gauss_a(), gauss_b(), gauss_c(), gauss_d()
    one = AlgElement.one()
    rels = {
        "a*": a.star() - d,
        "b*": b.star() - c.scale(-_QP(-1)),
        "c*": c.star() - b.scale(-_QP(1)),
        "d*": d.star() - a,
        "row1": a * a.star() + b * b.star() - one,
        "col1": a.star() * a + c.star() * c - one,
        "offdiag": a.star() * b + c.star() * d,
    }
    return [name for name, el in rels.items() if not el.is_zero()]


def check_star_formulas():
    """The engine star of each generator equals its closed form."""
    rels = {
        "x*": AlgElement.x().star() - x_star(),
        "y*": AlgElement.y().star() - y_star(),
        "E*": AlgElement.e_power(1).star() - e_star(),
        "zeta*": AlgElement.zeta().star() - AlgElement.zeta(),
        "x**": x_star().star() - AlgElement.x(),
        "y**": y_star().star() - AlgElement.y(),
        "E**": e_star().star() - AlgElement.e_power(1),
    }
    return [name for name, el in rels.items() if not el.is_zero()]


def check_antipode_table():
    """Antipode on the Gauss letters, generators, and the embedded route."""
    a, b, c, d = gauss_a(), gauss_b(), gauss_c(), gauss_d()
    rels = {
        "S(a)": a.antipode() - d,
        "S(b)": b.antipode() - b.scale(-_QP(1)),
        "S(c)": c.antipode() - c.scale(-_QP(-1)),
        "S(d)": d.antipode() - a,
        "S(x)": AlgElement.x().antipode() - y_star(),
        "S(y)": AlgElement.y().antipode() - x_star(),
        "S(E)": AlgElement.e_power(1).antipode() - gauss_a_inv(),
        "S(x) via b": AlgElement.x().antipode()
        - (gauss_a_inv() * b).scale(-Scalar.s_power(1)),
    }
    return [name for name, el in rels.items() if not el.is_zero()]


def check_zeta_word(r_max=4):
    """zeta^r = (-q)^r x^r E^(-2r) y^r."""
    bad = []
    for r in range(1, r_max + 1):
        lhs = AlgElement.from_coeff(Z_VAR ** r)
        rhs = AlgElement.word(r, -2 * r, r).scale((-_QP(1)) ** r)
        if lhs != rhs:
            bad.append(r)
    return bad


def check_ez_products(two_j_max=6):
    """Closed forms for (E(1-zeta))^N E^-N and (E*)^N E^N."""
    bad = []
    a, estar = gauss_a(), e_star()
    for n in range(1, two_j_max + 1):
        lhs = a ** n * AlgElement.e_power(-n)
        rhs = AlgElement.from_coeff(qshifted_element(-2 * n, n))
        if lhs != rhs:
            bad.append(("descending", n))
        lhs2 = estar ** n * AlgElement.e_power(n)
        rhs2 = AlgElement.from_coeff(
            ZFunc.from_product(1, [(_QP(2 * i), -1) for i in range(n)])
        )
        if lhs2 != rhs2:
            bad.append(("ascending", n))
        lhs3 = AlgElement.e_power(-n) * (AlgElement.e_power(-n).star())
        if lhs3 != AlgElement.from_coeff(qshifted_element(0, n)):
            bad.append(("outer", n))
    return bad


def check_xxstar_products(n_max=6):
    """(x*)^n x^n and x^n (x*)^n as rational functions of zeta."""
    bad = []
    xel, xs = AlgElement.x(), x_star()
    for n in range(1, n_max + 1):
        lhs = xs ** n * xel ** n
        num = [0] * n + [_QP(n * (n - 2))]
        rhs = AlgElement.from_coeff(
            ZFunc(num, [(_QP(2 * i), 1) for i in range(n)])
        )
        if lhs != rhs:
            bad.append(("left", n))
        lhs2 = xel ** n * xs ** n
        num2 = [0] * n + [_QP(-n * (n + 2))]
        rhs2 = AlgElement.from_coeff(
            ZFunc(num2, [(_QP(-2 * i), 1) for i in range(1, n + 1)])
        )
        if lhs2 != rhs2:
            bad.append(("right", n))
    return bad


def check_xxstar_commutation():
    """Cleared forms of the exchange relation between x x* and x* x."""
    xel, xs = AlgElement.x(), x_star()
    xxs = xel * xs
    xsx = xs * xel
    om = _QP(1) - _QP(-1)
    one = AlgElement.one()
    r1 = xxs * (one + xsx.scale(om)) - xsx.scale(_QP(-2))
    r2 = xsx * (one - xxs.scale(_QP(2) * om)) - xxs.scale(_QP(2))
    out = []
    if not r1.is_zero():
        out.append("first")
    if not r2.is_zero():
        out.append("second")
    return out


def check_cs_word_shift(j2_max=6, n_max=4):
    """E^-2j x^n = q^(2jn) x^n E^-2j."""
    bad = []
    for two_j in range(1, j2_max + 1):
        for n in range(n_max + 1):
            lhs = AlgElement.e_power(-two_j) * AlgElement.x() ** n
            rhs = (AlgElement.x() ** n * AlgElement.e_power(-two_j)).scale(_QP(two_j * n))
            if lhs != rhs:
                bad.append((two_j, n))
    return bad
