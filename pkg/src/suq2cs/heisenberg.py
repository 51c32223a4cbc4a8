"""The quantum Heisenberg group, its dual oscillator algebra, and their
coherent states.

Exact layer over rational functions of the deformation parameter w: the
oscillator algebra with a central weight generator (creation, annihilation,
H, and group-like exponentials of H), the triangular function algebra dual
to it, Hopf structure and involutions on both sides, the duality pairing in
closed form, and power-series identities for coherent-state normalization.
Numeric layer: the Fock representation and the resolution of unity.

Group monomials x^k z^l y^m carry keys (k, l, m); moving z right past x
subtracts w per letter, moving z right past y subtracts w as well, and x, y
commute.  Oscillator monomials A+^k H^l A^m e^((t/2)wH) carry keys
(k, l, m, t); H and the exponentials are central, and reordering A past A+
spends the central commutator (e^(wH) - e^(-wH))/(2w).
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .scalars import Scalar


class WScalar(Scalar):
    """Rational function of the deformation parameter w."""

    var = "w"


W_ZERO = WScalar.from_int(0)
W_ONE = WScalar.from_int(1)
_WP = WScalar.s_power
_wint = WScalar.from_int
_wfrac = WScalar.from_fraction


def _wflip(c):
    """The coefficient with w replaced by -w."""
    num = tuple(v if i % 2 == 0 else -v for i, v in enumerate(c.num))
    den = tuple(v if i % 2 == 0 else -v for i, v in enumerate(c.den))
    return WScalar(num, den)


def _shift_pow(a, l):
    """Coefficients of (z + a*w)^l by ascending z power, a rational."""
    af = Fraction(a)
    return [
        _wfrac(Fraction(comb(l, i)) * af ** (l - i)) * _WP(l - i) for i in range(l + 1)
    ]


def _poly_mul(u, v):
    out = [W_ZERO] * (len(u) + len(v) - 1)
    for i, cu in enumerate(u):
        for j, cv in enumerate(v):
            out[i + j] = out[i + j] + cu * cv
    return out


class HeisenbergGrp:
    """Finite sum of x^k z^l y^m keyed by (k, l, m)."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            k, l, m = key
            if k < 0 or l < 0 or m < 0:
                raise ValueError("negative generator powers")
            if c.is_zero():
                continue
            data[key] = data[key] + c if key in data else c
        self.terms = {key: c for key, c in data.items() if not c.is_zero()}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([((0, 0, 0), W_ONE)])

    @classmethod
    def mono(cls, k, l, m, coeff=W_ONE):
        return cls([((k, l, m), coeff)])

    @classmethod
    def x(cls):
        return cls.mono(1, 0, 0)

    @classmethod
    def y(cls):
        return cls.mono(0, 0, 1)

    @classmethod
    def z(cls):
        return cls.mono(0, 1, 0)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, HeisenbergGrp):
            return NotImplemented
        data = dict(self.terms)
        for key, c in other.terms.items():
            data[key] = data[key] + c if key in data else c
        out = object.__new__(HeisenbergGrp)
        out.terms = {key: c for key, c in data.items() if not c.is_zero()}
        return out

    def __neg__(self):
        out = object.__new__(HeisenbergGrp)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, HeisenbergGrp):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = _wint(c)
        out = object.__new__(HeisenbergGrp)
        out.terms = {} if c.is_zero() else {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (WScalar, int)):
            return self.scale(other)
        if not isinstance(other, HeisenbergGrp):
            return NotImplemented
        items = []
        for (k1, l1, m1), c1 in self.terms.items():
            for (k2, l2, m2), c2 in other.terms.items():
                # x^k1 z^l1 y^m1 x^k2 z^l2 y^m2
                #   = x^(k1+k2) (z - k2 w)^l1 (z + m1 w)^l2 y^(m1+m2)
                zpoly = _poly_mul(_shift_pow(-k2, l1), _shift_pow(m1, l2))
                c = c1 * c2
                for j, cz in enumerate(zpoly):
                    items.append(((k1 + k2, j, m1 + m2), c * cz))
        return HeisenbergGrp(items)

    def __rmul__(self, other):
        if isinstance(other, (WScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        out = HeisenbergGrp.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HeisenbergGrp):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def counit(self):
        return self.terms.get((0, 0, 0), W_ZERO)

    def coproduct(self):
        out = GTensor.zero()
        for key, c in self.terms.items():
            out = out + _grp_mono_coproduct(key).scale(c)
        return out

    def antipode(self):
        """x -> -x, y -> -y, z -> -z + x y, reversing products."""
        out = HeisenbergGrp.zero()
        sx = HeisenbergGrp.x().scale(-1)
        sy = HeisenbergGrp.y().scale(-1)
        sz = _Z_REFLECTED()
        for (k, l, m), c in self.terms.items():
            out = out + (sy**m * sz**l * sx**k).scale(c)
        return out

    def star(self):
        """x* = -y, y* = -x, z* = -z + x y, reversing products."""
        out = HeisenbergGrp.zero()
        xs = HeisenbergGrp.y().scale(-1)
        ys = HeisenbergGrp.x().scale(-1)
        zs = _Z_REFLECTED()
        for (k, l, m), c in self.terms.items():
            out = out + (ys**m * zs**l * xs**k).scale(c)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, l, m) in sorted(self.terms):
            word = []
            if k:
                word.append("x" + (f"^{k}" if k > 1 else ""))
            if l:
                word.append("z" + (f"^{l}" if l > 1 else ""))
            if m:
                word.append("y" + (f"^{m}" if m > 1 else ""))
            head = "*".join(word) if word else "1"
            parts.append(f"({self.terms[(k, l, m)]!r})*{head}")
        return " + ".join(parts)


def _Z_REFLECTED():
    return HeisenbergGrp([((0, 1, 0), -W_ONE), ((1, 0, 1), W_ONE)])


class HeisenbergAlg:
    """Finite sum of A+^k H^l A^m e^((t/2)wH) keyed by (k, l, m, t)."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            k, l, m, t = key
            if k < 0 or l < 0 or m < 0:
                raise ValueError("negative ladder powers")
            if c.is_zero():
                continue
            data[key] = data[key] + c if key in data else c
        self.terms = {key: c for key, c in data.items() if not c.is_zero()}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([((0, 0, 0, 0), W_ONE)])

    @classmethod
    def mono(cls, k, l, m, t, coeff=W_ONE):
        return cls([((k, l, m, t), coeff)])

    @classmethod
    def raising(cls):
        return cls.mono(1, 0, 0, 0)

    @classmethod
    def lowering(cls):
        return cls.mono(0, 0, 1, 0)

    @classmethod
    def weight(cls):
        return cls.mono(0, 1, 0, 0)

    @classmethod
    def group_like(cls, t):
        """e^(c w H) with 2c = t."""
        return cls.mono(0, 0, 0, t)

    @classmethod
    def central_commutator(cls):
        """(e^(wH) - e^(-wH)) / (2w), the value of [A, A+]."""
        half = _wfrac(Fraction(1, 2)) * _WP(-1)
        return cls([((0, 0, 0, 2), half), ((0, 0, 0, -2), -half)])

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, HeisenbergAlg):
            return NotImplemented
        data = dict(self.terms)
        for key, c in other.terms.items():
            data[key] = data[key] + c if key in data else c
        out = object.__new__(HeisenbergAlg)
        out.terms = {key: c for key, c in data.items() if not c.is_zero()}
        return out

    def __neg__(self):
        out = object.__new__(HeisenbergAlg)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, HeisenbergAlg):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = _wint(c)
        out = object.__new__(HeisenbergAlg)
        out.terms = {} if c.is_zero() else {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (WScalar, int)):
            return self.scale(other)
        if not isinstance(other, HeisenbergAlg):
            return NotImplemented
        items = []
        for (k1, l1, m1, t1), c1 in self.terms.items():
            for (k2, l2, m2, t2), c2 in other.terms.items():
                c = c1 * c2
                for i in range(min(m1, k2) + 1):
                    base = c * _wint(comb(m1, i) * comb(k2, i) * factorial(i))
                    # the i-th power of the central commutator, expanded
                    for r in range(i + 1):
                        coeff = base * _wfrac(
                            Fraction((-1) ** (i - r) * comb(i, r), 2**i)
                        )
                        if i:
                            coeff = coeff * _WP(-i)
                        key = (
                            k1 + k2 - i,
                            l1 + l2,
                            m1 + m2 - i,
                            t1 + t2 + 4 * r - 2 * i,
                        )
                        items.append((key, coeff))
        return HeisenbergAlg(items)

    def __rmul__(self, other):
        if isinstance(other, (WScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        out = HeisenbergAlg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HeisenbergAlg):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def counit(self):
        out = W_ZERO
        for (k, l, m, t), c in self.terms.items():
            if k == 0 and l == 0 and m == 0:
                out = out + c
        return out

    def coproduct(self):
        out = ATensor.zero()
        for key, c in self.terms.items():
            out = out + _alg_mono_coproduct(key).scale(c)
        return out

    def antipode(self):
        """A -> -A, A+ -> -A+, H -> -H, exponentials inverted."""
        out = HeisenbergAlg.zero()
        for (k, l, m, t), c in self.terms.items():
            sign = -c if (k + l + m) % 2 else c
            w = HeisenbergAlg.mono(0, l, m, -t) * HeisenbergAlg.mono(k, 0, 0, 0)
            out = out + w.scale(sign)
        return out

    def star(self, conjugate_parameter=False):
        """A* = A+, A+* = A, H* = H, reversing products.

        With conjugate_parameter the involution also sends w to -w, which
        inverts the group-like exponentials.
        """
        items = []
        for (k, l, m, t), c in self.terms.items():
            if conjugate_parameter:
                items.append(((m, l, k, -t), _wflip(c)))
            else:
                items.append(((m, l, k, t), c))
        return HeisenbergAlg(items)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, l, m, t) in sorted(self.terms):
            word = []
            if k:
                word.append("A+" + (f"^{k}" if k > 1 else ""))
            if l:
                word.append("H" + (f"^{l}" if l > 1 else ""))
            if m:
                word.append("A" + (f"^{m}" if m > 1 else ""))
            if t:
                word.append(f"e^({Fraction(t, 2)}wH)")
            head = "*".join(word) if word else "1"
            parts.append(f"({self.terms[(k, l, m, t)]!r})*{head}")
        return " + ".join(parts)


class _Tensor:
    """Two-leg tensor with monomial keys in each leg."""

    __slots__ = ("terms",)
    legs = ()

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            if c.is_zero():
                continue
            data[key] = data[key] + c if key in data else c
        self.terms = {key: c for key, c in data.items() if not c.is_zero()}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, u, v):
        items = []
        for k1, c1 in u.terms.items():
            for k2, c2 in v.terms.items():
                items.append(((k1, k2), c1 * c2))
        return cls(items)

    def __add__(self, other):
        data = dict(self.terms)
        for key, c in other.terms.items():
            data[key] = data[key] + c if key in data else c
        out = object.__new__(type(self))
        out.terms = {key: c for key, c in data.items() if not c.is_zero()}
        return out

    def __sub__(self, other):
        return self + other.scale(-W_ONE)

    def scale(self, c):
        if isinstance(c, int):
            c = _wint(c)
        out = object.__new__(type(self))
        out.terms = {} if c.is_zero() else {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        cls = type(self)
        la, lb = cls.legs
        data = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                c = c1 * c2
                fa = la.mono(*a1) * la.mono(*a2)
                fb = lb.mono(*b1) * lb.mono(*b2)
                for ka, ca in fa.terms.items():
                    cca = c * ca
                    for kb, cb in fb.terms.items():
                        key = (ka, kb)
                        v = cca * cb
                        data[key] = data[key] + v if key in data else v
        out = object.__new__(cls)
        out.terms = {key: c for key, c in data.items() if not c.is_zero()}
        return out

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms


class GTensor(_Tensor):
    legs = (HeisenbergGrp, HeisenbergGrp)


class ATensor(_Tensor):
    legs = (HeisenbergAlg, HeisenbergAlg)


class KTensor(_Tensor):
    """Mixed tensor: group leg left, oscillator leg right."""

    legs = (HeisenbergGrp, HeisenbergAlg)


def _grp_mono_coproduct(key):
    k, l, m = key
    one = HeisenbergGrp.one()
    dx = GTensor.of(HeisenbergGrp.x(), one) + GTensor.of(one, HeisenbergGrp.x())
    dy = GTensor.of(HeisenbergGrp.y(), one) + GTensor.of(one, HeisenbergGrp.y())
    dz = (
        GTensor.of(HeisenbergGrp.z(), one)
        + GTensor.of(one, HeisenbergGrp.z())
        + GTensor.of(HeisenbergGrp.y(), HeisenbergGrp.x())
    )
    out = GTensor.of(one, one)
    for gen, count in ((dx, k), (dz, l), (dy, m)):
        for _ in range(count):
            out = out * gen
    return out


def _alg_mono_coproduct(key):
    k, l, m, t = key
    one = HeisenbergAlg.one()
    up = HeisenbergAlg.raising()
    dn = HeisenbergAlg.lowering()
    h = HeisenbergAlg.weight()
    dup = ATensor.of(up, HeisenbergAlg.group_like(1)) + ATensor.of(
        HeisenbergAlg.group_like(-1), up
    )
    ddn = ATensor.of(dn, HeisenbergAlg.group_like(1)) + ATensor.of(
        HeisenbergAlg.group_like(-1), dn
    )
    dh = ATensor.of(h, one) + ATensor.of(one, h)
    out = ATensor.of(HeisenbergAlg.group_like(t), HeisenbergAlg.group_like(t))
    for gen, count in ((ddn, m), (dh, l), (dup, k)):
        for _ in range(count):
            out = gen * out
    return out


# ---------------------------------------------------------------------------
# the pairing


def pair_term(key_g, key_u):
    """Closed-form pairing of one group monomial with one oscillator one.

    Writing the oscillator monomial over the dressed ladder generators
    e^(-wH/2)A+ and e^(wH/2)A concentrates all exponentials into a single
    central factor e^(c'wH) with c' = (t + k - m)/2, and the dressed basis
    is exactly dual to x^K z^L y^M / (K! L! M!).
    """
    bigk, bigl, bigm = key_g
    k, l, m, t = key_u
    if bigk != k or bigm != m or bigl < l:
        return W_ZERO
    e = bigl - l
    out = _wint(factorial(bigk) * factorial(bigm) * factorial(bigl) // factorial(e))
    if e:
        out = out * _wfrac(Fraction(t + k - m, 2) ** e) * _WP(e)
    return out


def pair(f, u):
    out = W_ZERO
    for key_g, ca in f.terms.items():
        for key_u, cu in u.terms.items():
            v = pair_term(key_g, key_u)
            if not v.is_zero():
                out = out + ca * cu * v
    return out


def dual_group_basis(k, l, m):
    """The group-side basis biorthogonal to the plain monomials A+^k H^l A^m:
    x^k/k! (z - (k-m)w/2)^l/l! y^m/m!."""
    items = []
    scale = _wfrac(Fraction(1, factorial(k) * factorial(l) * factorial(m)))
    for i, cz in enumerate(_shift_pow(-Fraction(k - m, 2), l)):
        items.append(((k, i, m), cz * scale))
    return HeisenbergGrp(items)


# ---------------------------------------------------------------------------
# the universal pairing kernel, truncated by group degree


def _ktrunc(t, maxdeg):
    out = object.__new__(KTensor)
    out.terms = {
        (ka, kb): c for (ka, kb), c in t.terms.items() if sum(ka) <= maxdeg
    }
    return out


def _kexp(arg, maxdeg):
    """exp of a mixed tensor whose group legs all have positive degree."""
    unit = KTensor.of(HeisenbergGrp.one(), HeisenbergAlg.one())
    out = unit
    power = unit
    fact = 1
    for n in range(1, maxdeg + 1):
        power = _ktrunc(power * arg, maxdeg)
        fact *= n
        out = out + power.scale(_wfrac(Fraction(1, fact)))
    return out


def pairing_kernel(maxdeg=3):
    """exp(x (x) e^(-wH/2)A+) exp(z (x) H) exp(y (x) e^(wH/2)A), truncated."""
    f1 = _kexp(KTensor.of(HeisenbergGrp.x(), HeisenbergAlg.mono(1, 0, 0, -1)), maxdeg)
    f2 = _kexp(KTensor.of(HeisenbergGrp.z(), HeisenbergAlg.weight()), maxdeg)
    f3 = _kexp(KTensor.of(HeisenbergGrp.y(), HeisenbergAlg.mono(0, 0, 1, 1)), maxdeg)
    return _ktrunc(_ktrunc(f1 * f2, maxdeg) * f3, maxdeg)


def _dressed(k, l, m):
    """e^(-wH/2)A+ to the k, H to the l, e^(wH/2)A to the m, as one monomial."""
    return HeisenbergAlg.mono(k, l, m, m - k)


def kernel_slice(f):
    """(id (x) <f, .>) applied to the full kernel.

    The kernel expands over group monomials tensor dressed ladder monomials,
    and a fixed f pairs nontrivially with only finitely many of the latter,
    so the slice is a finite exact sum even though the kernel is not.
    """
    out = HeisenbergGrp.zero()
    lmax = max((key[1] for key in f.terms), default=0)
    for k in {key[0] for key in f.terms}:
        for m in {key[2] for key in f.terms}:
            for l in range(lmax + 1):
                c = pair(f, _dressed(k, l, m))
                if not c.is_zero():
                    c = c * _wfrac(
                        Fraction(1, factorial(k) * factorial(l) * factorial(m))
                    )
                    out = out + HeisenbergGrp.mono(k, l, m, c)
    return out


def kernel_slice_star(f, conjugate_parameter=True):
    """The same slice through (* (x) *) of the kernel."""
    out = HeisenbergGrp.zero()
    lmax = max((key[1] for key in f.terms), default=0)
    for k in {key[2] for key in f.terms}:
        for m in {key[0] for key in f.terms}:
            for l in range(lmax + 1):
                c = pair(f, _dressed(k, l, m).star(conjugate_parameter))
                if not c.is_zero():
                    c = c * _wfrac(
                        Fraction(1, factorial(k) * factorial(l) * factorial(m))
                    )
                    out = out + HeisenbergGrp.mono(k, l, m).star().scale(c)
    return out


def check_kernel_inverse(probes=None):
    """The group antipode on one leg gives the two-sided inverse of the
    kernel: summed over coproduct legs of any probe, S(slice) times slice
    collapses to the counit."""
    bad = []
    for idx, f in enumerate(_grp_probes() if probes is None else probes):
        left = HeisenbergGrp.zero()
        right = HeisenbergGrp.zero()
        for (ka, kb), c in f.coproduct().terms.items():
            sa = kernel_slice(HeisenbergGrp.mono(*ka))
            sb = kernel_slice(HeisenbergGrp.mono(*kb))
            left = left + (sa.antipode() * sb).scale(c)
            right = right + (sa * sb.antipode()).scale(c)
        target = HeisenbergGrp.one().scale(f.counit())
        if left != target:
            bad.append(("left", idx))
        if right != target:
            bad.append(("right", idx))
    return bad


def kernel_star_defects(f, conjugate_parameter=True):
    """Slices of (* (x) *)(kernel) * kernel - unit and of the reversed
    product, for one probe."""
    left = HeisenbergGrp.zero()
    right = HeisenbergGrp.zero()
    for (ka, kb), c in f.coproduct().terms.items():
        fa = HeisenbergGrp.mono(*ka)
        fb = HeisenbergGrp.mono(*kb)
        left = left + (
            kernel_slice_star(fa, conjugate_parameter) * kernel_slice(fb)
        ).scale(c)
        right = right + (
            kernel_slice(fa) * kernel_slice_star(fb, conjugate_parameter)
        ).scale(c)
    target = HeisenbergGrp.one().scale(f.counit())
    return left - target, right - target


def check_kernel_star(probes=None):
    """Which involution convention makes the kernel star-unitary."""
    out = {"fixed": True, "conjugated": True}
    for f in _grp_probes() if probes is None else probes:
        for name, flag in (("fixed", False), ("conjugated", True)):
            left, right = kernel_star_defects(f, flag)
            if not (left.is_zero() and right.is_zero()):
                out[name] = False
    return out


# ---------------------------------------------------------------------------
# the three dimensional representation and the matrix group


def matrix_group():
    """The unitriangular coordinate matrix [[1, y, z], [0, 1, x], [0, 0, 1]]."""
    one = HeisenbergGrp.one()
    zero = HeisenbergGrp.zero()
    return [
        [one, HeisenbergGrp.y(), HeisenbergGrp.z()],
        [zero, one, HeisenbergGrp.x()],
        [zero, zero, one],
    ]


def _mat_mul3(a, b):
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(3)), start=W_ZERO)
            for j in range(3)
        ]
        for i in range(3)
    ]


def rep_matrix(u):
    """The nilpotent 3x3 representation: A+ and A hit the two superdiagonal
    slots, H the corner, exponentials expand exactly."""
    out = [[W_ZERO] * 3 for _ in range(3)]
    for (k, l, m, t), c in u.terms.items():
        mats = []
        for _ in range(k):
            mats.append(_E12)
        for _ in range(l):
            mats.append(_E02)
        for _ in range(m):
            mats.append(_E01)
        term = [[W_ONE if i == j else W_ZERO for j in range(3)] for i in range(3)]
        for mat in mats:
            term = _mat_mul3(term, mat)
        if t:
            expo = [[W_ONE if i == j else W_ZERO for j in range(3)] for i in range(3)]
            expo[0][2] = _wfrac(Fraction(t, 2)) * _WP(1)
            term = _mat_mul3(term, expo)
        for i in range(3):
            for j in range(3):
                out[i][j] = out[i][j] + c * term[i][j]
    return out


def _unit3(i, j):
    out = [[W_ZERO] * 3 for _ in range(3)]
    out[i][j] = W_ONE
    return out


_E01 = _unit3(0, 1)
_E02 = _unit3(0, 2)
_E12 = _unit3(1, 2)


def check_matrix_from_kernel(maxdeg=2):
    """Applying the 3x3 representation to the kernel's oscillator leg
    reproduces the coordinate matrix."""
    kern = pairing_kernel(maxdeg)
    out = [[HeisenbergGrp.zero() for _ in range(3)] for _ in range(3)]
    for (ka, kb), c in kern.terms.items():
        mat = rep_matrix(HeisenbergAlg.mono(*kb))
        for i in range(3):
            for j in range(3):
                if not mat[i][j].is_zero():
                    out[i][j] = out[i][j] + HeisenbergGrp.mono(*ka, coeff=c * mat[i][j])
    want = matrix_group()
    bad = []
    for i in range(3):
        for j in range(3):
            if out[i][j] != want[i][j]:
                bad.append((i, j))
    return bad


def check_matrix_group(rng, count=20):
    """The coordinate matrix generates a matrix quantum group: entrywise
    coproduct is matrix multiplication of tensor legs, counit is the
    identity pattern, and the antipode matrix is the two-sided inverse."""
    m = matrix_group()
    bad = []
    if m[0][1] != HeisenbergGrp.y() or m[0][2] != HeisenbergGrp.z():
        bad.append("entries")
    if m[1][2] != HeisenbergGrp.x():
        bad.append("entries")
    for i in range(3):
        for j in range(3):
            want = GTensor.zero()
            for k in range(3):
                want = want + GTensor.of(m[i][k], m[k][j])
            if m[i][j].coproduct() != want:
                bad.append(("coproduct", i, j))
            eps = m[i][j].counit()
            if eps != (W_ONE if i == j else W_ZERO):
                bad.append(("counit", i, j))
    sm = [[m[i][j].antipode() for j in range(3)] for i in range(3)]
    left = _mat_mul_grp(sm, m)
    right = _mat_mul_grp(m, sm)
    for i in range(3):
        for j in range(3):
            want = HeisenbergGrp.one() if i == j else HeisenbergGrp.zero()
            if left[i][j] != want or right[i][j] != want:
                bad.append(("antipode", i, j))
    return bad


def _mat_mul_grp(a, b):
    out = [[HeisenbergGrp.zero() for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def check_rep_pairing(rng, count=30):
    """Pairing the coordinate matrix entries against a monomial recovers its
    3x3 representation."""
    tmat = matrix_group()
    bad = []
    for case in range(count):
        key = (
            rng.randrange(3),
            rng.randrange(3),
            rng.randrange(3),
            rng.randrange(-2, 3),
        )
        u = HeisenbergAlg.mono(*key)
        mat = rep_matrix(u)
        for i in range(3):
            for j in range(3):
                if pair(tmat[i][j], u) != mat[i][j]:
                    bad.append((case, i, j))
    return bad


# ---------------------------------------------------------------------------
# structural checks: relations, Hopf axioms, involutions, duality


def random_grp(rng, max_terms=2, rational=True):
    items = []
    for _ in range(rng.randrange(1, max_terms + 1)):
        key = (rng.randrange(3), rng.randrange(3), rng.randrange(3))
        c = _wint(rng.choice([-2, -1, 1, 2]))
        if rational and rng.random() < 0.3:
            c = c * _wfrac(Fraction(1, rng.choice([2, 3]))) * _WP(rng.randrange(-1, 2))
        items.append((key, c))
    return HeisenbergGrp(items)


def random_alg(rng, max_terms=2, rational=True):
    items = []
    for _ in range(rng.randrange(1, max_terms + 1)):
        key = (
            rng.randrange(3),
            rng.randrange(3),
            rng.randrange(3),
            2 * rng.randrange(-2, 3),
        )
        c = _wint(rng.choice([-2, -1, 1, 2]))
        if rational and rng.random() < 0.3:
            c = c * _wfrac(Fraction(1, rng.choice([2, 3]))) * _WP(rng.randrange(-1, 2))
        items.append((key, c))
    return HeisenbergAlg(items)


def check_grp_relations(rng, count=30):
    x, y, z = HeisenbergGrp.x(), HeisenbergGrp.y(), HeisenbergGrp.z()
    bad = []
    if z * x != x * z - x.scale(_WP(1)):
        bad.append("zx")
    if y * z != z * y + y.scale(_WP(1)):
        bad.append("yz")
    if x * y != y * x:
        bad.append("xy")
    for i in range(count):
        f, g, h = (random_grp(rng) for _ in range(3))
        if (f * g) * h != f * (g * h):
            bad.append(("assoc", i))
    return bad


def check_alg_relations(rng, count=30):
    up = HeisenbergAlg.raising()
    dn = HeisenbergAlg.lowering()
    h = HeisenbergAlg.weight()
    sig = HeisenbergAlg.central_commutator()
    bad = []
    if dn * up - up * dn != sig:
        bad.append("ladder")
    for m in range(2, 5):
        lhs = dn**m * up - up * dn**m
        if lhs != (dn ** (m - 1) * sig).scale(m):
            bad.append(("ladder-power", m))
    if HeisenbergAlg.group_like(2) * HeisenbergAlg.group_like(-2) != HeisenbergAlg.one():
        bad.append("exp-inverse")
    for i in range(count):
        u = random_alg(rng)
        if h * u != u * h:
            bad.append(("central", i))
        v, uu = random_alg(rng), random_alg(rng)
        if (u * v) * uu != u * (v * uu):
            bad.append(("assoc", i))
    return bad


def _grp_probes():
    x, y, z = HeisenbergGrp.x(), HeisenbergGrp.y(), HeisenbergGrp.z()
    return [x, y, z, x * z, z * y, z * z, x * y * z]


def _alg_probes():
    up = HeisenbergAlg.raising()
    dn = HeisenbergAlg.lowering()
    h = HeisenbergAlg.weight()
    e2 = HeisenbergAlg.group_like(2)
    return [up, dn, h, e2, dn * up, up * dn, h * dn, up * h * dn * HeisenbergAlg.group_like(-2)]


def _check_hopf(cls, tensor_cls, probes, rng, count):
    """Coassociativity, counit and antipode axioms, and homomorphy of the
    coproduct, for either side of the pair."""
    bad = []
    one = cls.one()
    for idx, f in enumerate(probes):
        cop = f.coproduct()
        left, right = {}, {}
        eps_left = cls.zero()
        eps_right = cls.zero()
        s_left = cls.zero()
        s_right = cls.zero()
        for (ka, kb), c in cop.terms.items():
            for (k1, k2), c2 in cls.mono(*ka).coproduct().terms.items():
                key = (k1, k2, kb)
                left[key] = left.get(key, W_ZERO) + c * c2
            for (k1, k2), c2 in cls.mono(*kb).coproduct().terms.items():
                key = (ka, k1, k2)
                right[key] = right.get(key, W_ZERO) + c * c2
            eps_left = eps_left + cls.mono(*kb).scale(c * cls.mono(*ka).counit())
            eps_right = eps_right + cls.mono(*ka).scale(c * cls.mono(*kb).counit())
            s_left = s_left + (cls.mono(*ka).antipode() * cls.mono(*kb)).scale(c)
            s_right = s_right + (cls.mono(*ka) * cls.mono(*kb).antipode()).scale(c)
        left = {k: c for k, c in left.items() if not c.is_zero()}
        right = {k: c for k, c in right.items() if not c.is_zero()}
        if left != right:
            bad.append(("coassoc", idx))
        if eps_left != f or eps_right != f:
            bad.append(("counit", idx))
        target = one.scale(f.counit())
        if s_left != target or s_right != target:
            bad.append(("antipode", idx))
        if f.antipode().antipode() != f:
            bad.append(("antipode-squared", idx))
    rand = random_grp if cls is HeisenbergGrp else random_alg
    for i in range(count):
        f, g = rand(rng), rand(rng)
        if (f * g).coproduct() != f.coproduct() * g.coproduct():
            bad.append(("hom", i))
        if (f * g).counit() != f.counit() * g.counit():
            bad.append(("counit-hom", i))
    return bad


def check_grp_hopf(rng, count=10):
    return _check_hopf(HeisenbergGrp, GTensor, _grp_probes(), rng, count)


def check_alg_hopf(rng, count=6):
    return _check_hopf(HeisenbergAlg, ATensor, _alg_probes(), rng, count)


def check_grp_star(rng, count=25):
    x, y = HeisenbergGrp.x(), HeisenbergGrp.y()
    bad = []
    if x.star() != y.scale(-1) or y.star() != x.scale(-1):
        bad.append("table")
    if HeisenbergGrp.z().star() != _Z_REFLECTED():
        bad.append("table-z")
    for i in range(count):
        f, g = random_grp(rng), random_grp(rng)
        if (f * g).star() != g.star() * f.star():
            bad.append(("antihom", i))
        if f.star().star() != f:
            bad.append(("involution", i))
    return bad


def check_alg_star(rng, count=25):
    bad = []
    for flip in (False, True):
        if HeisenbergAlg.raising().star(flip) != HeisenbergAlg.lowering():
            bad.append(("table", flip))
        for i in range(count):
            u, v = random_alg(rng), random_alg(rng)
            if (u * v).star(flip) != v.star(flip) * u.star(flip):
                bad.append(("antihom", flip, i))
            if u.star(flip).star(flip) != u:
                bad.append(("involution", flip, i))
    return bad


def check_pairing_values():
    """Generator pairings and the biorthogonal bases."""
    bad = []
    cases = [
        ((1, 0, 0), (1, 0, 0, 0), W_ONE),
        ((0, 0, 1), (0, 0, 1, 0), W_ONE),
        ((0, 1, 0), (0, 1, 0, 0), W_ONE),
        ((0, 1, 0), (0, 0, 0, 2), _WP(1)),
        ((2, 0, 0), (2, 0, 0, 0), _wint(2)),
        ((0, 2, 0), (0, 1, 0, 0), W_ZERO),
        ((1, 1, 0), (1, 0, 0, 0), _wfrac(Fraction(1, 2)) * _WP(1)),
    ]
    for key_g, key_u, want in cases:
        if pair_term(key_g, key_u) != want:
            bad.append((key_g, key_u))
    if pair(HeisenbergGrp.z(), HeisenbergAlg.central_commutator()) != W_ONE:
        bad.append("central-commutator")
    return bad


def check_dual_bases(bound=2):
    bad = []
    rng_keys = [
        (k, l, m)
        for k in range(bound + 1)
        for l in range(bound + 1)
        for m in range(bound + 1)
    ]
    for ka in rng_keys:
        fa = dual_group_basis(*ka)
        for kb in rng_keys:
            want = W_ONE if ka == kb else W_ZERO
            if pair(fa, HeisenbergAlg.mono(kb[0], kb[1], kb[2], 0)) != want:
                bad.append((ka, kb))
    return bad


def check_duality_of_product(rng, count=20):
    """Pairing a product of functions against a monomial equals pairing the
    factors against its coproduct legs."""
    bad = []
    for i in range(count):
        f, g = random_grp(rng), random_grp(rng)
        u = random_alg(rng, max_terms=1)
        rhs = W_ZERO
        for key, c in u.terms.items():
            for (ka, kb), c2 in HeisenbergAlg.mono(*key).coproduct().terms.items():
                rhs = rhs + c * c2 * pair(f, HeisenbergAlg.mono(*ka)) * pair(
                    g, HeisenbergAlg.mono(*kb)
                )
        if pair(f * g, u) != rhs:
            bad.append(i)
    return bad


def check_duality_of_coproduct(rng, count=20):
    """Pairing a function against a product of monomials equals pairing its
    coproduct legs against the factors."""
    bad = []
    for i in range(count):
        f = random_grp(rng, max_terms=1)
        u, v = random_alg(rng), random_alg(rng)
        rhs = W_ZERO
        for key, c in f.terms.items():
            for (ka, kb), c2 in HeisenbergGrp.mono(*key).coproduct().terms.items():
                rhs = rhs + c * c2 * pair(HeisenbergGrp.mono(*ka), u) * pair(
                    HeisenbergGrp.mono(*kb), v
                )
        if pair(f, u * v) != rhs:
            bad.append(i)
    return bad


def check_pairing_structure_maps(rng, count=15):
    """Antipode and counit transported through the pairing."""
    bad = []
    for i in range(count):
        f = random_grp(rng)
        u = random_alg(rng)
        if pair(f.antipode(), u) != pair(f, u.antipode()):
            bad.append(("antipode", i))
        if pair(f, HeisenbergAlg.one()) != f.counit():
            bad.append(("counit-f", i))
        if pair(HeisenbergGrp.one(), u) != u.counit():
            bad.append(("counit-u", i))
    return bad


def check_star_pairing_convention(rng, count=15):
    """Which adjoint identity the involutions satisfy through the pairing."""
    out = {"fixed": True, "conjugated": True}
    for _ in range(count):
        f = random_grp(rng)
        u = random_alg(rng)
        lhs = pair(f.star(), u)
        if lhs != pair(f, u.antipode().star(False)):
            out["fixed"] = False
        if lhs != _wflip(pair(f, u.antipode().star(True))):
            out["conjugated"] = False
    return out


# ---------------------------------------------------------------------------
# classical limits at w = 0


def check_classical_group_product(rng, count=25):
    """At w = 0 the group multiplication is plain commutative merging."""
    bad = []
    for i in range(count):
        f, g = random_grp(rng, rational=False), random_grp(rng, rational=False)
        prod = f * g
        got = {
            key: c.evaluate_fraction(0)
            for key, c in prod.terms.items()
            if c.evaluate_fraction(0)
        }
        want = {}
        for (k1, l1, m1), c1 in f.terms.items():
            for (k2, l2, m2), c2 in g.terms.items():
                key = (k1 + k2, l1 + l2, m1 + m2)
                v = c1.evaluate_fraction(0) * c2.evaluate_fraction(0)
                want[key] = want.get(key, Fraction(0)) + v
        want = {key: v for key, v in want.items() if v}
        if got != want:
            bad.append(i)
    return bad


def check_classical_pairing(bound=3):
    """At w = 0 the pairing collapses to the undeformed factorial pairing."""
    bad = []
    for bigk in range(bound + 1):
        for bigl in range(bound + 1):
            for k in range(bound + 1):
                for l in range(bound + 1):
                    for t in (0, 2):
                        val = pair_term((bigk, bigl, 0), (k, l, 0, t))
                        got = val.evaluate_fraction(0)
                        want = (
                            Fraction(factorial(bigk) * factorial(bigl))
                            if (bigk, bigl) == (k, l)
                            else Fraction(0)
                        )
                        if got != want:
                            bad.append((bigk, bigl, k, l, t))
    return bad


def check_classical_commutator(bound=4):
    """Paired against any function, the central commutator tends to H."""
    bad = []
    sig = HeisenbergAlg.central_commutator()
    h = HeisenbergAlg.weight()
    for bigl in range(bound + 1):
        f = HeisenbergGrp.mono(0, bigl, 0)
        got = pair(f, sig).evaluate_fraction(0)
        want = pair(f, h).evaluate_fraction(0)
        if got != want:
            bad.append(bigl)
    return bad


# ---------------------------------------------------------------------------
# coherent-state normalization as exact power series in the weight p


def _ser_mul(u, v, order):
    out = [HeisenbergGrp.zero() for _ in range(order + 1)]
    for i, ui in enumerate(u):
        if ui.is_zero():
            continue
        for j in range(order + 1 - i):
            if not v[j].is_zero():
                out[i + j] = out[i + j] + ui * v[j]
    return out


def _ser_exp(arg, order):
    out = [HeisenbergGrp.one()] + [HeisenbergGrp.zero()] * order
    power = list(out)
    fact = 1
    for n in range(1, order + 1):
        power = _ser_mul(power, arg, order)
        fact *= n
        inv = _wfrac(Fraction(1, fact))
        for i in range(order + 1):
            out[i] = out[i] + power[i].scale(inv)
    return out


def _gauss_series(sign, order):
    """(1 - e^(-2pw))/(2w) for sign -1, (e^(2pw) - 1)/(2w) for sign +1,
    as coefficients of powers of p."""
    out = [W_ZERO]
    for n in range(1, order + 1):
        c = _wfrac(Fraction(sign ** (n - 1) * 2 ** (n - 1), factorial(n)))
        out.append(c * _WP(n - 1))
    return out


def check_cs_product_identities(order=5):
    """exp(p z*) exp(p z) = exp(-kappa x* x) with kappa = (e^(2pw)-1)/(2w),
    and the reversed product with (1 - e^(-2pw))/(2w)."""
    zero = HeisenbergGrp.zero()
    ez = _ser_exp([zero, HeisenbergGrp.z()] + [zero] * (order - 1), order)
    ezs = _ser_exp([zero, HeisenbergGrp.z().star()] + [zero] * (order - 1), order)
    xs_x = HeisenbergGrp.x().star() * HeisenbergGrp.x()
    bad = []
    for sign, left, right in ((1, ezs, ez), (-1, ez, ezs)):
        lhs = _ser_mul(left, right, order)
        arg = [xs_x.scale(-c) for c in _gauss_series(sign, order)]
        rhs = _ser_exp(arg, order)
        for n in range(order + 1):
            if lhs[n] != rhs[n]:
                bad.append((sign, n))
    return bad


# ---------------------------------------------------------------------------
# Fock representation and the resolution of unity (numeric)


def kappa_plus(p, w):
    return (math.exp(2 * p * w) - 1) / (2 * w)


def kappa_minus(p, w):
    return (1 - math.exp(-2 * p * w)) / (2 * w)


def fock_ops(p, w, trunc):
    """Annihilation, creation and weight matrices on the truncated Fock space."""
    kap = math.sinh(w * p) / w
    n = np.arange(trunc)
    a = np.zeros((trunc, trunc))
    a[n[:-1], n[1:]] = np.sqrt(n[1:] * kap)
    return a, a.T.copy(), p * np.eye(trunc)


def fock_commutator_defect(p, w, trunc=40):
    """Deviation of [A, A+] from sinh(wp)/w on the interior of the truncation."""
    a, ad, _ = fock_ops(p, w, trunc)
    c = a @ ad - ad @ a
    want = (math.sinh(w * p) / w) * np.eye(trunc)
    return float(np.max(np.abs((c - want)[: trunc - 1, : trunc - 1])))


def coherent_vector(xi, p, w, trunc=40):
    """Fock components of the coherent state with classical amplitude xi."""
    kp = kappa_plus(p, w)
    n = np.arange(trunc)
    logfact = np.cumsum(np.concatenate(([0.0], np.log(np.arange(1, trunc)))))
    amp = (math.sqrt(kp) * xi) ** n / np.exp(0.5 * logfact)
    return math.exp(-kp * abs(xi) ** 2 / 2) * amp


def coherent_eigen_defect(xi, p, w, trunc=40):
    """The coherent state is an eigenvector of A with eigenvalue
    xi sqrt(kappa sinh(wp)/w), up to truncation."""
    a, _, _ = fock_ops(p, w, trunc)
    v = coherent_vector(xi, p, w, trunc)
    lam = xi * math.sqrt(kappa_plus(p, w) * math.sinh(w * p) / w)
    return float(np.linalg.norm(a @ v - lam * v))


def resolution_matrix(p, w, trunc=40, radial=400, theta=256, umax=200.0):
    """Gram matrix of the coherent family against the invariant measure
    (1 - e^(-2pw))/(2 pi w) r dr dtheta; the identity when the resolution
    of unity holds."""
    kp = kappa_plus(p, w)
    km = kappa_minus(p, w)
    rmax = math.sqrt(umax / km)
    xs, ws = np.polynomial.legendre.leggauss(radial)
    r = 0.5 * rmax * (xs + 1.0)
    wr = 0.5 * rmax * ws
    n = np.arange(trunc)
    logfact = np.cumsum(np.concatenate(([0.0], np.log(np.arange(1, trunc)))))
    # radial profiles kappa^(n/2) e^(-npw) r^n e^(-kappa' r^2/2) / sqrt(n!)
    base = math.sqrt(kp) * math.exp(-p * w)
    with np.errstate(divide="ignore"):
        logs = np.log(np.outer(np.ones(trunc), r)) * n[:, None]
    logs += n[:, None] * math.log(base) - 0.5 * logfact[:, None]
    prof = np.exp(logs - 0.5 * km * r[None, :] ** 2)
    rad = (prof * (wr * r)[None, :]) @ prof.T
    thetas = np.linspace(0.0, 2 * math.pi, theta, endpoint=False)
    phase = np.exp(1j * np.outer(n, thetas))
    ang = (phase @ phase.conj().T) * (2 * math.pi / theta)
    return (km / math.pi) * rad * ang


def resolution_defect(p, w, trunc=40, radial=400, theta=256, umax=200.0):
    m = resolution_matrix(p, w, trunc, radial, theta, umax)
    return float(np.max(np.abs(m - np.eye(trunc))))
