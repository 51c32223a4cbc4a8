"""Spin representations, the representation T-matrix, and coherent states.

Vectors in (function algebra) x (spin space) carry one radical
combination per weight: a dict mapping a square-free tuple of q-integer
atoms to an algebra element, so ladder square roots fold exactly and
norms, overlaps and resolutions come out rational.  The T-matrix is the
spin image of the universal exponential: a raising triangle over x, the
diagonal E^(2m), and a lowering triangle over y, with basic-factorial
denominators.  Basis vectors are ordered low weight first.
"""

from __future__ import annotations

from .funcalg import (
    AlgElement,
    gauss_a,
    gauss_b,
    gauss_c,
    gauss_d,
)
from .qanalysis import basic_factorial, q_binomial, q_number, sqrt_q_binomial
from .scalars import ONE, RAD_ZERO, RadicalScalar, Scalar, ZERO
from .zfunc import ZFunc

_QP = Scalar.q_power
_SP = Scalar.s_power


def spin_qnum(two_m):
    """[m]_q for half-integer m given as 2m."""
    return (_SP(two_m) - _SP(-two_m)) / (_QP(1) - _QP(-1))


def _ladder_radical(a, b):
    """sqrt([a] [b]), with the two atoms possibly equal."""
    counts = {a: 1}
    counts[b] = counts.get(b, 0) + 1
    return RadicalScalar(ONE, counts)


# ---------------------------------------------------------------------------
# radical combinations: {atoms tuple: AlgElement}


def _rc_clean(d):
    return {a: el for a, el in d.items() if not el.is_zero()}

def _rc_single(rad, el):
    if rad.is_zero() or el.is_zero():
        return {}
    return {rad.atoms: el.scale(rad.u)}

def _rc_add(d1, d2):
    out = dict(d1)
    for a, el in d2.items():
        out[a] = out[a] + el if a in out else el
    return _rc_clean(out)

def _rc_scale(d, c):
    return _rc_clean({a: el.scale(c) for a, el in d.items()})

def _rc_lmul(d, f):
    return _rc_clean({a: f * el for a, el in d.items()})

def _rc_mul_rad(d, rad):
    out = {}
    for a, el in d.items():
        r = RadicalScalar._make(ONE, a) * rad
        if r.is_zero():
            continue
        piece = el.scale(r.u)
        out[r.atoms] = out[r.atoms] + piece if r.atoms in out else piece
    return _rc_clean(out)

def _rc_mul(d1, d2):
    out = {}
    for a1, e1 in d1.items():
        for a2, e2 in d2.items():
            r = RadicalScalar._make(ONE, a1) * RadicalScalar._make(ONE, a2)
            piece = (e1 * e2).scale(r.u)
            out[r.atoms] = out[r.atoms] + piece if r.atoms in out else piece
    return _rc_clean(out)

def _rc_star(d):
    return {a: el.star() for a, el in d.items()}

def _rc_as_element(d):
    """Collapse to a plain element; the radical must have cancelled."""
    d = _rc_clean(d)
    if not d:
        return AlgElement.zero()
    if set(d) != {()}:
        raise ValueError("radical part did not cancel")
    return d[()]


class CSVector:
    """Element of (function algebra) x (spin-j space), low weight first."""

    __slots__ = ("two_j", "comps")

    def __init__(self, two_j, comps):
        self.two_j = two_j
        self.comps = [_rc_clean(c) for c in comps]

    @classmethod
    def zero(cls, two_j):
        return cls(two_j, [{} for _ in range(two_j + 1)])

    @classmethod
    def coherent(cls, two_j):
        """sum_n q^(nj) qbinom(2j, n)^(1/2) x^n E^(-2j) |j, -j+n>."""
        comps = []
        for n in range(two_j + 1):
            rad = sqrt_q_binomial(two_j, n) * _SP(n * two_j)
            comps.append(_rc_single(rad, AlgElement.word(n, -two_j, 0)))
        return cls(two_j, comps)

    def __add__(self, other):
        if other.two_j != self.two_j:
            raise ValueError("mixed spins")
        return CSVector(
            self.two_j,
            [_rc_add(a, b) for a, b in zip(self.comps, other.comps)],
        )

    def scale(self, c):
        return CSVector(self.two_j, [_rc_scale(d, c) for d in self.comps])

    def lmul(self, f):
        """Multiply every coefficient by f from the left."""
        return CSVector(self.two_j, [_rc_lmul(d, f) for d in self.comps])

    def ket_jp(self):
        out = [{} for _ in range(self.two_j + 1)]
        for n in range(self.two_j):
            rad = _ladder_radical(self.two_j - n, n + 1)
            out[n + 1] = _rc_mul_rad(self.comps[n], rad)
        return CSVector(self.two_j, out)

    def ket_jm(self):
        out = [{} for _ in range(self.two_j + 1)]
        for n in range(1, self.two_j + 1):
            rad = _ladder_radical(n, self.two_j - n + 1)
            out[n - 1] = _rc_mul_rad(self.comps[n], rad)
        return CSVector(self.two_j, out)

    def ket_weight_power(self, c):
        """q^(c J0) on the spin leg."""
        return CSVector(
            self.two_j,
            [
                _rc_scale(d, _SP(c * (2 * n - self.two_j)))
                for n, d in enumerate(self.comps)
            ],
        )

    def ket_qnum_weight(self):
        """[J0]_q on the spin leg."""
        return CSVector(
            self.two_j,
            [
                _rc_scale(d, spin_qnum(2 * n - self.two_j))
                for n, d in enumerate(self.comps)
            ],
        )

    def __eq__(self, other):
        return self.two_j == other.two_j and self.comps == other.comps

    __hash__ = None

    def is_zero(self):
        return all(not d for d in self.comps)


def overlap_state(bra, ket):
    """<bra|ket> as an algebra element; radicals must cancel."""
    if bra.two_j != ket.two_j:
        raise ValueError("mixed spins")
    out = AlgElement.zero()
    for db, dk in zip(bra.comps, ket.comps):
        out = out + _rc_as_element(_rc_mul(_rc_star(db), dk))
    return out


# ---------------------------------------------------------------------------
# the T-matrix of a spin representation


def _flip(mat):
    return [row[::-1] for row in mat[::-1]]


def t_matrix(two_j):
    """Matrix of the universal exponential, rows and columns from the
    highest weight down, so spin 1/2 is the familiar [[a, b], [c, d]]."""
    dim = two_j + 1
    fplus = [[{} for _ in range(dim)] for _ in range(dim)]
    fminus = [[{} for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for ip in range(i, dim):
            k = ip - i
            counts = {}
            for r in range(k):
                for atom in (two_j - i - r, i + r + 1):
                    counts[atom] = counts.get(atom, 0) + 1
            u = _SP(k * two_j - 2 * k * i - k * (k - 1)) / basic_factorial(
                k, _QP(-2)
            )
            fplus[ip][i] = _rc_single(
                RadicalScalar(u, counts), AlgElement.word(k, 0, 0)
            )
        for c in range(i, dim):
            m = c - i
            counts = {}
            for r in range(i, c):
                for atom in (r + 1, two_j - r):
                    counts[atom] = counts.get(atom, 0) + 1
            u = _SP(-m * two_j + (i + c - 1) * (c - i)) / basic_factorial(
                m, _QP(2)
            )
            fminus[i][c] = _rc_single(
                RadicalScalar(u, counts), AlgElement.word(0, 0, m)
            )
    out = [[{} for _ in range(dim)] for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            acc = {}
            for i in range(dim):
                if not fplus[a][i] or not fminus[i][b]:
                    continue
                mid = _rc_lmul(fminus[i][b], AlgElement.e_power(2 * i - two_j))
                acc = _rc_add(acc, _rc_mul(fplus[a][i], mid))
            out[a][b] = acc
    return _flip(out)


def urep(u, two_j):
    """Spin-j matrix of an enveloping-algebra element, radical entries."""
    dim = two_j + 1

    def matmul(p, r):
        return [
            [
                sum((p[i][k] * r[k][j] for k in range(dim)), RAD_ZERO)
                for j in range(dim)
            ]
            for i in range(dim)
        ]

    jp = [[RAD_ZERO] * dim for _ in range(dim)]
    jm = [[RAD_ZERO] * dim for _ in range(dim)]
    j0 = [[RAD_ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        if i + 1 < dim:
            rad = _ladder_radical(two_j - i, i + 1)
            jp[i + 1][i] = rad
            jm[i][i + 1] = rad
        j0[i][i] = RadicalScalar.from_scalar(_half_scalar(2 * i - two_j))
    out = [[RAD_ZERO] * dim for _ in range(dim)]
    for (k, l, m, t), coeff in u.terms.items():
        acc = [[RAD_ZERO] * dim for _ in range(dim)]
        for i in range(dim):
            e = t * (2 * i - two_j)
            if e % 2:
                raise ValueError("half-integer s power in the spin matrix")
            acc[i][i] = RadicalScalar.from_scalar(_SP(e // 2))
        for mat, count in ((jm, m), (j0, l), (jp, k)):
            for _ in range(count):
                acc = matmul(mat, acc)
        for i in range(dim):
            for jcol in range(dim):
                out[i][jcol] = out[i][jcol] + acc[i][jcol] * coeff
    return _flip(out)


def _half_scalar(two_m):
    from fractions import Fraction

    return Scalar.from_fraction(Fraction(two_m, 2))


# ---------------------------------------------------------------------------
# checks


def check_t_fundamental():
    t = t_matrix(1)
    want = [
        [{(): gauss_a()}, {(): gauss_b()}],
        [{(): gauss_c()}, {(): gauss_d()}],
    ]
    return [] if t == want else ["fundamental"]


def check_t_unitary(two_j):
    t = t_matrix(two_j)
    dim = two_j + 1
    bad = []
    for a in range(dim):
        for b in range(dim):
            left = {}
            right = {}
            for c in range(dim):
                left = _rc_add(left, _rc_mul(_rc_star(t[c][a]), t[c][b]))
                right = _rc_add(right, _rc_mul(t[a][c], _rc_star(t[b][c])))
            want = {(): AlgElement.one()} if a == b else {}
            if left != want:
                bad.append(("t*t", a, b))
            if right != want:
                bad.append(("tt*", a, b))
    return bad


def check_t_pairing(two_j):
    """Pairing of T entries against the spin matrices, entry by entry."""
    from .duality import UElement, pair

    probes = [
        UElement.jp(),
        UElement.jm(),
        UElement.j0(),
        UElement.group_like(2),
        UElement.jp() * UElement.jm(),
        UElement.jp() ** 2,
    ]
    t = t_matrix(two_j)
    dim = two_j + 1
    bad = []
    for w, u in enumerate(probes):
        mats = urep(u, two_j)
        for a in range(dim):
            for b in range(dim):
                acc = {}
                for atoms, el in t[a][b].items():
                    v = pair(el, u)
                    if not v.is_zero():
                        acc[atoms] = acc.get(atoms, ZERO) + v
                acc = {at: v for at, v in acc.items() if not v.is_zero()}
                if len(acc) > 1:
                    bad.append(("mixed-radical", w, a, b))
                    continue
                got = RAD_ZERO
                for at, v in acc.items():
                    got = RadicalScalar._make(v, at)
                if got != mats[a][b]:
                    bad.append((w, a, b))
    return bad


def check_cs_from_t(two_j):
    """The coherent state is the lowest-weight column of the T-matrix."""
    t = t_matrix(two_j)
    cs = CSVector.coherent(two_j)
    return [
        n
        for n in range(two_j + 1)
        if t[two_j - n][two_j] != cs.comps[n]
    ]


def check_cs_norm(two_j):
    cs = CSVector.coherent(two_j)
    got = overlap_state(cs, cs)
    return [] if got == AlgElement.one() else ["norm"]


def norm_series_numeric(two_j, qv, zv):
    """Norm as a terminating basic series times the factored exponentials."""
    from .qanalysis import q_shifted_numeric

    q2 = qv * qv
    a = qv ** (-2.0 * two_j)
    total = 0.0
    for n in range(two_j + 1):
        term = (-1.0) ** n * qv ** (n * (n - 1))
        term *= q_shifted_numeric(a, q2, n) / q_shifted_numeric(q2, q2, n)
        term /= q_shifted_numeric(a * zv, q2, n)
        total += term * zv**n
    return q_shifted_numeric(a * zv, q2, two_j) * total


def check_resolution(two_j):
    """(2j+1)_{q^2} H on the coherent projector gives the identity matrix."""
    from .haar import haar_state
    from .qanalysis import basic_number

    cs = CSVector.coherent(two_j)
    norm = basic_number(two_j + 1, _QP(2))
    bad = []
    for n in range(two_j + 1):
        for m in range(two_j + 1):
            entry = _rc_mul(cs.comps[n], _rc_star(cs.comps[m]))
            val = ZERO
            for atoms, el in entry.items():
                h = haar_state(el)
                if h.is_zero():
                    continue
                if atoms:
                    bad.append(("radical", n, m))
                    continue
                val = val + h
            want = ONE / norm if n == m else ZERO
            if val != want:
                bad.append((n, m))
    return bad


def check_cs_actions(two_j):
    """Ladder and weight actions against their closed forms."""
    cs = CSVector.coherent(two_j)
    bad = []
    jp_want = [{} for _ in range(two_j + 1)]
    jm_want = [{} for _ in range(two_j + 1)]
    j0_want = [{} for _ in range(two_j + 1)]
    for n in range(two_j + 1):
        base = sqrt_q_binomial(two_j, n)
        if n >= 1:
            rad = base * (_SP((n - 1) * two_j) * q_number(n))
            jp_want[n] = _rc_single(rad, AlgElement.word(n - 1, -two_j, 0))
        if n <= two_j - 1:
            rad = base * (_SP((n + 1) * two_j) * q_number(two_j - n))
            jm_want[n] = _rc_single(rad, AlgElement.word(n + 1, -two_j, 0))
        rad = base * (_SP(n * two_j) * spin_qnum(2 * n - two_j))
        j0_want[n] = _rc_single(rad, AlgElement.word(n, -two_j, 0))
    if cs.ket_jp().comps != jp_want:
        bad.append("raise")
    if cs.ket_jm().comps != jm_want:
        bad.append("lower")
    if cs.ket_qnum_weight().comps != j0_want:
        bad.append("weight")
    return bad


def check_cs_annihilation(two_j):
    """J- + (1+q^(2j)) x [J0] - q^(2j) x^2 J+ kills the coherent state."""
    cs = CSVector.coherent(two_j)
    x = AlgElement.x()
    out = cs.ket_jm()
    out = out + cs.ket_qnum_weight().lmul(x).scale(ONE + _SP(2 * two_j))
    out = out + cs.ket_jp().lmul(x * x).scale(-_SP(2 * two_j))
    return [] if out.is_zero() else ["annihilation"]


def check_gamma_eigenvalue(two_j):
    """The dressed weight-ladder combination has eigenvalue -q^(-j) [j]."""
    cs = CSVector.coherent(two_j)
    qj, qmj = _SP(two_j), _SP(-two_j)
    coeff0 = AlgElement.from_coeff(ZFunc([ONE, -(qj + qmj)]))
    coeff_p = AlgElement.from_coeff(ZFunc([ONE, -qj])) * AlgElement.x()
    coeff_m = AlgElement.word(0, -2, 1).scale(_SP(-two_j - 2))
    out = cs.ket_qnum_weight().ket_weight_power(1).lmul(coeff0)
    out = out + cs.ket_jp().ket_weight_power(1).lmul(coeff_p).scale(-ONE)
    out = out + cs.ket_jm().ket_weight_power(1).lmul(coeff_m)
    want = cs.scale(-qmj * spin_qnum(two_j))
    return [] if out == want else ["eigenvalue"]


def check_overlap(two_j):
    """Overlap legs against the factored closed form, term by term."""
    astar = gauss_a() ** two_j
    from .funcalg import x_star

    bad = []
    for n in range(two_j + 1):
        word = AlgElement.word(n, -two_j, 0)
        if word.star() != astar * x_star() ** n:
            bad.append(("bra-leg", n))
        lhs = AlgElement.e_power(-two_j) * AlgElement.word(n, 0, 0)
        if lhs != word.scale(_SP(2 * n * two_j)):
            bad.append(("ket-leg", n))
        rad2 = sqrt_q_binomial(two_j, n) * _SP(n * two_j)
        rad2 = rad2 * rad2
        if rad2.atoms or rad2.u * _SP(-2 * n * two_j) != q_binomial(two_j, n):
            bad.append(("coefficient", n))
    return bad


# ---------------------------------------------------------------------------
# classical limit


def classical_monomials(el, qv):
    """Monomial coefficients with letters treated as commuting, at numeric q."""
    s = qv**0.5
    out = {}
    for (k, n, m), r in el.terms.items():
        for p, c in enumerate(r.polynomial_coeffs()):
            if c.is_zero():
                continue
            key = (k + p, n - 2 * p, m + p)
            val = c.evaluate(s) * (-qv) ** p
            out[key] = out.get(key, 0.0) + val
    return {key: v for key, v in out.items() if abs(v) > 1e-15}


def check_t_classical(qv=1.0 - 1e-4, tol=1e-3):
    """Fundamental T-matrix against the commuting exponential at q near 1."""
    t = t_matrix(1)
    want = [
        [{(0, 1, 0): 1.0, (1, -1, 1): 1.0}, {(1, -1, 0): 1.0}],
        [{(0, -1, 1): 1.0}, {(0, -1, 0): 1.0}],
    ]
    bad = []
    for a in range(2):
        for b in range(2):
            got = {}
            for atoms, el in t[a][b].items():
                if atoms:
                    bad.append(("radical", a, b))
                    continue
                for key, v in classical_monomials(el, qv).items():
                    got[key] = got.get(key, 0.0) + v
            target = want[a][b]
            keys = set(got) | set(target)
            if any(abs(got.get(kk, 0.0) - target.get(kk, 0.0)) > tol for kk in keys):
                bad.append((a, b))
    return bad
