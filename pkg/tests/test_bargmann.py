"""Holomorphic realization: inner product, operators, hermiticity."""

import math
import random
from fractions import Fraction

import pytest

from suq2cs.bargmann import (
    basis_vector,
    check_commutator,
    check_hermiticity,
    check_ladder_action,
    check_monomial_integrals,
    check_orthonormal,
    inner,
    op_j0,
    op_jm,
    op_jp,
)
from suq2cs.csrep import _ladder_radical
from suq2cs.funcalg import AlgElement, gauss_a
from suq2cs.haar import haar_state_numeric
from suq2cs.scalars import ONE, RadicalScalar, Scalar, ZERO

QV = 0.7
SV = math.sqrt(QV)


@pytest.mark.parametrize("two_j", [1, 2, 3, 4, 5, 6])
def test_monomial_integrals_closed_form(two_j):
    assert check_monomial_integrals(two_j) == []


@pytest.mark.parametrize("two_j", [1, 2, 3, 4, 5, 6])
def test_orthonormal_basis(two_j):
    assert check_orthonormal(two_j) == []


@pytest.mark.parametrize("two_j", [1, 2, 3])
def test_gram_matrix_numeric_route(two_j):
    mid = gauss_a() ** two_j * AlgElement.e_power(-two_j)
    norm = sum(QV ** (2 * k) for k in range(two_j + 1))
    for pp in range(two_j + 1):
        for p in range(two_j + 1):
            f = basis_vector(two_j, pp)
            g = basis_vector(two_j, p)
            val = 0.0
            for af, ef in f.items():
                for ag, eg in g.items():
                    h = haar_state_numeric(ef.star() * mid * eg, QV)
                    rad = RadicalScalar._make(ONE, af) * RadicalScalar._make(
                        ONE, ag
                    )
                    val += rad.evaluate(SV) * h
            want = 1.0 if pp == p else 0.0
            assert abs(norm * val - want) < 1e-9


@pytest.mark.parametrize("two_j", [1, 2, 3, 4, 5, 6])
def test_ladder_closed_form(two_j):
    assert check_ladder_action(two_j) == []


@pytest.mark.parametrize("two_j", [1, 2, 3, 4])
def test_matrix_elements_are_twisted_spin_entries(two_j):
    """Ladder matrix elements match the q-integer spin matrices times
    the uniform q^(j - 1/2)."""
    twist = Scalar.s_power(two_j - 1)
    for p in range(two_j):
        got = inner(
            two_j, op_jp(two_j, basis_vector(two_j, p)), basis_vector(two_j, p + 1)
        )
        want = _ladder_radical(two_j - p, p + 1) * twist
        assert got == want
        got = inner(
            two_j, op_jm(two_j, basis_vector(two_j, p + 1)), basis_vector(two_j, p)
        )
        assert got == want


@pytest.mark.parametrize("two_j", [1, 2, 3, 4, 5, 6])
def test_commutator_twist(two_j):
    assert check_commutator(two_j) == []


@pytest.mark.parametrize("two_j", [1, 2, 3])
def test_hermiticity(two_j):
    assert check_hermiticity(two_j) == []


def test_small_values_by_hand():
    assert basis_vector(1, 0) == {(): AlgElement.one().scale(Scalar.s_power(-2))}
    assert basis_vector(1, 1) == {
        (): AlgElement.x().scale(Scalar.s_power(-1))
    }
    assert inner(1, basis_vector(1, 0), basis_vector(1, 0)) == ONE
    got = op_j0(1, basis_vector(1, 1))
    half = Scalar.from_fraction(Fraction(1, 2))
    want = {a: el.scale(half) for a, el in basis_vector(1, 1).items()}
    assert got == want


def test_degree_bounds():
    with pytest.raises(ValueError):
        basis_vector(2, 3)
    assert op_jp(2, basis_vector(2, 2)) == {}
    assert op_jm(2, basis_vector(2, 0)) == {}


def test_positivity_numeric():
    rng = random.Random(3)
    for two_j in (1, 2, 3):
        for _ in range(10):
            f = {}
            for p in range(two_j + 1):
                c = Scalar.from_int(rng.randint(-3, 3))
                for atoms, el in basis_vector(two_j, p).items():
                    piece = el.scale(c)
                    f[atoms] = f.get(atoms, AlgElement.zero()) + piece
            f = {a: el for a, el in f.items() if not el.is_zero()}
            if not f:
                continue
            val = inner(two_j, f, f)
            assert val.evaluate(SV) >= -1e-12
