"""Expression language: parser, printer, round trips."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suq2cs.funcalg import AlgElement, gauss_a, random_element, x_star
from suq2cs.haar import haar_monomial
from suq2cs.scalars import Scalar
from suq2cs.syntax import element_str, parse, scalar_str
from suq2cs.zfunc import ZFunc


def test_atoms_and_juxtaposition():
    assert parse("x y") == AlgElement.x() * AlgElement.y()
    assert parse("x^2 E^-1") == AlgElement.word(2, -1, 0)
    assert parse("q^-1 s") == AlgElement.from_coeff(
        ZFunc.const(Scalar.s_power(-1))
    )
    assert parse("Z") == AlgElement.zeta()
    assert parse("2x - 3y^2") == AlgElement.x().scale(
        Scalar.from_int(2)
    ) - (AlgElement.y() ** 2).scale(Scalar.from_int(3))


def test_parens_division_star():
    assert parse("E(1 - Z)") == gauss_a()
    assert parse("x / E") == AlgElement.word(1, -1, 0)
    assert parse("star(x)") == x_star()
    assert parse("star(star(x E^2))") == AlgElement.x() * AlgElement.e_power(2)


def test_haar_folds_to_scalar():
    assert parse("haar(Z)") == AlgElement.from_coeff(
        ZFunc.const(haar_monomial(1))
    )
    assert element_str(parse("haar(Z)")) == "q^2/(1 + q^2)"
    assert parse("haar(Z^2) + haar(Z)^2") == AlgElement.from_coeff(
        ZFunc.const(haar_monomial(2) + haar_monomial(1) * haar_monomial(1))
    )


def test_known_prints():
    assert element_str(AlgElement.zeta()) == "Z"
    assert element_str(gauss_a()) == "E (1 - Z)"
    assert element_str(parse("x y")) == "E^2 ((-q) Z)"
    assert scalar_str(Scalar.from_int(1) - Scalar.q_power(2)) == "1 - q^2"
    assert scalar_str(Scalar.s_power(3)) == "s^3"


@pytest.mark.parametrize(
    "bad",
    ["x +", "(x", "w", "x $", "x y)", "", "^2", "star x"],
)
def test_rejects_malformed(bad):
    with pytest.raises((ValueError, IndexError)):
        parse(bad)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip(seed):
    el = random_element(random.Random(seed), max_terms=3)
    text = element_str(el)
    assert parse(text) == el
    assert element_str(parse(text)) == text


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_survives_products(seed):
    rng = random.Random(seed)
    el = random_element(rng) * random_element(rng)
    assert parse(element_str(el)) == el
