"""Enveloping-algebra engine, Hopf structure, pairing, and actions."""

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from suq2cs.duality import (
    UElement,
    UTensor,
    check_action_pairing_consistency,
    check_coproduct_closed_form,
    check_duality_of_product,
    check_haar_invariance,
    check_hopf_axioms,
    check_matrix_actions,
    check_pairing_structure_maps,
    check_pairing_values,
    check_star_pairing_convention,
    check_u_relations,
    closed_coproduct,
    left_act,
    pair,
    random_u,
    right_act,
)
from suq2cs.funcalg import AlgElement, gauss_b, gauss_d
from suq2cs.scalars import ONE, Scalar

QV = 0.7


def qnum(n, qv=QV):
    if n == 0:
        return 0.0
    return (qv**n - qv**-n) / (qv - 1.0 / qv)


def rep_matrices(two_j, qv=QV):
    """Spin-j ladder matrices; basis ordered by ascending weight."""
    dim = two_j + 1
    jp = np.zeros((dim, dim))
    for i in range(dim - 1):
        # row index i holds weight m = -j + i
        jp[i + 1, i] = np.sqrt(qnum(two_j - i, qv) * qnum(i + 1, qv))
    jm = jp.T.copy()
    j0 = np.diag([-two_j / 2 + i for i in range(dim)])
    return jp, j0, jm


def rep(u, two_j, qv=QV):
    jp, j0, jm = rep_matrices(two_j, qv)
    dim = two_j + 1
    out = np.zeros((dim, dim))
    for (k, l, m, t), c in u.terms.items():
        mat = np.diag([qv ** (t * (-two_j / 2 + i) / 2) for i in range(dim)])
        mat = np.linalg.matrix_power(jm, m) @ mat
        mat = np.linalg.matrix_power(j0, l) @ mat
        mat = np.linalg.matrix_power(jp, k) @ mat
        out = out + c.evaluate(qv**0.5) * mat
    return out


def u_elements():
    keys = st.tuples(
        st.integers(0, 2), st.integers(0, 1), st.integers(0, 2),
        st.integers(-1, 1).map(lambda c: 2 * c),
    )
    coeffs = st.integers(-3, 3).filter(bool).map(Scalar.from_int)
    return st.lists(st.tuples(keys, coeffs), min_size=1, max_size=2).map(UElement)


def test_defining_relations():
    assert check_u_relations() == []


@settings(max_examples=40, deadline=None)
@given(u_elements(), u_elements())
def test_product_matches_spin_representations(u, v):
    w = u * v
    for two_j in (1, 2, 3):
        lhs = rep(u, two_j) @ rep(v, two_j)
        assert np.allclose(lhs, rep(w, two_j), atol=1e-9)


@settings(max_examples=30, deadline=None)
@given(u_elements(), u_elements(), u_elements())
def test_product_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@settings(max_examples=30, deadline=None)
@given(u_elements(), u_elements(), u_elements())
def test_product_distributive(u, v, w):
    assert u * (v + w) == u * v + u * w


@settings(max_examples=30, deadline=None)
@given(u_elements())
def test_star_involution(u):
    assert u.star().star() == u


@settings(max_examples=25, deadline=None)
@given(u_elements(), u_elements())
def test_star_antimultiplicative(u, v):
    assert (u * v).star() == v.star() * u.star()


@settings(max_examples=25, deadline=None)
@given(u_elements())
def test_star_matches_transpose_in_representation(u):
    for two_j in (1, 2):
        assert np.allclose(rep(u.star(), two_j), rep(u, two_j).T, atol=1e-9)


@settings(max_examples=25, deadline=None)
@given(u_elements(), u_elements())
def test_antipode_antimultiplicative(u, v):
    assert (u * v).antipode() == v.antipode() * u.antipode()


@settings(max_examples=25, deadline=None)
@given(u_elements())
def test_antipode_squared_is_group_like_conjugation(u):
    lhs = u.antipode().antipode()
    rhs = UElement.group_like(4) * u * UElement.group_like(-4)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(u_elements(), u_elements())
def test_counit_multiplicative(u, v):
    assert (u * v).counit() == u.counit() * v.counit()


def test_coproduct_closed_form():
    assert check_coproduct_closed_form() == []


def test_coproduct_respects_star():
    for key in [(1, 0, 0, 0), (0, 0, 1, 2), (2, 1, 1, -2), (1, 1, 0, 4)]:
        u = UElement.mono(*key)
        starred = UTensor.zero()
        for (ka, kb), c in u.coproduct().terms.items():
            starred = starred + UTensor.of(
                UElement.mono(*ka).star(), UElement.mono(*kb).star()
            ).scale(c)
        assert starred == u.star().coproduct()


def test_hopf_axioms():
    assert check_hopf_axioms() == []


def test_pairing_values():
    assert check_pairing_values() == []


def test_pairing_rejects_half_integer_weight():
    with pytest.raises(ValueError):
        pair(AlgElement.e_power(1), UElement.group_like(1))


def test_duality_of_product():
    assert check_duality_of_product(random.Random(0), 25) == 0


def test_pairing_structure_maps():
    assert check_pairing_structure_maps(random.Random(1), 20) == []


def test_star_pairing_convention():
    out = check_star_pairing_convention(random.Random(2), 20)
    assert out == {"A": True, "B": False}


def test_matrix_entry_actions():
    assert check_matrix_actions() == []


def test_action_examples():
    x = AlgElement.x()
    assert left_act(UElement.jp(), x) == AlgElement.e_power(2)
    assert left_act(UElement.jm(), AlgElement.y()) == AlgElement.one()
    assert left_act(UElement.jm(), x).is_zero()
    assert right_act(x, UElement.jp()) == AlgElement.one()
    assert right_act(x, UElement.jm()) == (x * x).scale(-1)


def test_actions_are_module_maps():
    rng = random.Random(5)
    for _ in range(12):
        u, v = random_u(rng, 1), random_u(rng, 1)
        f = AlgElement.word(
            rng.randint(0, 2), rng.randint(-2, 2), 0
        ) * AlgElement.zeta().scale(rng.randint(1, 3))
        assert left_act(u * v, f) == left_act(u, left_act(v, f))
        assert right_act(f, u * v) == right_act(right_act(f, u), v)


def test_actions_commute_with_each_other():
    rng = random.Random(6)
    for _ in range(10):
        u, v = random_u(rng, 1), random_u(rng, 1)
        f = AlgElement.word(0, rng.randint(-2, 2), rng.randint(0, 2))
        assert right_act(left_act(u, f), v) == left_act(u, right_act(f, v))


def test_action_pairing_consistency():
    assert check_action_pairing_consistency(random.Random(3), 15) == []


def test_haar_invariance():
    assert check_haar_invariance() == []


def test_weight_action_on_words():
    f = AlgElement.word(0, -2, 1)
    g = left_act(UElement.group_like(2), f)
    assert g == f.scale(Scalar.s_power(0))
    h = left_act(UElement.group_like(4), f)
    assert h == f.scale(Scalar.q_power(0))
    k = left_act(UElement.group_like(4), AlgElement.y())
    assert k == AlgElement.y().scale(Scalar.q_power(2))
