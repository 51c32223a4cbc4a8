"""Spin-to-oscillator contraction: residual decay rates and limits."""

import math

import numpy as np

from suq2cs.contraction import (
    check_contraction_rate,
    classical_limit_defect,
    contracted_ops,
    contraction_convergence,
    ladder_residual,
    matrix_residual,
    qnum,
    spin_matrices,
    vacuum_window_residual,
    weight_spectrum_defect,
)


def test_qnum_classical_and_deformed():
    assert qnum(5, 1.0) == 5.0
    q = 1.3
    assert abs(qnum(3, q) - (q**3 - q**-3) / (q - 1 / q)) < 1e-14


def test_spin_commutator_closes_on_weight():
    j, q = 6, math.exp(0.5 / 6)
    jp, j0, jm = spin_matrices(j, q)
    comm = jp @ jm - jm @ jp
    want = np.diag([qnum(2 * (j - n), q) for n in range(2 * j + 1)])
    assert np.max(np.abs(comm - want)) < 1e-10 * np.max(np.abs(want))


def test_annihilator_kills_top_state():
    a, _, _ = contracted_ops(8)
    top = np.zeros(17)
    top[0] = 1.0
    assert np.linalg.norm(a @ top) == 0.0


def test_weight_matrix_spectrum():
    assert weight_spectrum_defect(9) == 0.0
    _, _, h = contracted_ops(9)
    assert h[0, 0] == 2.0
    assert h[-1, -1] == -2.0


def test_vacuum_window_residual_halves():
    r10 = vacuum_window_residual(10)
    r20 = vacuum_window_residual(20)
    r40 = vacuum_window_residual(40)
    assert 1.7 < r10 / r20 < 2.3
    assert 1.7 < r20 / r40 < 2.3


def test_contraction_rate_report():
    assert check_contraction_rate() == []
    report = contraction_convergence()
    vals = [c["vacuum_window"] for c in report["cases"]]
    assert vals == sorted(vals, reverse=True)


def test_matrix_residual_quarters():
    r10 = matrix_residual(10)
    r20 = matrix_residual(20)
    assert 3.8 < r10 / r20 < 4.2


def test_ladder_entries_converge_to_fock():
    r10 = ladder_residual(10)
    r20 = ladder_residual(20)
    assert 1.7 < r10 / r20 < 2.3


def test_commutator_top_entry_approaches_limit():
    w = 0.5
    want = math.sinh(2 * w) / w
    defects = []
    for j in (10, 20, 40):
        a, ad, _ = contracted_ops(j, w)
        comm = a @ ad - ad @ a
        defects.append(abs(comm[0, 0] - want))
    assert defects[0] > defects[1] > defects[2]


def test_classical_limit_at_fixed_spin():
    assert classical_limit_defect(10) < 1e-6
    assert classical_limit_defect(25) < 1e-6
