"""Contraction of the deformed spin algebra onto the oscillator pair.

Numeric: at q = e^(w/j) the rescaled ladder operators A = J+/sqrt(j),
A+ = J-/sqrt(j), H = 2 J0/j of the spin-j representation converge to the
oscillator relation [A, A+] = sinh(wH)/w on the levels near the top-weight
vacuum, where H tends to 2.  The basis is ordered from the top weight down,
so level n of the spin space matches Fock level n of the limit.
"""

import math

import numpy as np

from .heisenberg import fock_ops


def qnum(n, q):
    if q == 1.0:
        return float(n)
    return (q**n - q**-n) / (q - 1.0 / q)


def spin_matrices(j, q):
    """Ladder and weight matrices for integer spin j, top weight first."""
    dim = 2 * j + 1
    n = np.arange(dim - 1)
    vals = np.sqrt([qnum(i + 1, q) * qnum(2 * j - i, q) for i in n])
    jp = np.zeros((dim, dim))
    jp[n, n + 1] = vals
    jm = jp.T.copy()
    j0 = np.diag([float(j - i) for i in range(dim)])
    return jp, j0, jm


def contracted_ops(j, w=0.5):
    """A, A+, H after the 1/sqrt(j) rescaling at q = e^(w/j)."""
    q = math.exp(w / j)
    jp, j0, jm = spin_matrices(j, q)
    root = math.sqrt(j)
    return jp / root, jm / root, 2.0 * j0 / j


def vacuum_window_residual(j, w=0.5, window=10):
    """Deviation of [A, A+] from sinh(wp)/w with p = 2, the weight seen at
    the vacuum, on the top window; decays like 1/j."""
    a, ad, _ = contracted_ops(j, w)
    comm = a @ ad - ad @ a
    want = (math.sinh(2.0 * w) / w) * np.eye(window)
    return float(np.max(np.abs(comm[:window, :window] - want)))


def matrix_residual(j, w=0.5):
    """Deviation of [A, A+] from sinh(wH)/w with the finite-j weight matrix
    inserted; decays like 1/j^2."""
    a, ad, h = contracted_ops(j, w)
    comm = a @ ad - ad @ a
    want = np.diag(np.sinh(w * np.diag(h)) / w)
    return float(np.max(np.abs(comm - want)))


def ladder_residual(j, w=0.5, window=10):
    """Entrywise deviation of the contracted annihilator from the oscillator
    Fock matrix at p = 2 on the top window; decays like 1/j."""
    a, _, _ = contracted_ops(j, w)
    fock_a, _, _ = fock_ops(2.0, w, window)
    return float(np.max(np.abs(a[:window, :window] - fock_a)))


def weight_spectrum_defect(j, w=0.5):
    """H is diagonal with evenly spaced eigenvalues from 2 down to -2."""
    _, _, h = contracted_ops(j, w)
    want = np.array([2.0 * (j - n) / j for n in range(2 * j + 1)])
    return float(np.max(np.abs(np.diag(h) - want)))


def contraction_convergence(w=0.5, j_list=(10, 20, 40), window=10):
    """Residuals per spin and the decay ratios between successive spins."""
    cases = []
    for j in j_list:
        cases.append(
            {
                "j": j,
                "vacuum_window": vacuum_window_residual(j, w, window),
                "matrix": matrix_residual(j, w),
                "ladder": ladder_residual(j, w, window),
            }
        )
    ratios = []
    for prev, cur in zip(cases, cases[1:]):
        ratios.append(
            {
                "from_j": prev["j"],
                "to_j": cur["j"],
                "vacuum_window": prev["vacuum_window"] / cur["vacuum_window"],
                "matrix": prev["matrix"] / cur["matrix"],
                "ladder": prev["ladder"] / cur["ladder"],
            }
        )
    return {"w": w, "window": window, "cases": cases, "ratios": ratios}


def check_contraction_rate(w=0.5, j_list=(10, 20, 40), window=10, slack=0.15):
    """Each doubling of j halves the vacuum-window residual, within slack."""
    report = contraction_convergence(w, j_list, window)
    bad = []
    for r in report["ratios"]:
        if abs(r["vacuum_window"] / 2.0 - 1.0) > slack:
            bad.append((r["from_j"], r["to_j"], r["vacuum_window"]))
    return bad


def classical_limit_defect(j, w=1e-7):
    """At tiny w the commutator matches the undeformed weight matrix."""
    return matrix_residual(j, w)
