"""Named verification suites over every checkable identity in the package.

Each suite is a list of cases; a case runs one check and reports pass or
fail with either an exact-zero flag or a numeric residual.  The registry
backs the command-line runner.
"""

from __future__ import annotations

import math
import random
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import (
    bargmann,
    contraction,
    csrep,
    duality,
    formcalc,
    funcalg,
    geom,
    haar,
    heisenberg,
    qanalysis,
)
from .funcalg import AlgElement
from .scalars import Scalar
from .zfunc import ZFunc


@dataclass
class SuiteConfig:
    suites: tuple = ("all",)
    max_spin: Fraction = Fraction(3)
    q_numeric: Fraction = Fraction(7, 10)
    tol: float = 1e-10
    trunc: int = 8
    w: float = 0.5
    p: float = 1.0
    fock_trunc: int = 40
    jobs: int = 1
    seed: int = 0

    def validate(self):
        if not 0 < self.q_numeric < 1:
            raise ValueError("q must lie strictly between 0 and 1")
        if self.max_spin <= 0 or (2 * self.max_spin).denominator != 1:
            raise ValueError("max spin must be a positive half-integer")
        for name, val in (
            ("tol", self.tol), ("trunc", self.trunc), ("w", self.w),
            ("p", self.p), ("fock-trunc", self.fock_trunc), ("jobs", self.jobs),
        ):
            if val <= 0:
                raise ValueError(f"{name} must be positive")

    def qv(self):
        return float(self.q_numeric)

    def two_j_values(self):
        return range(1, int(2 * self.max_spin) + 1)


@dataclass
class CaseReport:
    suite: str
    case: str
    status: str
    residual: object
    elapsed_ms: float = 0.0
    detail: str = ""


def _rng(cfg, suite, case):
    return random.Random(cfg.seed * 1000003 + zlib.crc32(f"{suite}:{case}".encode()))


def _empty(fn, *args, **kwargs):
    """Case from a check returning a list of failures (or a count)."""

    def run():
        bad = fn(*args, **kwargs)
        ok = not bad
        return ok, ok, "" if ok else repr(bad)

    return run


def _equals(fn, want):
    def run():
        got = fn()
        ok = got == want
        return ok, ok, "" if ok else repr(got)

    return run


def _residual(fn, tol):
    def run():
        val = float(fn())
        return val <= tol, val, ""

    return run


def _true(fn):
    def run():
        ok = bool(fn())
        return ok, ok, ""

    return run


# ---------------------------------------------------------------------------
# suite builders; each returns [(case name, runnable)]


def _suite_engine_properties(cfg):
    def associativity():
        bad = []
        rng = _rng(cfg, "engine-properties", "associativity")
        draws = (
            (lambda: funcalg.random_element(rng), 70),
            (lambda: duality.random_u(rng), 70),
            (lambda: heisenberg.random_grp(rng), 30),
            (lambda: heisenberg.random_alg(rng), 30),
        )
        for draw, count in draws:
            for i in range(count):
                a, b, c = draw(), draw(), draw()
                if (a * b) * c != a * (b * c):
                    bad.append(i)
        return bad

    def star_involution():
        bad = []
        rng = _rng(cfg, "engine-properties", "star")
        draws = (
            (lambda: funcalg.random_element(rng), 40),
            (lambda: duality.random_u(rng), 30),
            (lambda: heisenberg.random_grp(rng), 15),
            (lambda: heisenberg.random_alg(rng), 15),
        )
        for draw, count in draws:
            for i in range(count):
                a = draw()
                if a.star().star() != a:
                    bad.append(i)
        return bad

    def normalization_idempotence():
        bad = []
        rng = _rng(cfg, "engine-properties", "normal-form")
        for i in range(50):
            el = funcalg.random_element(rng)
            if AlgElement(list(el.terms.items())) != el:
                bad.append(("alg", i))
            u = duality.random_u(rng)
            if duality.UElement(dict(u.terms)) != u:
                bad.append(("envelope", i))
            for c in el.terms.values():
                again = ZFunc(c.num, c.den)
                if again != c:
                    bad.append(("zfunc", i))
                for sc in c.num:
                    if Scalar(sc.num, sc.den) != sc:
                        bad.append(("scalar", i))
        return bad

    return [
        ("associativity-200-random-triples", _empty(associativity)),
        ("star-involution-100-random-elements", _empty(star_involution)),
        ("normal-form-idempotence", _empty(normalization_idempotence)),
        (
            "haar-positivity",
            _empty(
                haar.check_haar_positivity,
                _rng(cfg, "engine-properties", "positivity"),
                0.7,
            ),
        ),
    ]


def _suite_slq2(cfg):
    return [
        ("defining-relations", _empty(funcalg.check_slq2_relations)),
        ("unitarity-relations", _empty(funcalg.check_unitarity_relations)),
        ("antipode-table", _empty(funcalg.check_antipode_table)),
    ]


def _suite_star_identities(cfg):
    return [
        ("star-closed-forms", _empty(funcalg.check_star_formulas)),
        ("zeta-words", _empty(funcalg.check_zeta_word, 4)),
        ("weight-word-products", _empty(funcalg.check_ez_products, 6)),
        ("xxstar-powers", _empty(funcalg.check_xxstar_products, 6)),
        ("xxstar-commutation", _empty(funcalg.check_xxstar_commutation)),
        ("cs-word-shifts", _empty(funcalg.check_cs_word_shift, 6, 4)),
    ]


def _suite_qanalysis(cfg):
    return [("sum-identities-to-12", _empty(qanalysis.verify_sum_identities, 12))]


def _suite_haar(cfg):
    return [
        ("closed-form-to-20", _empty(haar.check_haar_values, 20)),
        ("jackson-sum-agreement", _empty(haar.check_haar_numeric_agreement, cfg.qv())),
        (
            "positivity",
            _empty(haar.check_haar_positivity, _rng(cfg, "haar", "pos"), cfg.qv()),
        ),
    ]


def _suite_hopf_axioms(cfg):
    return [
        ("envelope-hopf", _empty(duality.check_hopf_axioms)),
        (
            "oscillator-group-hopf",
            _empty(heisenberg.check_grp_hopf, _rng(cfg, "hopf", "grp")),
        ),
        (
            "oscillator-algebra-hopf",
            _empty(heisenberg.check_alg_hopf, _rng(cfg, "hopf", "alg")),
        ),
    ]


def _suite_duality_product(cfg):
    return [
        (
            "product-vs-coproduct",
            _empty(duality.check_duality_of_product, _rng(cfg, "dp", "a"), 25),
        ),
        (
            "oscillator-product-vs-coproduct",
            _empty(heisenberg.check_duality_of_product, _rng(cfg, "dp", "b")),
        ),
        (
            "oscillator-coproduct-vs-product",
            _empty(heisenberg.check_duality_of_coproduct, _rng(cfg, "dp", "c")),
        ),
    ]


def _suite_pairing_basics(cfg):
    return [
        ("generator-values", _empty(duality.check_pairing_values)),
        ("coproduct-closed-form", _empty(duality.check_coproduct_closed_form)),
        (
            "structure-maps",
            _empty(duality.check_pairing_structure_maps, _rng(cfg, "pb", "a"), 20),
        ),
        (
            "action-consistency",
            _empty(duality.check_action_pairing_consistency, _rng(cfg, "pb", "b"), 15),
        ),
        ("matrix-actions", _empty(duality.check_matrix_actions)),
        ("haar-invariance", _empty(duality.check_haar_invariance)),
        ("oscillator-values", _empty(heisenberg.check_pairing_values)),
        ("oscillator-dual-bases", _empty(heisenberg.check_dual_bases, 2)),
        (
            "oscillator-structure-maps",
            _empty(heisenberg.check_pairing_structure_maps, _rng(cfg, "pb", "c")),
        ),
    ]


def _suite_star_pairing(cfg):
    return [
        (
            "adjoint-convention",
            _equals(
                lambda: duality.check_star_pairing_convention(_rng(cfg, "sp", "a"), 20),
                {"A": True, "B": False},
            ),
        ),
        (
            "oscillator-adjoint-convention",
            _true(
                lambda: heisenberg.check_star_pairing_convention(_rng(cfg, "sp", "b"))[
                    "fixed"
                ]
            ),
        ),
    ]


def _suite_rep_relations(cfg):
    def spin_commutator():
        j = 6
        q = math.exp(cfg.w / j)
        jp, j0, jm = contraction.spin_matrices(j, q)
        import numpy as np

        comm = jp @ jm - jm @ jp
        want = [contraction.qnum(2 * (j - n), q) for n in range(2 * j + 1)]
        return float(abs(comm - np.diag(want)).max())

    return [
        ("envelope-relations", _empty(duality.check_u_relations)),
        (
            "oscillator-relations",
            _empty(heisenberg.check_alg_relations, _rng(cfg, "rep", "alg")),
        ),
        ("spin-matrix-commutator", _residual(spin_commutator, 1e-9)),
    ]


def _suite_t_matrix(cfg):
    cases = [("fundamental-entries", _empty(csrep.check_t_fundamental))]
    for two_j in cfg.two_j_values():
        cases.append(
            (f"unitarity-2j{two_j}", _empty(csrep.check_t_unitary, two_j))
        )
        cases.append((f"pairing-2j{two_j}", _empty(csrep.check_t_pairing, two_j)))
        cases.append((f"cs-column-2j{two_j}", _empty(csrep.check_cs_from_t, two_j)))
    cases.append(
        ("classical-limit", _empty(csrep.check_t_classical, 1.0 - 1e-4, 1e-3))
    )
    return cases


def _suite_cs_norm(cfg):
    cases = []
    for two_j in cfg.two_j_values():
        cases.append((f"exact-norm-2j{two_j}", _empty(csrep.check_cs_norm, two_j)))
    for qv in (0.5, 0.7, 0.9):
        for two_j in (1, 3, 6):
            for zv in (0.2, 0.7):
                cases.append(
                    (
                        f"series-q{qv}-2j{two_j}-z{zv}",
                        _residual(
                            lambda two_j=two_j, qv=qv, zv=zv: abs(
                                csrep.norm_series_numeric(two_j, qv, zv) - 1.0
                            ),
                            1e-10,
                        ),
                    )
                )
    return cases


def _suite_resolution(cfg):
    return [
        (f"identity-2j{two_j}", _empty(csrep.check_resolution, two_j))
        for two_j in cfg.two_j_values()
    ]


def _suite_overlap(cfg):
    return [
        (f"overlap-2j{two_j}", _empty(csrep.check_overlap, two_j))
        for two_j in cfg.two_j_values()
    ]


def _suite_operator_actions(cfg):
    cases = []
    for two_j in cfg.two_j_values():
        cases.append((f"ladder-2j{two_j}", _empty(csrep.check_cs_actions, two_j)))
        cases.append(
            (f"annihilation-2j{two_j}", _empty(csrep.check_cs_annihilation, two_j))
        )
        cases.append(
            (f"gamma-eigenvalue-2j{two_j}", _empty(csrep.check_gamma_eigenvalue, two_j))
        )
    return cases


def _suite_bargmann(cfg):
    cases = []
    for two_j in cfg.two_j_values():
        cases.append(
            (f"monomial-integrals-2j{two_j}", _empty(bargmann.check_monomial_integrals, two_j))
        )
        cases.append(
            (f"orthonormal-2j{two_j}", _empty(bargmann.check_orthonormal, two_j))
        )
        cases.append(
            (f"ladder-action-2j{two_j}", _empty(bargmann.check_ladder_action, two_j))
        )
        cases.append(
            (f"commutator-2j{two_j}", _empty(bargmann.check_commutator, two_j))
        )
        cases.append(
            (f"hermiticity-2j{two_j}", _empty(bargmann.check_hermiticity, two_j))
        )
    return cases


def _suite_sphere_relations(cfg):
    cases = [
        ("two-routes-agree", _empty(geom.check_sphere_routes)),
        ("relations", _empty(lambda: geom.check_podles_relations(geom.sphere_entries()))),
        ("star-map", _empty(lambda: geom.check_sphere_star(geom.sphere_entries()))),
        ("zeta-from-x", _empty(geom.check_zeta_from_x)),
    ]
    for two_j in cfg.two_j_values():
        cases.append(
            (f"expectations-2j{two_j}", _empty(geom.check_cs_expectations, two_j))
        )
        cases.append(
            (
                f"sphere-from-expectations-2j{two_j}",
                _empty(geom.check_sphere_from_expectations, two_j),
            )
        )
    cases.append(
        (
            "classical-limit",
            _residual(lambda: geom.classical_sphere_residuals(1.0 - 1e-4), 1e-3),
        )
    )
    return cases


def _suite_inf_char(cfg):
    return [
        (
            "weight-zero-character",
            _empty(lambda: geom.check_infinitesimal_character(geom.sphere_entries())),
        ),
        (
            "character-on-cs-route",
            _empty(lambda: geom.check_infinitesimal_character(geom.sphere_cs())),
        ),
    ]


def _suite_omega_calculus(cfg):
    return [
        ("differential-vs-action", _empty(geom.check_differential_action_route)),
        ("relations-respected", _empty(geom.check_calculus_respects_relations)),
        ("coordinates-commute", _empty(geom.check_coordinates_commute_with_forms)),
        (
            "frame-automorphism",
            _empty(geom.check_lambda_automorphism, _rng(cfg, "omega", "a"), 40),
        ),
    ]


def _suite_complex_calculus(cfg):
    return [
        ("letter-rules", _empty(formcalc.check_letter_rules)),
        ("nilpotency", _empty(formcalc.check_nilpotent)),
        ("dt-closed-forms", _empty(formcalc.check_dt_closed_forms, 4)),
        ("d-squared", _empty(formcalc.check_d_squared)),
        (
            "associativity",
            _empty(formcalc.check_associativity, _rng(cfg, "cc", "a"), 60),
        ),
        (
            "graded-leibniz",
            _empty(formcalc.check_graded_leibniz, _rng(cfg, "cc", "b"), 40),
        ),
        (
            "pushes-vs-elements",
            _empty(formcalc.check_pushes_against_elements, _rng(cfg, "cc", "c"), 40),
        ),
        (
            "classical-two-form",
            _residual(lambda: formcalc.classical_two_form_residual(1.0 - 1e-4), 1e-3),
        ),
    ]


def _suite_h1_hopf(cfg):
    return [
        (
            "group-relations",
            _empty(heisenberg.check_grp_relations, _rng(cfg, "h1", "a")),
        ),
        (
            "algebra-relations",
            _empty(heisenberg.check_alg_relations, _rng(cfg, "h1", "b")),
        ),
        ("group-hopf", _empty(heisenberg.check_grp_hopf, _rng(cfg, "h1", "c"))),
        ("algebra-hopf", _empty(heisenberg.check_alg_hopf, _rng(cfg, "h1", "d"))),
        ("group-star", _empty(heisenberg.check_grp_star, _rng(cfg, "h1", "e"))),
        ("algebra-star", _empty(heisenberg.check_alg_star, _rng(cfg, "h1", "f"))),
        ("dual-bases", _empty(heisenberg.check_dual_bases, 2)),
        (
            "duality-of-product",
            _empty(heisenberg.check_duality_of_product, _rng(cfg, "h1", "g")),
        ),
        ("classical-product", _empty(heisenberg.check_classical_group_product, _rng(cfg, "h1", "h"))),
        ("classical-pairing", _empty(heisenberg.check_classical_pairing, 3)),
        ("classical-commutator", _empty(heisenberg.check_classical_commutator, 4)),
    ]


def _suite_h1_tmatrix(cfg):
    return [
        ("matrix-bialgebra", _empty(heisenberg.check_matrix_group, _rng(cfg, "h1t", "a"))),
        ("matrix-from-kernel", _empty(heisenberg.check_matrix_from_kernel, 2)),
        (
            "representation-pairing",
            _empty(heisenberg.check_rep_pairing, _rng(cfg, "h1t", "b")),
        ),
        ("kernel-antipode-inverse", _empty(heisenberg.check_kernel_inverse)),
        (
            "kernel-star-unitarity",
            _equals(
                heisenberg.check_kernel_star, {"fixed": True, "conjugated": False}
            ),
        ),
    ]


def _suite_h1_coherent(cfg):
    w, p, trunc = cfg.w, cfg.p, cfg.fock_trunc
    return [
        ("normalization-series", _empty(heisenberg.check_cs_product_identities, 5)),
        (
            "fock-commutator",
            _residual(lambda: heisenberg.fock_commutator_defect(p, w, trunc), 1e-11),
        ),
        (
            "coherent-norm",
            _residual(
                lambda: max(
                    abs(
                        sum(heisenberg.coherent_vector(xi, p, w, trunc) ** 2) - 1.0
                    )
                    for xi in (0.3, 0.8)
                ),
                1e-11,
            ),
        ),
        (
            "coherent-eigenvector",
            _residual(lambda: heisenberg.coherent_eigen_defect(0.8, p, w, trunc), 1e-9),
        ),
        (
            "resolution-of-unity",
            _residual(lambda: heisenberg.resolution_defect(p, w, trunc), 1e-8),
        ),
    ]


def _suite_contraction_rate(cfg):
    return [
        (
            "residual-halving",
            _empty(contraction.check_contraction_rate, cfg.w, (10, 20, 40)),
        ),
        (
            "matrix-residual-quartering",
            _residual(
                lambda: abs(
                    contraction.matrix_residual(10, cfg.w)
                    / contraction.matrix_residual(20, cfg.w)
                    - 4.0
                ),
                0.2,
            ),
        ),
        (
            "ladder-convergence",
            _residual(
                lambda: abs(
                    contraction.ladder_residual(10, cfg.w)
                    / contraction.ladder_residual(20, cfg.w)
                    - 2.0
                ),
                0.3,
            ),
        ),
        (
            "classical-limit",
            _residual(lambda: contraction.classical_limit_defect(10), 1e-6),
        ),
        (
            "weight-spectrum",
            _residual(lambda: contraction.weight_spectrum_defect(10, cfg.w), 0.0 + 1e-15),
        ),
    ]


REGISTRY = {
    "engine-properties": _suite_engine_properties,
    "slq2": _suite_slq2,
    "star-identities": _suite_star_identities,
    "qanalysis": _suite_qanalysis,
    "haar": _suite_haar,
    "hopf-axioms": _suite_hopf_axioms,
    "duality-product": _suite_duality_product,
    "pairing-basics": _suite_pairing_basics,
    "star-pairing": _suite_star_pairing,
    "rep-relations": _suite_rep_relations,
    "t-matrix": _suite_t_matrix,
    "cs-norm": _suite_cs_norm,
    "resolution": _suite_resolution,
    "overlap": _suite_overlap,
    "operator-actions": _suite_operator_actions,
    "bargmann": _suite_bargmann,
    "sphere-relations": _suite_sphere_relations,
    "inf-char": _suite_inf_char,
    "omega-calculus": _suite_omega_calculus,
    "complex-calculus": _suite_complex_calculus,
    "h1-hopf": _suite_h1_hopf,
    "h1-tmatrix": _suite_h1_tmatrix,
    "h1-coherent": _suite_h1_coherent,
    "contraction-rate": _suite_contraction_rate,
}


def suite_names():
    return sorted(REGISTRY)


def _run_case(suite, name, fn):
    start = time.perf_counter()
    try:
        ok, residual, detail = fn()
    except Exception as exc:  # a crashed check is a failed case
        ok, residual, detail = False, False, f"error: {exc!r}"
    elapsed = (time.perf_counter() - start) * 1000.0
    return CaseReport(
        suite=suite,
        case=name,
        status="pass" if ok else "fail",
        residual=residual,
        elapsed_ms=round(elapsed, 3),
        detail=detail,
    )


def run_suites(cfg):
    cfg.validate()
    wanted = list(cfg.suites)
    if not wanted or "all" in wanted:
        wanted = suite_names()
    unknown = [s for s in wanted if s not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown suite names: {', '.join(unknown)}")
    work = []
    for suite in wanted:
        for name, fn in REGISTRY[suite](cfg):
            work.append((suite, name, fn))
    start = time.perf_counter()
    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(lambda item: _run_case(*item), work))
    else:
        reports = [_run_case(*item) for item in work]
    elapsed = (time.perf_counter() - start) * 1000.0
    summary = {
        "total": len(reports),
        "passed": sum(r.status == "pass" for r in reports),
        "failed": sum(r.status != "pass" for r in reports),
        "elapsed_ms": round(elapsed, 3),
    }
    return reports, summary
