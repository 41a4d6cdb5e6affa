"""Acceptance suite: one test per stated criterion, exact tolerances.

Each test prints a single PASS line with its wall time when it succeeds;
failures surface as ordinary assertion errors with the mismatching data.
Two deliberately-failing claims from the source material are kept as
strict xfails so the defects stay visible without going green silently.
"""

import random
import time
from fractions import Fraction
from math import comb

import pytest

from folcheck import extalg, pforms
from folcheck.charring import freudenthal_character, wedge_power
from folcheck.decomp import decompose_character, recombine, recombine_dominant
from folcheck.registry import load_registry, run_case
from folcheck.rootdata import build_root_system, weyl_dim

REGISTRY = load_registry()


def _run(case_id, params=None, seed=20240):
    report = run_case(REGISTRY, case_id, params, seed=seed)
    assert report["status"] == "pass", (case_id, params, report)
    return report


def _announce(name, started):
    print(f"ACCEPT {name}: PASS ({time.monotonic() - started:.1f}s)")


class TestCriterion01AppendixCoefficients:
    def test_appendix_fast_tier(self):
        started = time.monotonic()
        budgets = {}
        for case_id in ("lemma-a3", "lemma-a4", "lemma-a5", "lemma-a6",
                        "lemma-a7", "lemma-a8"):
            t0 = time.monotonic()
            report = _run(case_id)
            budgets[case_id] = time.monotonic() - t0
            assert budgets[case_id] < 60.0, (case_id, budgets[case_id])
        report = _run("lemma-a5")
        assert report["realized_of_allowed"]["realized"] in (768, 4608)
        assert report["realized_of_allowed"]["realized"] == 4608
        for case_id, expected in [("lemma-a6", 2592), ("lemma-a7", 864),
                                  ("lemma-a8", 12960)]:
            assert _run(case_id)["abs_coefficient"] == expected
        _announce("criterion-01 appendix coefficients", started)


class TestCriterion02SubSums:
    def test_partial_sums_exact(self):
        started = time.monotonic()
        report = _run("lemma-a3-parts")
        assert report["parts"] == ["1440", "72", "-72"]
        assert report["recombines"]
        _announce("criterion-02 split sub-sums 1440 - 72 - 72", started)


class TestCriterion03FastDecompositions:
    def test_wedge2_of_cube_across_ranks(self):
        started = time.monotonic()
        for n in range(7, 14):
            t0 = time.monotonic()
            _run("eq-4.1", {"n": n})
            assert time.monotonic() - t0 < 30.0
        _announce("criterion-03a wedge^2 V[l3], n = 7..13", started)

    def test_line_grassmannian_across_ranks(self):
        started = time.monotonic()
        for n in range(5, 9):
            report = run_case(REGISTRY, "thm-4.2-wedge2", {"n": n})
            assert report["status"] == "pass", report
            report = run_case(REGISTRY, "thm-4.2-wedge4", {"n": n})
            assert report["status"] == "pass", report
            assert report["computed"] == report["expected"]
        _announce("criterion-03b line-Grassmannian wedges, n = 5..8", started)

    def test_section_formulas(self):
        started = time.monotonic()
        for k in (2, 3):
            for d in (0, 1):
                _run("lemma-4.1-sections-m1", {"k": k, "d": d})
                report = _run("lemma-4.1-sections-m3", {"k": k, "d": d})
                assert report.get("cauchy_path_agrees", True)
        _announce("criterion-03c section formulas, k in {2,3}, d in {0,1}",
                  started)


class TestCriterion04SlowDecompositions:
    def test_rank13_term_lists(self):
        started = time.monotonic()
        rep2 = _run("eq-4.2")
        assert rep2["mass"] == comb(286, 4)
        assert len(rep2["computed"]) == 12
        rep3 = _run("eq-4.3")
        dim = weyl_dim(build_root_system("A12"),
                       (0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0))
        assert rep3["mass"] == dim * (dim + 1) // 2
        mult2 = [t for t in rep3["computed"]
                 if t["weight"] == [0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0]]
        assert mult2 and mult2[0]["mult"] == 2
        rep4 = _run("eq-4.4")
        assert rep4["mass"] == 40755 * 40756 // 2
        assert len(rep4["computed"]) == 21
        assert sum(t["mult"] for t in rep4["computed"]) == 30
        elapsed = time.monotonic() - started
        assert elapsed < 1800.0
        _announce("criterion-04 rank-13 slow decompositions", started)


class TestCriterion05CominusculeTable:
    def test_all_seven_families(self):
        started = time.monotonic()
        report = _run("cominuscule-table")
        groups = {(row["group"], row["node"]) for row in report["rows"]}
        assert {("A7", k) for k in range(1, 8)} <= groups
        assert {("B4", 1), ("C4", 4), ("D5", 1), ("D5", 5),
                ("E6", 1), ("E7", 7)} <= groups
        for row in report["rows"]:
            assert row["pass"], row
        _announce("criterion-05 cominuscule cotangent table", started)


class TestCriterion06SpinorAndE6:
    def test_spinor_and_exceptional_wedges(self):
        started = time.monotonic()
        _run("spinor-wedge2", {"n": 5})
        _run("spinor-d5-wedge4")
        rep = _run("cayley-wedge2")
        e6 = build_root_system("E6")
        assert weyl_dim(e6, (0, 0, 1, 0, 0, 0)) == 351 == comb(27, 2)
        rep4 = _run("cayley-wedge4")
        assert weyl_dim(e6, (0, 1, 0, 0, 1, 0)) == 17550 == comb(27, 4)
        elapsed = time.monotonic() - started
        assert elapsed < 300.0
        _announce("criterion-06 spinor and 27-dimensional wedges", started)


class TestCriterion07FreudenthalSquare:
    def test_trivial_summand_families(self):
        started = time.monotonic()
        for case_id in ("legendrian-trivial-c3", "legendrian-trivial-a5",
                        "legendrian-trivial-d6", "legendrian-trivial-e7"):
            report = _run(case_id)
            assert report["trivial_mult"] == 1
        rank = _run("contact-rank")
        assert rank["rank"] == 20 == rank["dim_w"]
        _announce("criterion-07a invariant-plus-irreducible splittings",
                  started)

    def test_wedge4_consistency_including_slow_e7(self):
        started = time.monotonic()
        for case_id in ("legendrian-wedge4-c3", "legendrian-wedge4-a5",
                        "legendrian-wedge4-d6", "legendrian-wedge4-e7"):
            _run(case_id)
        _announce("criterion-07b wedge^4 = wedge^2 + three-form sections",
                  started)


class TestCriterion08LinesAndProducts:
    def test_symplectic_lines(self):
        started = time.monotonic()
        for r in (3, 4, 5):
            report = _run(f"symplectic-lines-c{r}")
            weights = {tuple(t["weight"]) for t in report["computed"]}
            adjoint = tuple(2 if i == 0 else 0 for i in range(r))
            assert adjoint in weights
        _announce("criterion-08a symplectic lines r = 3,4,5", started)

    @pytest.mark.xfail(
        strict=True,
        reason="the printed splitting V[2l1] + V[l3] fails dimension "
               "bookkeeping (21 + 14 != 91 at rank 3); the verified "
               "decomposition is V[2l1] + V[l1+l3]")
    def test_symplectic_lines_as_printed(self):
        rs = build_root_system("C3")
        chi = freudenthal_character(rs, (0, 1, 0))
        dec = decompose_character(wedge_power(chi, 2))
        assert dec.terms == {(2, 0, 0): 1, (0, 0, 1): 1}

    def test_strictness_and_products(self):
        started = time.monotonic()
        for case_id in ("lagrangian-strict", "lagrangian-strict-c4",
                        "og-lines-strict"):
            report = _run(case_id)
            assert report["strict"]
        report = _run("prod-PP-wedge4")
        weights = {tuple(t["weight"]) for t in report["computed"]}
        assert (0, 2, 0, 0, 2, 0) in weights  # the extra kernel summand
        _run("prod-PP-wedge2")
        _announce("criterion-08b strict inclusions and products", started)


class TestCriterion09Forms:
    def test_forms_block(self):
        started = time.monotonic()
        report = _run("forms-lemma22")
        assert report["display_scalar"] == "2"
        _run("forms-pencils")
        kernel = _run("forms-kernel-dims")
        for row in kernel["rows"]:
            assert row["dim"] == comb(row["n"] + 1, 2)
        _run("plucker-integrability")
        elapsed = time.monotonic() - started
        assert elapsed < 10.0
        _announce("criterion-09 twisted-form identities", started)


class TestCriterion10Pencils:
    def test_trichotomy_and_agreement(self):
        started = time.monotonic()
        report = _run("pencil-trichotomy", seed=20240)
        assert report["mismatches"] == []
        assert report["seed"] == 20240
        # the half-dimension-3 degeneration is surfaced, not hidden
        assert any(f["partition"] == [3] for f in report["flagged"])
        agreement = _run("pencil-agreement", seed=20240)
        assert agreement["checked"] == 100
        for case_id in ("pencil-1n-split", "pencil-211-split",
                        "pencil-22-obstructed", "pencil-3-block"):
            _run(case_id)
        elapsed = time.monotonic() - started
        assert elapsed < 120.0
        _announce("criterion-10 pencil trichotomy and agreement", started)

    @pytest.mark.xfail(
        strict=True,
        reason="the published obstruction claim for a single 3-block fails "
               "at half-dimension 3, where wedging with the nondegenerate "
               "2-vector is bijective; divisibility holds with an explicit "
               "solution and the splitting certificate rules out any a")
    def test_three_block_obstruction_as_published(self):
        from folcheck.pencil import build_canonical_pencil, divides_wedge_square
        pencil = build_canonical_pencil((3,), (7,))
        verdict, _ = divides_wedge_square(pencil.w, pencil.v)
        assert verdict is False


class TestCriterion11PropertySuites:
    def test_multiply_back_on_100_random_elements(self):
        started = time.monotonic()
        rng = random.Random(20240)
        from itertools import combinations
        basis = list(combinations(range(1, 7), 3))
        for _ in range(100):
            vec = extalg.MultiVector(6, 3, 4)
            for _ in range(5):
                vec.add_term(rng.sample(basis, 4),
                             Fraction(rng.randint(-6, 6)))
            lifted = extalg.lift_sym_square(extalg.psi_dual(vec))
            assert lifted == vec.scale(3)
        _announce("criterion-11a multiply-back is three times the identity",
                  started)

    def test_equivariance_under_20_random_operators(self):
        started = time.monotonic()
        rng = random.Random(20241)
        from itertools import combinations
        basis = list(combinations(range(1, 8), 3))
        for _ in range(20):
            r, s = rng.sample(range(1, 8), 2)
            x2 = extalg.MultiVector(7, 3, 2)
            x4 = extalg.MultiVector(7, 3, 4)
            for _ in range(4):
                x2.add_term(rng.sample(basis, 2), rng.randint(-5, 5))
                x4.add_term(rng.sample(basis, 4), rng.randint(-5, 5))
            assert extalg.sl_action(r, s, extalg.multiply_m(x2)) == \
                extalg.multiply_m(extalg.sl_action(r, s, x2))
            assert extalg.sl_action(r, s, extalg.psi_dual(x4)) == \
                extalg.psi_dual(extalg.sl_action(r, s, x4))
            sym = extalg.psi_dual(x4)
            assert extalg.sl_action(r, s, extalg.xi(sym)) == \
                extalg.xi(extalg.sl_action(r, s, sym))
        _announce("criterion-11b equivariance of the structure maps", started)

    def test_highest_weight_certification(self):
        started = time.monotonic()
        for tag, n in extalg.HW_TAGS.items():
            vec = extalg.build_hw_vector(tag, n)
            extalg.hw_vector_weight(vec)  # raises unless homogeneous
            for i in range(1, n):
                assert extalg.sl_action(i, i + 1, vec).is_zero(), (tag, i)
        _announce("criterion-11c highest-weight certification", started)

    def test_calculus_identities_on_100_random_forms(self):
        started = time.monotonic()
        rng = random.Random(20242)
        for _ in range(100):
            degree = rng.randint(1, 3)
            raw = pforms.PolyForm(3, 2, degree - 1)
            for _ in range(4):
                mono = [0] * 4
                for _ in range(degree - 1):
                    mono[rng.randrange(4)] += 1
                dx = tuple(sorted(rng.sample(range(4), 2)))
                raw.add_term(tuple(mono), dx, Fraction(rng.randint(-4, 4)))
            eta = pforms.PolyForm(3, 1, degree)
            for _ in range(4):
                mono = [0] * 4
                for _ in range(degree):
                    mono[rng.randrange(4)] += 1
                eta.add_term(tuple(mono), (rng.randrange(4),),
                             Fraction(rng.randint(-4, 4)))
            omega = pforms.contract_radial(raw)
            assert pforms.contract_radial(omega).is_zero()
            assert pforms.exterior_derivative(
                pforms.exterior_derivative(eta)).is_zero()
            lhs = pforms.exterior_derivative(pforms.wedge_forms(omega, eta))
            rhs = pforms.wedge_forms(
                pforms.exterior_derivative(omega), eta) + \
                pforms.wedge_forms(
                    omega, pforms.exterior_derivative(eta)).scale(-1)
            assert lhs == rhs
            if not omega.is_zero():
                assert pforms.euler_identity_check(omega)
        _announce("criterion-11d calculus identities on random forms", started)

    def test_round_trip_on_emitted_decompositions(self):
        started = time.monotonic()
        samples = [
            ("A7", (0, 0, 1, 0, 0, 0, 0), 2),
            ("A5", (0, 1, 0, 0, 0), 4),
            ("C3", (0, 0, 1), 2),
            ("D5", (0, 0, 0, 0, 1), 4),
            ("E6", (1, 0, 0, 0, 0, 0), 2),
            ("A3xA3", (1, 0, 0, 1, 0, 0), 2),
        ]
        for name, lam, degree in samples:
            rs = build_root_system(name)
            chi = wedge_power(freudenthal_character(rs, lam), degree)
            dec = decompose_character(chi)
            assert recombine_dominant(dec) == chi.dominant_entries()
            assert dec.total_dim() == chi.mass()
            if chi.mass() < 5000:
                assert recombine(dec) == chi
        _announce("criterion-11e decompose/recombine round trips", started)
