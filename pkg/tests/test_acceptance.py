"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Criterion 9 asserts a uniqueness claim that the cross-checked
enumeration disproves (three solutions instead of one); it is kept as
stated and fails honestly.  See the analysis in the solver tests.
"""

import itertools
import random
import time
from contextlib import contextmanager

from bredon import (
    ConstraintSet,
    GradedDims,
    M2Element,
    MaximalityClass,
    ZERO,
    borel_classify,
    catalog_get,
    classify,
    enumerate_decompositions,
    fixed_poincare_polynomial,
    hodge_birank_check,
    hodge_expressive_check,
    krasnov_predict,
    m2_basis,
    pd_symmetric,
    rho_localize,
    smith_thom_report,
    tau_localize,
    threefold_predict,
)

from bruteforce import brute_force_decompositions

M = MaximalityClass.MAXIMAL
GM = MaximalityClass.GALOIS_MAXIMAL_ONLY
NEITHER = MaximalityClass.NEITHER


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d}: FAIL - {description}")
        raise
    print(f"criterion {number:2d}: PASS - {description}")


def valid_k3_parameters():
    pairs = []
    for b_star in range(0, 25, 2):
        for chi in range(-b_star, b_star + 1, 2):
            if (b_star + chi) % 4 == 0 and b_star + chi >= 4:
                pairs.append((b_star, chi))
    return pairs


def test_criterion_01_classification_table():
    with criterion(1, "catalog classification table"):
        for n in range(7):
            assert classify(catalog_get("projective_space", n=n).module) is M
        assert classify(catalog_get("elliptic_curve").module) is M
        for g in range(7):
            for r in range(g + 1):
                expected = M if r == g else GM
                assert classify(catalog_get("curve", g=g, r=r).module) is expected
        assert classify(catalog_get("severi_brauer_1").module) is NEITHER
        for k in range(4):
            assert classify(catalog_get("severi_brauer_odd", k=k).module) is NEITHER
        for b_star, chi in valid_k3_parameters():
            expected = M if b_star == 24 else GM
            assert classify(catalog_get("k3", b_star=b_star, chi=chi).module) is expected
        assert classify(catalog_get("cubic_threefold_s3_rp3").module) is GM


def test_criterion_02_smith_thom_ledgers():
    with criterion(2, "Smith-Thom ledgers for k3(4,4) and severi_brauer_1"):
        k3 = smith_thom_report(catalog_get("k3", b_star=4, chi=4).module)
        assert (
            k3.fixed_total,
            k3.group_cohomology_total,
            k3.singular_total,
        ) == (4, 4, 24)
        sb1 = smith_thom_report(catalog_get("severi_brauer_1").module)
        assert (
            sb1.fixed_total,
            sb1.group_cohomology_total,
            sb1.singular_total,
        ) == (0, 2, 2)


def test_criterion_03_fixed_point_betti():
    with criterion(3, "fixed-point Betti numbers across the catalog"):
        for b_star, chi in valid_k3_parameters():
            poly = fixed_poincare_polynomial(
                catalog_get("k3", b_star=b_star, chi=chi).module
            )
            assert poly.total() == b_star
            assert poly.alternating_sum() == chi
        p2 = fixed_poincare_polynomial(catalog_get("projective_space", n=2).module)
        assert [p2.coefficient(k) for k in range(3)] == [1, 1, 1]
        for g in range(7):
            for r in range(g + 1):
                poly = fixed_poincare_polynomial(catalog_get("curve", g=g, r=r).module)
                assert poly.coefficient(0) == r + 1
                assert poly.coefficient(1) == r + 1
                assert poly.total() == 2 * (r + 1)


def test_criterion_04_substitution_identity(module_corpus):
    with criterion(4, "P_fixed(t) = R(t, 1/t) on >= 1000 random modules"):
        assert len(module_corpus) >= 1000
        for m in module_corpus:
            assert fixed_poincare_polynomial(m).to_graded_dims() == rho_localize(m)


def test_criterion_05_borel_agreement(module_corpus):
    with criterion(5, "Borel-route classification agrees on the corpus"):
        for m in module_corpus:
            assert borel_classify(tau_localize(m)) is classify(m)


def test_criterion_06_smith_thom_chain(module_corpus):
    with criterion(6, "fixed <= group cohomology <= singular on the corpus"):
        for m in module_corpus:
            report = smith_thom_report(m)
            assert (
                report.fixed_total
                <= report.group_cohomology_total
                <= report.singular_total
            )


def test_criterion_07_duality_symmetry():
    with criterion(7, "duality symmetry across real-manifold entries"):
        entries = [
            catalog_get("point"),
            catalog_get("elliptic_curve"),
            catalog_get("severi_brauer_1"),
            catalog_get("k3_hodge_expressive"),
            catalog_get("cubic_threefold_s3_rp3"),
        ]
        entries += [catalog_get("representation_sphere", p=2 * q, q=q) for q in range(4)]
        entries += [catalog_get("projective_space", n=n) for n in range(7)]
        entries += [
            catalog_get("curve", g=g, r=r) for g in range(5) for r in range(g + 1)
        ]
        entries += [catalog_get("severi_brauer_odd", k=k) for k in range(4)]
        entries += [
            catalog_get("k3", b_star=b, chi=c) for b, c in valid_k3_parameters()
        ]
        for entry in entries:
            assert entry.is_real_manifold, entry.name
            assert pd_symmetric(entry.module, entry.dimension).holds, entry.name

        twisted = catalog_get("twisted_plane")
        report = pd_symmetric(twisted.module, 1)
        assert not report.holds
        assert [(v.key, v.mirror) for v in report.violations] == [((1, 1), (1, 0))]


def test_criterion_08_k3_solver_uniqueness():
    with criterion(8, "K3 constraint search returns exactly the known module"):
        cs = ConstraintSet(
            dimension=2,
            betti_total=GradedDims.from_list([1, 0, 22, 0, 1]),
            betti_fixed=GradedDims.from_list([2, 0, 2]),
            has_fixed_point=True,
            connected=True,
            poincare_dual=True,
        )
        start = time.monotonic()
        solutions = enumerate_decompositions(cs)
        elapsed = time.monotonic() - start
        assert elapsed < 60.0
        assert solutions == [catalog_get("k3", b_star=4, chi=4).module]


def test_criterion_09_cubic_solver_uniqueness():
    """Stated claim: with surjectivity at degree 4, exactly the known module.

    The verified behavior (pruned search and unpruned brute force agree) is
    THREE constraint-satisfying modules, all Galois-Maximal, containing the
    known one; the classical derivation's weight assignments rely on
    geometric input (a real line on the cubic) that the constraint data
    cannot express.  The final assertion is kept as stated and fails.
    """
    with criterion(9, "cubic constraint search: uniqueness as stated"):
        betti = GradedDims.from_list([1, 0, 1, 10, 1, 0, 1])
        fixed = GradedDims.from_list([2, 1, 1, 2])
        with_hypothesis = ConstraintSet(
            dimension=3,
            betti_total=betti,
            betti_fixed=fixed,
            has_fixed_point=True,
            connected=True,
            poincare_dual=True,
            forgetful_onto_degrees=frozenset({4}),
        )
        without_hypothesis = ConstraintSet(
            dimension=3,
            betti_total=betti,
            betti_fixed=fixed,
            has_fixed_point=True,
            connected=True,
            poincare_dual=True,
        )
        start = time.monotonic()
        narrowed = enumerate_decompositions(with_hypothesis)
        full = enumerate_decompositions(without_hypothesis)
        assert time.monotonic() - start < 60.0

        # counts verified against the independent unpruned brute force
        assert narrowed == brute_force_decompositions(with_hypothesis)
        assert full == brute_force_decompositions(without_hypothesis)

        # without the surjectivity hypothesis: >= 2 solutions, at least one
        # NEITHER-classified containing a 1-sphere summand
        assert len(full) >= 2
        neither = [m for m in full if classify(m) is NEITHER]
        assert any(
            any(n == 1 for _, n, _ in m.antipodal) for m in neither
        )

        cubic = catalog_get("cubic_threefold_s3_rp3").module
        assert cubic in narrowed
        assert narrowed == [cubic], (
            "uniqueness claim disproved: the constraint predicate admits "
            f"{len(narrowed)} modules (cross-checked by the unpruned brute "
            "force); the extra solutions permute free weights in ways the "
            "Betti/duality/surjectivity data cannot distinguish"
        )


def test_criterion_10_theorem_property():
    with criterion(10, "GM criteria hold on all enumerated random instances"):
        rng = random.Random(987654)
        surface_solutions = 0
        for _ in range(200):
            b2 = rng.randint(0, 22)
            cs = ConstraintSet(
                dimension=2,
                betti_total=GradedDims.from_list([1, 0, b2, 0, 1]),
                has_fixed_point=True,
                connected=True,
                poincare_dual=True,
            )
            prediction = krasnov_predict(cs)
            assert prediction.applicable
            for m in enumerate_decompositions(cs):
                assert prediction.admits(classify(m)), m
                surface_solutions += 1
        assert surface_solutions > 0

        threefold_solutions = 0
        for _ in range(200):
            b2 = rng.randint(0, 4)
            b3 = rng.randint(0, 8)
            cs = ConstraintSet(
                dimension=3,
                betti_total=GradedDims.from_list([1, 0, b2, b3, b2, 0, 1]),
                has_fixed_point=True,
                connected=True,
                poincare_dual=True,
                forgetful_onto_degrees=frozenset({4}),
            )
            prediction = threefold_predict(cs)
            assert prediction.applicable
            for m in enumerate_decompositions(cs):
                assert prediction.admits(classify(m)), m
                threefold_solutions += 1
        assert threefold_solutions > 0


def test_criterion_11_hodge_expressivity():
    with criterion(11, "Hodge-expressivity and rank-level checks"):
        he = catalog_get("k3_hodge_expressive")
        spheres = catalog_get("k3", b_star=4, chi=4)
        assert hodge_expressive_check(he.module, he.hodge_polynomial, True)
        assert not hodge_expressive_check(
            spheres.module, spheres.hodge_polynomial, True
        )
        assert hodge_birank_check(he.module, he.hodge_polynomial)
        for n in range(5):
            entry = catalog_get("projective_space", n=n)
            assert hodge_birank_check(entry.module, entry.hodge_polynomial)


def test_criterion_12_point_ring_table():
    with criterion(12, "exhaustive point-ring multiplication table"):
        basis = [ZERO] + list(m2_basis(6))
        one = M2Element.pos(0, 0)
        for x in basis:
            assert x * one == x
        for x, y in itertools.product(basis, repeat=2):
            assert x * y == y * x
        for x, y, z in itertools.product(basis, repeat=3):
            assert (x * y) * z == x * (y * z)
        rho, tau, theta = M2Element.pos(1, 0), M2Element.pos(0, 1), M2Element.neg(0, 0)
        assert rho * theta == ZERO and tau * theta == ZERO and theta * theta == ZERO
        for r, s, a, b in itertools.product(range(7), repeat=4):
            product = M2Element.neg(r, s) * M2Element.pos(a, b)
            if a <= r and b <= s:
                assert product == M2Element.neg(r - a, s - b)
            else:
                assert product == ZERO
