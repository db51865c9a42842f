"""Acceptance gate: the nine end-to-end criteria, one visible line each.

Each test prints ``CRITERION k: PASS``/``FAIL`` through the capture
escape hatch so the line is visible in normal pytest runs, and enforces
the runtime budget where one applies.
"""

import random
import time
from contextlib import contextmanager

import pytest

import test_properties as props
from momentangle.cech import build_resolvent, validate_resolvent
from momentangle.cells import homology_cycle_basis
from momentangle.hochster import hochster_cohomology
from momentangle.koszul import koszul_bigraded, koszul_cohomology
from momentangle.linalg import determinant_rational
from momentangle.logforms import (
    LogCochain,
    block_tuples,
    log_cohomology_basis,
    log_cohomology_dim,
    period_of_cycle,
)
from momentangle.report import betti_table, filtration_dims
from momentangle.simplicial import SimplicialComplex, enumerate_complexes


@contextmanager
def criterion(capsys, number: int, label: str, budget: float = None):
    start = time.monotonic()
    try:
        yield
        elapsed = time.monotonic() - start
        if budget is not None and elapsed >= budget:
            raise AssertionError(
                f"budget exceeded: {elapsed:.2f}s, allowed {budget}s")
    except BaseException:
        with capsys.disabled():
            print(f"\nCRITERION {number}: FAIL — {label}")
        raise
    with capsys.disabled():
        print(f"\nCRITERION {number}: PASS ({elapsed:.2f}s) — {label}")


def punctured_line():
    return SimplicialComplex(1, {()})


def two_points():
    return SimplicialComplex.from_facets(2, [[1], [2]])


def square():
    return SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def projective_plane_six():
    return SimplicialComplex.from_facets(6, [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 5, 6], [3, 4, 6], [2, 4, 6], [2, 4, 5],
    ])


@pytest.fixture(scope="module")
def suite():
    """>= 20 complexes with n <= 4: every small one plus varied 4-vertex ones.

    The 4-vertex members are sampled among complexes with at most 11
    faces: larger ones only add rank-zero bidegrees whose cover-complex
    blocks grow combinatorially without exercising anything new.
    """
    complexes = []
    for n in (1, 2, 3):
        complexes.extend(enumerate_complexes(n))
    complexes.append(square())
    moderate = [K for K in enumerate_complexes(4)
                if len(K.faces) <= 11 and K.faces != square().faces]
    rng = random.Random(2024)
    complexes.extend(rng.sample(moderate, 9))
    return complexes


def _betti_ranks(K):
    return {pq: H.rank for pq, H in koszul_bigraded(K).items()}


def test_criterion_1_punctured_line(capsys):
    with criterion(capsys, 1, "punctured line: Betti and filtrations", 1.0):
        K = punctured_line()
        bt = betti_table(K)
        assert {pq: rank for pq, (rank, _) in bt.entries.items()} == {
            (0, 0): 1, (1, 1): 1}
        assert all(torsion == () for _, torsion in bt.entries.values())
        F, W = filtration_dims(bt, 1)
        assert F[1] == 1
        assert W[2] == 1
        assert W[1] == 0


def test_criterion_2_punctured_plane(capsys):
    with criterion(capsys, 2, "punctured plane: Betti and filtrations", 1.0):
        bt = betti_table(two_points())
        assert {pq: rank for pq, (rank, _) in bt.entries.items()} == {
            (0, 0): 1, (1, 2): 1}
        F, W = filtration_dims(bt, 3)
        assert F[2] == 1
        assert F[3] == 0
        assert W[4] == 1
        assert W[3] == 0


def test_criterion_3_square_boundary(capsys):
    with criterion(capsys, 3, "square boundary: a product of two 3-spheres", 1.0):
        bt = betti_table(square())
        assert {pq: rank for pq, (rank, _) in bt.entries.items()} == {
            (0, 0): 1, (1, 2): 2, (2, 4): 1}
        assert all(torsion == () for _, torsion in bt.entries.values())


def test_criterion_4_torsion_projective_plane(capsys):
    with criterion(capsys, 4, "6-vertex projective plane: 2-torsion at (3, 6)",
                   30.0):
        K = projective_plane_six()
        a = koszul_cohomology(K, 3, 6, ring="Z", want_representatives=False)
        b = hochster_cohomology(K, 3, 6, ring="Z")
        assert (a.rank, a.torsion) == (0, (2,))
        assert (b.rank, b.torsion) == (0, (2,))


def test_criterion_5_engine_agreement_all_n4(capsys):
    with criterion(capsys, 5,
                   "koszul = hochster on all 167 four-vertex complexes", 120.0):
        count = 0
        for K in enumerate_complexes(4):
            count += 1
            for q in range(0, 5):
                for p in range(0, q + 1):
                    a = koszul_cohomology(K, p, q, ring="Z",
                                          want_representatives=False)
                    b = hochster_cohomology(K, p, q, ring="Z")
                    assert (a.rank, a.torsion) == (b.rank, b.torsion), (K, p, q)
        assert count == 167


def test_criterion_6_cover_complex_dimensions(capsys, suite):
    with criterion(capsys, 6,
                   f"log-cover dimensions match ranks on {len(suite)} complexes",
                   600.0):
        assert len(suite) >= 20
        t_max = 4
        for K in suite:
            ranks = _betti_ranks(K)
            for q in range(0, K.n + 1):
                for p in range(0, q + 1):
                    if q - p > t_max:
                        continue
                    want = ranks.get((p, q), 0)
                    assert log_cohomology_dim(K, q, q - p) == want, (K, p, q)


def test_criterion_7_period_nondegeneracy_and_vanishing(capsys, suite):
    with criterion(capsys, 7,
                   "period matrices nondegenerate; mismatched pairings vanish"):
        for K in suite:
            ranks = _betti_ranks(K)
            nonzero = sorted(pq for pq, rank in ranks.items() if rank > 0)
            resolvents = {}
            bases = {}
            for (p, q) in nonzero:
                cycles = homology_cycle_basis(K, p, q)
                resolvents[(p, q)] = [build_resolvent(K, c, p=p, q=q)
                                      for c in cycles]
                bases[(p, q)] = log_cohomology_basis(K, q, q - p)

            for (p, q) in nonzero:
                rank = ranks[(p, q)]
                assert len(resolvents[(p, q)]) == rank
                assert len(bases[(p, q)]) == rank
                matrix = [[period_of_cycle(w, res).coefficient
                           for w in bases[(p, q)]]
                          for res in resolvents[(p, q)]]
                assert determinant_rational(matrix) != 0, (K, p, q)

                # classes from every other bidegree pair to exactly zero
                for other in nonzero:
                    if other == (p, q):
                        continue
                    for res in resolvents[(p, q)]:
                        for w in bases[other]:
                            assert period_of_cycle(w, res).is_zero(), \
                                (K, (p, q), other)

                # differentials of every lower cochain pair to exactly zero
                t = q - p
                if t >= 1:
                    from itertools import combinations
                    for I in combinations(range(1, K.n + 1), q):
                        for T in block_tuples(K, I, t - 1):
                            cochain = LogCochain(K, q, t - 1)
                            cochain.add(T, I, 1)
                            w = cochain.differential()
                            for res in resolvents[(p, q)]:
                                assert period_of_cycle(w, res).is_zero(), \
                                    (K, (p, q), I, T)


def test_criterion_8_resolvent_suite(capsys, suite):
    with criterion(capsys, 8, "every homology basis cycle resolves validly"):
        checked = 0
        for K in suite:
            for q in range(0, K.n + 1):
                for p in range(0, q + 1):
                    for cycle in homology_cycle_basis(K, p, q):
                        res = build_resolvent(K, cycle, p=p, q=q)
                        ok, message = validate_resolvent(K, res)
                        assert ok, (K, p, q, message)
                        checked += 1
        assert checked >= 20


def test_criterion_9_structural_properties(capsys):
    with criterion(capsys, 9,
                   "randomized structural identities, >= 1000 cases each"):
        props.test_algebra_differential_squares_to_zero()
        props.test_cell_boundary_squares_to_zero()
        props.test_cover_deletion_squares_to_zero()
        props.test_log_differential_squares_to_zero()
        props.test_boundary_commutes_with_cover_deletion()
        props.test_adjointness_of_differential_and_boundary()
        props.test_column_zero_cohomology_vanishes_positively()
        props.test_weight_filtration_shape({})
