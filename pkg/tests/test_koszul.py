"""Tests for the cochain algebra engine."""

import random
from itertools import combinations
from math import comb

import pytest

from momentangle.koszul import (
    Bidegree,
    KoszulMonomial,
    apply_differential,
    differential_matrix,
    koszul_basis,
    koszul_bigraded,
    koszul_cohomology,
    koszul_differential,
)
from momentangle.simplicial import SimplicialComplex, enumerate_complexes


def two_points():
    return SimplicialComplex.from_facets(2, [[1], [2]])


def square():
    return SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def test_bidegree_total():
    assert Bidegree(0, 0).total == 0
    assert Bidegree(1, 2).total == 3
    assert Bidegree(2, 4).total == 6


def test_monomial_rejects_overlap():
    with pytest.raises(ValueError):
        KoszulMonomial((1,), (1, 2))


def test_basis_ordering_two_points():
    basis = koszul_basis(two_points(), 1, 2)
    assert basis == (
        KoszulMonomial((1,), (2,)),
        KoszulMonomial((2,), (1,)),
    )


def test_basis_counts():
    # |basis(p, q)| = sum over faces J of size q - p of C(n - |J|, p)
    for K in (two_points(), square()):
        for p in range(0, K.n + 1):
            for q in range(p, K.n + 1):
                want = sum(
                    comb(K.n - (q - p), p)
                    for J in K.faces_of_size(q - p)
                )
                assert len(koszul_basis(K, p, q)) == want


def test_basis_empty_outside_range():
    assert koszul_basis(two_points(), 2, 1) == ()
    assert koszul_basis(two_points(), -1, 0) == ()


def test_differential_drops_non_faces():
    # in the two-point complex, {1, 2} is not a face, so both cycles survive
    K = two_points()
    assert koszul_differential(K, KoszulMonomial((1,), (2,))) == {}
    assert koszul_differential(K, KoszulMonomial((2,), (1,))) == {}


def test_differential_alternating_signs():
    # full simplex on 2 vertices: both moves land on faces
    K = SimplicialComplex.from_facets(2, [[1, 2]])
    m = KoszulMonomial((1, 2), ())
    assert koszul_differential(K, m) == {
        KoszulMonomial((2,), (1,)): 1,
        KoszulMonomial((1,), (2,)): -1,
    }


def test_differential_squares_to_zero_randomized():
    rng = random.Random(5)
    complexes = list(enumerate_complexes(3))
    for _ in range(200):
        K = rng.choice(complexes)
        p = rng.randint(0, 3)
        q = rng.randint(p, 3)
        basis = koszul_basis(K, p, q)
        if not basis:
            continue
        element = {m: rng.randint(-2, 2) for m in basis}
        assert apply_differential(K, apply_differential(K, element)) == {}


def test_differential_matrix_shape_and_example():
    K = SimplicialComplex.from_facets(2, [[1, 2]])
    M = differential_matrix(K, 2, 2)
    # source u_{12}, target basis sorted: [u_1 v_2, u_2 v_1]
    assert (M.nrows, M.ncols) == (2, 1)
    assert M.column(0) == (-1, 1)


def test_point_complex_cohomology():
    K = SimplicialComplex(1, [()])
    assert koszul_bigraded(K) == {
        (0, 0): koszul_cohomology(K, 0, 0, want_representatives=False),
        (1, 1): koszul_cohomology(K, 1, 1, want_representatives=False),
    }
    H = koszul_cohomology(K, 1, 1)
    assert H.rank == 1 and H.torsion == ()


def test_two_points_cohomology():
    table = koszul_bigraded(two_points())
    assert {(k, (v.rank, v.torsion)) for k, v in table.items()} == {
        ((0, 0), (1, ())),
        ((1, 2), (1, ())),
    }


def test_full_simplex_is_acyclic():
    K = SimplicialComplex.from_facets(3, [[1, 2, 3]])
    table = koszul_bigraded(K)
    assert set(table) == {(0, 0)}
    assert table[(0, 0)].rank == 1


def test_triangle_boundary_cohomology():
    K = SimplicialComplex.from_facets(3, [[1, 2], [2, 3], [1, 3]])
    table = koszul_bigraded(K)
    assert {(k, v.rank) for k, v in table.items()} == {((0, 0), 1), ((1, 3), 1)}


def test_square_cohomology():
    table = koszul_bigraded(square())
    assert {(k, (v.rank, v.torsion)) for k, v in table.items()} == {
        ((0, 0), (1, ())),
        ((1, 2), (2, ())),
        ((2, 4), (1, ())),
    }


def test_representatives_are_cocycles():
    K = square()
    H = koszul_cohomology(K, 1, 2)
    basis = koszul_basis(K, 1, 2)
    d_out = differential_matrix(K, 1, 2)
    assert H.rank == 2
    for vec in H.representatives:
        element = {m: c for m, c in zip(basis, vec) if c}
        assert apply_differential(K, element) == {}
        for i in range(d_out.nrows):
            assert sum(d_out.entry(i, j) * vec[j] for j in range(len(vec))) == 0


def test_rational_ranks_match_integer():
    rng = random.Random(9)
    complexes = list(enumerate_complexes(3))
    for K in rng.sample(complexes, 10):
        zt = {k: v.rank for k, v in koszul_bigraded(K, ring="Z").items()}
        qt = {k: v.rank for k, v in koszul_bigraded(K, ring="Q").items()}
        assert zt == qt
