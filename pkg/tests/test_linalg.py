"""Tests for exact integer/rational linear algebra."""

import random
from fractions import Fraction

import pytest

from momentangle.errors import CompositionError
from momentangle.linalg import (
    HomologyResult,
    IntMatrix,
    homology_of_pair,
    invariant_factor_chain,
    nullspace_rational,
    quotient_representatives,
    rank,
    smith_normal_form,
    smith_with_transforms,
)


def random_matrix(rng, nrows, ncols, lo=-3, hi=3, density=0.6):
    M = IntMatrix(nrows, ncols)
    for i in range(nrows):
        for j in range(ncols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    M.rows[i][j] = v
    return M


def mat_eq_dense(dense_a, dense_b):
    return dense_a == dense_b


def dense_mul(A, B):
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]) if B else 0)]
        for i in range(len(A))
    ]


def test_matmul_and_transpose():
    A = IntMatrix.from_rows([[1, 2], [3, 4]])
    B = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert A.matmul(B).to_rows() == [[2, 1], [4, 3]]
    assert A.transpose().to_rows() == [[1, 3], [2, 4]]


def test_rank_examples():
    assert rank(IntMatrix.from_rows([[1, -1], [2, -2]])) == 1
    assert rank(IntMatrix.from_rows([[2]])) == 1
    assert rank(IntMatrix(3, 4)) == 0
    assert rank(IntMatrix.from_rows([[1, 0, 2], [0, 1, 3], [1, 1, 5]])) == 2


def test_smith_normal_form_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])) == (1, 6)
    assert smith_normal_form(IntMatrix.from_rows([[0]])) == ()
    assert smith_normal_form(IntMatrix.from_rows([[2]])) == (2,)
    assert smith_normal_form(IntMatrix(0, 5)) == ()
    assert smith_normal_form(IntMatrix.from_rows([[1, 0], [0, 6]])) == (1, 6)


def test_smith_factors_form_divisibility_chain():
    rng = random.Random(7)
    for _ in range(60):
        M = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        f = smith_normal_form(M)
        for a, b in zip(f, f[1:]):
            assert b % a == 0
        assert all(x > 0 for x in f)
        assert len(f) == rank(M)


def test_smith_invariant_under_permutation():
    rng = random.Random(11)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        M = random_matrix(rng, m, n)
        rows = M.to_rows()
        rng.shuffle(rows)
        cols = list(range(n))
        rng.shuffle(cols)
        P = IntMatrix.from_rows([[row[j] for j in cols] for row in rows])
        assert smith_normal_form(M) == smith_normal_form(P)


def test_smith_transforms_are_exact():
    rng = random.Random(13)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        M = random_matrix(rng, m, n)
        factors, U, Uinv, V, Vinv = smith_with_transforms(M)
        D = dense_mul(dense_mul(U, M.to_rows()), V)
        for i in range(m):
            for j in range(n):
                want = factors[i] if i == j and i < len(factors) else 0
                assert D[i][j] == want
        eye_m = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        eye_n = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        assert dense_mul(U, Uinv) == eye_m
        assert dense_mul(V, Vinv) == eye_n


def test_homology_torsion_only():
    # Z --2--> Z --> 0 gives Z/2
    d_in = IntMatrix.from_rows([[2]])
    d_out = IntMatrix(0, 1)
    H = homology_of_pair(d_in, d_out)
    assert H == HomologyResult(0, (2,), ())


def test_homology_free_with_representative():
    # 0 --> Z^2 --[1,-1]--> Z gives Z with cycle (1, 1)
    d_in = IntMatrix(2, 0)
    d_out = IntMatrix.from_rows([[1, -1]])
    H = homology_of_pair(d_in, d_out)
    assert H.rank == 1
    assert H.torsion == ()
    assert len(H.representatives) == 1
    a, b = H.representatives[0]
    assert a == b and abs(a) == 1


def test_homology_circle():
    # simplicial circle on 3 vertices: edges 12, 13, 23
    # boundary of edge {a,b} is b - a
    d_out = IntMatrix.from_rows([
        [-1, -1, 0],
        [1, 0, -1],
        [0, 1, 1],
    ])
    d_in = IntMatrix(3, 0)
    H = homology_of_pair(d_in, d_out)
    assert H.rank == 1 and H.torsion == ()
    v = H.representatives[0]
    # the cycle must be a generator: edge12 - edge13 + edge23 up to sign
    assert sorted(map(abs, v)) == [1, 1, 1]


def test_homology_rejects_bad_composition():
    d_in = IntMatrix.from_rows([[1], [0]])
    d_out = IntMatrix.from_rows([[1, 0]])
    with pytest.raises(CompositionError):
        homology_of_pair(d_in, d_out)


def integral_kernel_columns(rng, d_out):
    """Columns lying in ker(d_out), scaled to integers, some doubled or dropped."""
    from math import gcd

    cols = []
    for vec in nullspace_rational(d_out):
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        scale = rng.randint(0, 2)
        if scale:
            cols.append([int(x * lcm) * scale for x in vec])
    return cols


def test_homology_rational_matches_integer_rank():
    rng = random.Random(17)
    for _ in range(25):
        mid = rng.randint(1, 5)
        d_out = random_matrix(rng, rng.randint(0, 4), mid)
        cols = integral_kernel_columns(rng, d_out)
        d_in = IntMatrix.from_columns(mid, cols) if cols else IntMatrix(mid, 0)
        HZ = homology_of_pair(d_in, d_out, ring="Z")
        HQ = homology_of_pair(d_in, d_out, ring="Q")
        assert HQ.rank == HZ.rank
        assert HQ.torsion == ()
        assert len(HQ.representatives) == HQ.rank


def test_representatives_are_independent_cycles():
    rng = random.Random(19)
    for _ in range(25):
        mid = rng.randint(1, 5)
        d_out = random_matrix(rng, rng.randint(0, 4), mid)
        cols = integral_kernel_columns(rng, d_out)
        d_in = IntMatrix.from_columns(mid, cols) if cols else IntMatrix(mid, 0)
        H = homology_of_pair(d_in, d_out)
        for v in H.representatives:
            image = [d_out.entry(i, 0) * 0 for i in range(d_out.nrows)]
            for i in range(d_out.nrows):
                image[i] = sum(d_out.entry(i, j) * v[j] for j in range(mid))
            assert not any(image)
        # classes stay independent modulo the image of d_in
        reps = quotient_representatives(
            [tuple(map(Fraction, v)) for v in H.representatives],
            [d_in.column(j) for j in range(d_in.ncols)],
        )
        assert len(reps) == H.rank


def test_nullspace_rational():
    M = IntMatrix.from_rows([[1, 2, 3]])
    basis = nullspace_rational(M)
    assert len(basis) == 2
    for v in basis:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    assert nullspace_rational(IntMatrix.from_rows([[1, 0], [0, 1]])) == []


def test_quotient_representatives_streaming():
    vectors = [(1, 0, 0), (0, 0, 1), (1, 1, 0)]
    modulo = [(1, -1, 0)]
    reps = quotient_representatives(vectors, modulo)
    # (1,1,0) is 2*(1,0,0) modulo (1,-1,0), so only the first two survive
    assert reps == [(1, 0, 0), (0, 0, 1)]
    assert quotient_representatives([(2, 2)], [(1, 1)]) == []
    assert quotient_representatives([(0, 0)], []) == []


def test_invariant_factor_chain():
    assert invariant_factor_chain([]) == ()
    assert invariant_factor_chain([2]) == (2,)
    assert invariant_factor_chain([2, 3]) == (6,)
    assert invariant_factor_chain([2, 2]) == (2, 2)
    assert invariant_factor_chain([2, 4, 3]) == (2, 12)
    assert invariant_factor_chain([6, 4]) == (2, 12)
    with pytest.raises(ValueError):
        invariant_factor_chain([1])


def test_invariant_factor_chain_matches_smith():
    # the chain of a diagonal matrix's cyclic parts equals its Smith factors > 1
    rng = random.Random(23)
    for _ in range(30):
        diag = [rng.choice([2, 3, 4, 5, 6, 8, 9, 12]) for _ in range(rng.randint(1, 4))]
        M = IntMatrix(len(diag), len(diag))
        for i, d in enumerate(diag):
            M.rows[i][i] = d
        smith_torsion = tuple(f for f in smith_normal_form(M) if f > 1)
        assert invariant_factor_chain(diag) == smith_torsion
