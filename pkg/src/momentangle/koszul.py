"""Koszul-type cochain algebra attached to a simplicial complex.

The algebra has, for every vertex i, an odd generator of bidegree (-1, 2)
and an even generator of bidegree (0, 2); squares of either vanish, a
product of even generators survives only when its support is a face, and
the differential sends each odd generator to its even partner.  A monomial
is determined by the set of odd indices (`exterior`) and the set of even
indices (`face`), which must be disjoint.  The monomial with exterior set
of size p and face of size q - p sits in bidegree (-p, 2q); this module
keys everything by the pair (p, q) of nonnegative integers and the chain
convention is that the differential lowers p by one while fixing q.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .linalg import HomologyResult, IntMatrix, homology_of_pair
from .simplicial import SimplicialComplex, face_key


@dataclass(frozen=True, order=True)
class Bidegree:
    """Cohomological position (-p, 2q), stored as nonnegative (p, q)."""

    p: int
    q: int

    @property
    def total(self) -> int:
        """Total cohomological degree 2q - p."""
        return 2 * self.q - self.p


@dataclass(frozen=True)
class KoszulMonomial:
    """Product of odd generators over `exterior` and even ones over `face`."""

    exterior: tuple
    face: tuple

    def __post_init__(self):
        if set(self.exterior) & set(self.face):
            raise ValueError(f"index sets overlap: {self.exterior} and {self.face}")

    def bidegree(self) -> Bidegree:
        p = len(self.exterior)
        return Bidegree(p, p + len(self.face))


# a cochain is a finite integer combination of monomials
KoszulElement = dict


def koszul_basis(K: SimplicialComplex, p: int, q: int) -> tuple:
    """Basis monomials in bidegree (p, q), sorted by (exterior, face).

    These are the monomials whose face part is a member of K of size
    q - p and whose exterior part is a p-subset of the remaining vertices.
    """
    size = q - p
    if p < 0 or size < 0:
        return ()
    basis = []
    for J in K.faces_of_size(size):
        rest = [v for v in range(1, K.n + 1) if v not in J]
        for I in combinations(rest, p):
            basis.append(KoszulMonomial(I, J))
    basis.sort(key=lambda m: (face_key(m.exterior), face_key(m.face)))
    return tuple(basis)


def koszul_differential(K: SimplicialComplex, m: KoszulMonomial) -> KoszulElement:
    """Differential of a monomial, as a monomial-to-coefficient dict.

    Each odd index moves to the even side with an alternating sign; terms
    whose new even support is not a face of K are relations and vanish.
    """
    out: KoszulElement = {}
    I, J = m.exterior, m.face
    for k, i in enumerate(I, start=1):
        new_face = tuple(sorted(J + (i,)))
        if not K.has_face(new_face):
            continue
        term = KoszulMonomial(tuple(v for v in I if v != i), new_face)
        sign = 1 if k % 2 else -1
        out[term] = out.get(term, 0) + sign
        if not out[term]:
            del out[term]
    return out


def apply_differential(K: SimplicialComplex, element: KoszulElement) -> KoszulElement:
    """Extend the differential linearly to a combination of monomials."""
    out: KoszulElement = {}
    for m, c in element.items():
        if not c:
            continue
        for term, sign in koszul_differential(K, m).items():
            v = out.get(term, 0) + c * sign
            if v:
                out[term] = v
            else:
                del out[term]
    return out


def differential_matrix(K: SimplicialComplex, p: int, q: int) -> IntMatrix:
    """Matrix of the differential from bidegree (p, q) to (p - 1, q)."""
    source = koszul_basis(K, p, q)
    target = koszul_basis(K, p - 1, q)
    index = {m: i for i, m in enumerate(target)}
    M = IntMatrix(len(target), len(source))
    for j, m in enumerate(source):
        for term, sign in koszul_differential(K, m).items():
            M.add(index[term], j, sign)
    return M


def koszul_cohomology(K: SimplicialComplex, p: int, q: int, ring: str = "Z",
                      want_representatives: bool = True) -> HomologyResult:
    """Cohomology of the algebra in bidegree (-p, 2q).

    Representative vectors are coordinates over koszul_basis(K, p, q).
    """
    d_out = differential_matrix(K, p, q)
    d_in = differential_matrix(K, p + 1, q)
    return homology_of_pair(d_in, d_out, ring=ring,
                            want_representatives=want_representatives)


def koszul_bigraded(K: SimplicialComplex, ring: str = "Z") -> dict:
    """All nonzero cohomology groups, keyed by (p, q).

    Values are HomologyResult without representatives; use
    koszul_cohomology for a single bidegree with cycles.
    """
    max_face = max(len(f) for f in K.faces)
    table = {}
    for q in range(0, K.n + 1):  # exterior and face parts are disjoint, so q <= n
        for p in range(max(0, q - max_face), q + 1):
            if not koszul_basis(K, p, q):
                continue
            H = koszul_cohomology(K, p, q, ring=ring, want_representatives=False)
            if H.rank or H.torsion:
                table[(p, q)] = H
    return table
