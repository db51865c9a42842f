"""Logarithmic cochain model of the arrangement complement, and periods.

The third computational route.  A cochain of form degree r and cover
degree t assigns, to each (t + 1)-tuple of faces of the complex, a
combination of logarithmic forms dz_I/z_I over r-element index sets I;
the value at a tuple may only use index sets disjoint from the common
intersection of the tuple's faces.  The cochains alternate in the tuple,
the differential is the usual alternating sum over face deletions (values
at tuples that violate admissibility read as zero), and the form indices
never mix, so the complex splits into one block per index set.  Block
cohomology is computed honestly from the block matrices; no shortcut
through the nerve of the cover is taken anywhere.

Pairing a cochain against a resolvent integrates each tuple's form over
the matching chain entry; the only nonzero primitive integral is a full
torus against its own index set, contributing (2 pi i) per index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cech import Resolvent, canonical_tuple
from .cells import Cell
from .linalg import (
    IntMatrix,
    nullspace_rational,
    quotient_representatives,
    rank,
)
from .simplicial import SimplicialComplex, face_key


class LogCochain:
    """Alternating face-tuple family of admissible logarithmic r-forms."""

    __slots__ = ("K", "r", "t", "entries")

    def __init__(self, K: SimplicialComplex, r: int, t: int):
        if r < 0 or t < 0:
            raise ValueError(f"degrees must be nonnegative, got r={r}, t={t}")
        self.K = K
        self.r = r
        self.t = t
        self.entries: dict = {}  # canonical tuple -> {index set I: coefficient}

    def add(self, faces: tuple, I: tuple, coeff) -> None:
        """Accumulate coeff * dz_I/z_I at the given face tuple."""
        if len(faces) != self.t + 1:
            raise ValueError(f"expected {self.t + 1} faces, got {len(faces)}")
        for f in faces:
            if not self.K.has_face(f):
                raise ValueError(f"{f} is not a face")
        I = tuple(I)
        if len(I) != self.r or list(I) != sorted(set(I)):
            raise ValueError(f"index set {I} is not an increasing {self.r}-tuple")
        if I and (I[0] < 1 or I[-1] > self.K.n):
            raise ValueError(f"index set {I} outside 1..{self.K.n}")
        meet = set(faces[0])
        for f in faces[1:]:
            meet &= set(f)
        if meet & set(I):
            raise ValueError(
                f"dz_{I} is not admissible at {faces}: indices meet {sorted(meet)}")
        arranged, sign = canonical_tuple(faces)
        if sign == 0 or not coeff:
            return
        forms = self.entries.setdefault(arranged, {})
        v = forms.get(I, 0) + sign * coeff
        if v:
            forms[I] = v
        else:
            del forms[I]
            if not forms:
                del self.entries[arranged]

    def value(self, faces: tuple) -> dict:
        """Signed value at an arbitrary tuple, as {index set: coefficient}."""
        arranged, sign = canonical_tuple(faces)
        if sign == 0:
            return {}
        forms = self.entries.get(arranged, {})
        if sign == 1:
            return dict(forms)
        return {I: -v for I, v in forms.items()}

    def differential(self) -> "LogCochain":
        """Alternating sum over insertions of one more face of the complex."""
        out = LogCochain(self.K, self.r, self.t + 1)
        all_faces = self.K.faces_sorted()
        for S, forms in self.entries.items():
            present = set(S)
            for beta in all_faces:
                if beta in present:
                    continue
                j = 0
                while j < len(S) and face_key(S[j]) < face_key(beta):
                    j += 1
                T = S[:j] + (beta,) + S[j:]
                sign = -1 if j % 2 else 1
                for I, a in forms.items():
                    out.add(T, I, sign * a)
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, LogCochain)
            and self.K == other.K
            and (self.r, self.t) == (other.r, other.t)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"LogCochain(r={self.r}, t={self.t}, tuples={len(self.entries)})"


def block_tuples(K: SimplicialComplex, I: tuple, t: int) -> list:
    """Canonical (t + 1)-tuples of faces whose intersection misses I.

    These index the block of the index set I at cover degree t.
    """
    if t < 0:
        return []
    forbidden = set(I)
    out = []
    for T in combinations(K.faces_sorted(), t + 1):
        meet = set(T[0])
        for f in T[1:]:
            meet &= set(f)
            if not meet:
                break
        if not meet & forbidden:
            out.append(T)
    return out


def block_matrix(K: SimplicialComplex, I: tuple, t: int) -> IntMatrix:
    """Differential of the I-block from cover degree t to t + 1.

    Deleting a face may enlarge the intersection past admissibility; such
    deletions read as zero, which is exactly a missing row index here.
    """
    source = block_tuples(K, I, t)
    target = block_tuples(K, I, t + 1)
    index = {T: j for j, T in enumerate(source)}
    M = IntMatrix(len(target), len(source))
    for i, T in enumerate(target):
        for j in range(len(T)):
            S = T[:j] + T[j + 1:]
            col = index.get(S)
            if col is not None:
                M.add(i, col, -1 if j % 2 else 1)
    return M


def log_cohomology_dim(K: SimplicialComplex, r: int, t: int) -> int:
    """Dimension of the degree-t cohomology of the form-degree-r complex.

    Sums the honest block computations over every r-element index set.
    """
    total = 0
    for I in combinations(range(1, K.n + 1), r):
        source = block_tuples(K, I, t)
        if not source:
            continue
        d_out = block_matrix(K, I, t)
        kernel_dim = len(source) - rank(d_out)
        if t > 0:
            kernel_dim -= rank(block_matrix(K, I, t - 1))
        total += kernel_dim
    return total


def log_cohomology_basis(K: SimplicialComplex, r: int, t: int) -> list:
    """Cocycle representatives of a basis of the degree-t cohomology.

    Each representative is concentrated in a single index set (the
    complex splits), with exact rational coefficients.
    """
    basis = []
    for I in combinations(range(1, K.n + 1), r):
        source = block_tuples(K, I, t)
        if not source:
            continue
        d_out = block_matrix(K, I, t)
        kernel = nullspace_rational(d_out)
        if t > 0:
            d_in = block_matrix(K, I, t - 1)
            image = [d_in.column(j) for j in range(d_in.ncols)]
        else:
            image = []
        for vec in quotient_representatives(kernel, image):
            w = LogCochain(K, r, t)
            for T, c in zip(source, vec):
                if c:
                    w.add(T, I, c)
            basis.append(w)
    return basis


@dataclass(frozen=True)
class Period:
    """An exact period: coefficient times (2 pi i) to the given power."""

    coefficient: Fraction
    power: int

    def is_zero(self) -> bool:
        return self.coefficient == 0


def integrate_cell(I: tuple, cell: Cell) -> Period:
    """Integral of dz_I/z_I over one product cell.

    A torus factor soaks up one dz/z each, worth 2 pi i; any disc factor
    or any mismatch between the index set and the circle set kills the
    integral.  The empty form over the point cell integrates to 1.
    """
    I = tuple(I)
    if not cell.disks and I == cell.circles:
        return Period(Fraction(1), len(I))
    return Period(Fraction(0), len(I))


def period_of_cycle(pieces, res: Resolvent) -> Period:
    """Integral of a cocycle (one or more cover-degree pieces) over a cycle.

    Each piece pairs with the resolvent level of its own cover degree,
    summing over canonical tuples shared by both; the alternation of the
    two sides makes the canonical-tuple sum the whole pairing.  Pieces at
    absent levels contribute nothing.  The result's power is the common
    form degree of the pieces.  Two pieces at the same cover degree, or
    pieces carrying different form degrees, are an inconsistent input and
    raise ValueError.
    """
    if isinstance(pieces, LogCochain):
        pieces = [pieces]
    by_level: dict = {}
    degrees = set()
    for w in pieces:
        if w.t in by_level:
            raise ValueError(f"two cocycle pieces share cover degree {w.t}")
        by_level[w.t] = w
        degrees.add(w.r)
    if len(degrees) > 1:
        raise ValueError(
            f"degree mismatch: cocycle pieces carry form degrees {sorted(degrees)}")
    power = degrees.pop() if degrees else res.q
    total = Fraction(0)
    for t, w in sorted(by_level.items()):
        if t >= len(res.levels):
            continue
        level = res.levels[t]
        for T, forms in w.entries.items():
            chain = level.entries.get(T)
            if not chain:
                continue
            for I, a in forms.items():
                for cell, c in chain.items():
                    piece = integrate_cell(I, cell)
                    if piece.coefficient:
                        total += Fraction(a) * c * piece.coefficient
    return Period(total, power)


def period_matrix(K: SimplicialComplex, p: int, q: int,
                  r: int = None, t: int = None):
    """Pairing matrix between homology cycles and log cohomology classes.

    Returns (cycles, cocycles, matrix) where matrix[i][j] is the
    coefficient of the period of cocycle j over cycle i; every nonzero
    period here carries the power r of (2 pi i).  By default the cocycles
    come from the matching bidegree, r = q and cover degree t = q - p;
    passing another (r, t) pairs the same cycles against classes from a
    different bidegree, which must integrate to an all-zero matrix.
    """
    from .cells import homology_cycle_basis
    from .cech import build_resolvent

    if r is None:
        r = q
    if t is None:
        t = q - p
    cycles = homology_cycle_basis(K, p, q)
    cocycles = log_cohomology_basis(K, r, t)
    resolvents = [build_resolvent(K, c, p=p, q=q) for c in cycles]
    matrix = [
        [period_of_cycle(w, res).coefficient for w in cocycles]
        for res in resolvents
    ]
    return cycles, cocycles, matrix
