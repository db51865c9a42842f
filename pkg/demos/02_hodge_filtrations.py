"""Mixed Hodge structure of an arrangement complement, from the table.

Every cohomology class of the complement is of Tate type: the piece in
bidegree (p, q) carries Hodge type (q, q) and weight 2q.  The Hodge
filtration F and weight filtration W of H^s are therefore determined by
the bigraded ranks alone:

    dim F^k H^s = sum of ranks over q >= k with 2q - p = s
    dim W_r H^s = sum of ranks over 2q <= r with 2q - p = s

This demo prints both filtrations and the diagonal Hodge numbers for
the plane minus the origin and for the square boundary.
"""

from momentangle import (
    SimplicialComplex,
    betti_table,
    filtration_dims,
    mixed_hodge_numbers,
    render_report,
)

plane = SimplicialComplex.from_facets(2, [[1], [2]])
bt = betti_table(plane)

# H^3(C^2 minus 0) is one-dimensional, generated by a class of type
# (2, 2) and weight 4 -- the arrangement analogue of the sphere class.
F, W = filtration_dims(bt, 3)
print("plane minus origin, degree 3:")
print("  F:", {k: F[k] for k in sorted(F)})
print("  W:", {r: W[r] for r in sorted(W)})
assert F[2] == 1 and F[3] == 0
assert W[3] == 0 and W[4] == 1

print("  Hodge numbers:", mixed_hodge_numbers(bt))
print()

square = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
print(render_report(betti_table(square), format="pretty"))

# The weight filtration only jumps at even r: every piece is Tate.
bt = betti_table(square)
for s in bt.total_degrees():
    F, W = filtration_dims(bt, s)
    jumps = [r for r in sorted(W) if r > s - 1 and W[r] != W[r - 1]]
    print(f"degree {s}: weight jumps at {jumps}")
    assert all(r % 2 == 0 for r in jumps)
