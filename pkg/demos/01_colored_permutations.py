"""Colored permutations as monomial matrices.

An element of Z_r wr S_n is stored as (perm, colors): perm[j-1] is the
image of j and colors[j-1] is the exponent of w = exp(2 pi i / r) sitting
in column j of its monomial matrix.
"""

from wreath import (
    ColoredPermutation,
    bar,
    class_type,
    colored_cycles,
    compose,
    enumerate_absolute_involutions,
    inverse,
    is_absolute_involution,
    simple_reflections,
    to_monomial_matrix,
    transpose,
)

r, n = 3, 3
g = ColoredPermutation(r, n, (2, 3, 1), (1, 0, 2))
h = ColoredPermutation(r, n, (1, 3, 2), (0, 1, 1))
print("g =", g, " h =", h)
print("g h      =", compose(g, h))
print("g^-1     =", inverse(g))
print("bar(g)   =", bar(g))
print("g^t      =", transpose(g), "(the inverse of bar(g))")

print("\nmatrix of g:")
for row in to_monomial_matrix(g):
    print("   ", "  ".join(f"{str(x):>6}" for x in row))

# a cycle's color is the sum of the colors along it; (length, color) pairs label classes
print("\ncolored cycles of g:", [(c.support, c.color) for c in colored_cycles(g)])
print("class of g:", class_type(g))

print("\ngenerators of G(3,3):", [str(s) for s in simple_reflections(r, n)])

invs = enumerate_absolute_involutions(r, 2)
print(f"\nG(3,2) has {len(invs)} absolute involutions (symmetric monomial matrices):")
print("   ", ", ".join(str(w) for w in invs))
assert all(compose(w, bar(w)).is_identity() and is_absolute_involution(w) for w in invs)
