"""Colored Robinson-Schensted and the shapes of absolute involutions."""

from collections import Counter

from wreath import ColoredPermutation, colored_rsk, inverse_colored_rsk, shape_of_involution, transpose
from wreath.model import model_basis
from wreath.shapes import multi_syt_count

g = ColoredPermutation(3, 5, (4, 1, 5, 3, 2), (1, 0, 2, 1, 0))
pair = colored_rsk(g)
print("g =", g)
for c in range(g.r):
    print(f"  color {c}: P = {pair.P[c]}  Q = {pair.Q[c]}")
print("transpose swaps the pair:", colored_rsk(transpose(g)) == pair.swap())
print("inverse recovers g:", inverse_colored_rsk(pair, g.r, g.n) == g)

# symmetric elements give P == Q, so each shape appears once per tableau
r, n = 2, 4
shapes = Counter(shape_of_involution(w) for w in model_basis(r, n).elements)
print(f"\nshapes of the {sum(shapes.values())} absolute involutions of G({r},{n}):")
for mp, k in sorted(shapes.items()):
    print(f"  {mp}: {k} (tableaux: {multi_syt_count(mp)})")
