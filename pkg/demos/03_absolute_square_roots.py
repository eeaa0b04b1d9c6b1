"""Counting solutions of v * bar(v) = g three ways.

1. enumerate the whole group,
2. sum the irreducible characters at g,
3. count pairings of equal-length cycles with opposite colors.
"""

from wreath import ColoredPermutation, count_bruteforce, count_formula, sum_irr_chars
from wreath.characters import classes_with_sizes

r, n = 3, 3
print(f"G({r},{n}): class, size, brute force, characters, formula")
for ct, size in classes_with_sizes(r, n):
    g = ct.representative()
    a, b, c = count_bruteforce(g), sum_irr_chars(g), count_formula(g)
    flag = "" if a == b == c else "  <-- mismatch"
    print(f"  {str(ct):<22} {size:>4} {a:>6} {b:>6} {c:>6}{flag}")

# two 3-cycles with opposite colors: one 6-cycle root family (3 * r) but no
# pair of separate roots, since a nonzero color rules out singletons
g = ColoredPermutation.from_cycles(3, 6, [(1, 2, 3), (4, 5, 6)], [1, 0, 0, 2, 0, 0])
print("\ntwo 3-cycles colored 1 and 2:", count_formula(g), "roots")
