"""Exact character tables via the colored Murnaghan-Nakayama rule.

Values are cyclotomic integers printed in the basis 1, w, ..., w^(phi(r)-1).
"""

from wreath import ColoredPermutation, char_table, chi_sn
from wreath.characters import character, row_orthogonality
from wreath.colored_perm import group_order

print("S_4 (classes by cycle type):")
print(char_table(1, 4).to_text())

print("\nG(3,2), a group of order", group_order(3, 2))
table = char_table(3, 2)
print(table.to_text())

# rows are orthonormal for the size-weighted Hermitian product
order = group_order(3, 2)
ok = all(v == (order if i == j else 0) for i, j, v in row_orthogonality(table))
print("\nrow orthogonality exact:", ok)

print("\nchi^(2,1) at a 3-cycle:", chi_sn((2, 1), (3,)))
e = ColoredPermutation.identity(3, 2)
print("degree of ((1),(1),()) in G(3,2):", character(((1,), (1,), ()), e))
