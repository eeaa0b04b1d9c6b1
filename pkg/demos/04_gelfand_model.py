"""The signed action on absolute involutions and its decomposition.

pi sends the basis vector C_w to sign(pi, w) C_{pi w pi^t}. Each operator
is a signed permutation matrix; the action is a homomorphism and contains
every irreducible exactly once.
"""

import itertools

from wreath import ColoredPermutation, decompose_model, model_basis, rho, sum_irr_chars
from wreath.colored_perm import enumerate_group
from wreath.model import fix_set, homomorphism_failures, phi_toggle, sign

r, n = 2, 3
basis = model_basis(r, n)
print(f"G({r},{n}) acts on {len(basis)} basis vectors")

elems = list(enumerate_group(r, n))
bad = homomorphism_failures(r, n, itertools.product(elems, elems))
print(f"homomorphism on all {len(elems) ** 2} pairs:", "ok" if not bad else bad[:3])

g = ColoredPermutation.from_cycles(r, n, [(1, 2)], [1, 0, 1])
print(f"trace of rho({g}) = {rho(g, basis).trace()},  character sum = {sum_irr_chars(g)}")

print("\nmultiplicities:")
for shape, m in decompose_model(r, n).items():
    print(f"  {shape}: {m}")

# cancellation inside Fix(pi) for |pi| = (1 2)(3 4)
pi = ColoredPermutation.from_cycles(3, 4, [(1, 2), (3, 4)], [0, 0, 0, 0])
fix = fix_set(pi)
kept = [w for w in fix if phi_toggle(pi, w) == w]
print(f"\nFix(pi) has {len(fix)} elements, total sign {sum(sign(pi, w) for w in fix)};")
print(f"{len(kept)} survive the toggle, all with sign +1:", all(sign(pi, w) == 1 for w in kept))
