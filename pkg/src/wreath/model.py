"""The signed action of G(r, n) on the span of its absolute involutions.

Basis vectors C_w are indexed by the symmetric elements w. A group element
pi sends C_w to sign(pi, w) * C_{pi w pi^t}. The sign counts inversions of
|pi| that are 2-cycles of |w|; for even r it also counts fixed points of |w|
whose odd color is pushed across the half-way arc by pi.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .characters import chi_grn, classes_with_sizes, inner_product
from .colored_perm import (
    ClassType,
    ColoredPermutation,
    colored_cycles,
    _involutions,
    compose,
    enumerate_absolute_involutions,
    enumerate_group,
    simple_reflections,
    transpose,
)
from .cyclotomic import CycEl
from .rsk import shape_of_involution
from .shapes import MultiPartition, multi_syt_count, multipartitions


@dataclass(frozen=True)
class ModelBasis:
    r: int
    n: int
    elements: tuple[ColoredPermutation, ...]
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=None)
def model_basis(r: int, n: int) -> ModelBasis:
    elems = tuple(enumerate_absolute_involutions(r, n))
    return ModelBasis(r, n, elems, {w: k for k, w in enumerate(elems)})


@dataclass(frozen=True, eq=False)
class SignedPermMatrix:
    """Column k is sent to ``signs[k] * e_{targets[k]}``."""
    targets: np.ndarray
    signs: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.targets)

    @classmethod
    def identity(cls, dim: int) -> "SignedPermMatrix":
        return cls(np.arange(dim), np.ones(dim, dtype=np.int64))

    def __matmul__(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        # apply other first
        return SignedPermMatrix(self.targets[other.targets], self.signs[other.targets] * other.signs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermMatrix):
            return NotImplemented
        return np.array_equal(self.targets, other.targets) and np.array_equal(self.signs, other.signs)

    def trace(self) -> int:
        return int(self.signs[self.targets == np.arange(self.dim)].sum())

    def is_bijective(self) -> bool:
        return len(np.unique(self.targets)) == self.dim

    def to_dense(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        m[self.targets, np.arange(self.dim)] = self.signs
        return m


# -- signs ------------------------------------------------------------------

def sign_generator(i: int, v: ColoredPermutation) -> int:
    """Sign attached to the generator s_i acting on the basis vector C_v."""
    if not 0 <= i < v.n:
        raise ValueError(f"generator index {i} out of range for n={v.n}")
    if i > 0:
        return -1 if v.perm[i - 1] == i + 1 else 1
    if v.r % 2 == 0 and v.perm[0] == 1 and v.colors[0] == v.r - 1:
        return -1
    return 1


def inversion_pair_count(pi: ColoredPermutation, w: ColoredPermutation) -> int:
    """#(Inv(|pi|) & Pair(|w|))."""
    s, wp = pi.perm, w.perm
    return sum(1 for i in range(1, w.n + 1)
               if wp[i - 1] > i and s[wp[i - 1] - 1] < s[i - 1])


def sign_o(pi: ColoredPermutation, w: ColoredPermutation) -> int:
    return -1 if inversion_pair_count(pi, w) % 2 else 1


def arc_set(pi: ColoredPermutation, w: ColoredPermutation) -> list[int]:
    """Fixed points i of |w| with odd color 2k+1 such that k + z_pi(i) mod r lies in [r/2, r-1]."""
    r = pi.r
    if r % 2:
        raise ValueError("only defined for even r")
    half = r // 2
    out = []
    for i in range(1, w.n + 1):
        zw = w.colors[i - 1]
        if w.perm[i - 1] == i and zw % 2 == 1:
            k = (zw - 1) // 2
            if (k + pi.colors[i - 1]) % r >= half:
                out.append(i)
    return out


def sign_e(pi: ColoredPermutation, w: ColoredPermutation) -> int:
    return (-1) ** len(arc_set(pi, w)) * sign_o(pi, w)


def sign(pi: ColoredPermutation, w: ColoredPermutation) -> int:
    return sign_e(pi, w) if pi.r % 2 == 0 else sign_o(pi, w)


def act(pi: ColoredPermutation, w: ColoredPermutation) -> ColoredPermutation:
    """pi w pi^t."""
    return compose(compose(pi, w), transpose(pi))


# -- operators and traces ---------------------------------------------------

class _BasisArrays:
    """Basis elements as integer arrays, with sortable keys for index lookup."""

    def __init__(self, basis: ModelBasis):
        r, n = basis.r, basis.n
        self.r, self.n = r, n
        self.perms = np.array([w.perm for w in basis.elements], dtype=np.int64).reshape(len(basis), n)
        self.colors = np.array([w.colors for w in basis.elements], dtype=np.int64).reshape(len(basis), n)
        self.keys = self.encode(self.perms, self.colors)
        if len(self.keys) > 1 and not np.all(np.diff(self.keys) > 0):
            raise AssertionError("basis keys are not strictly increasing")

    def encode(self, perms: np.ndarray, colors: np.ndarray) -> np.ndarray:
        # lexicographic on (perm, colors); fits in int64 for every n, r allowed by the order bound
        key = np.zeros(perms.shape[0], dtype=np.int64)
        for j in range(self.n):
            key = key * (self.n + 1) + perms[:, j]
        for j in range(self.n):
            key = key * self.r + colors[:, j]
        return key


@lru_cache(maxsize=None)
def _basis_arrays(r: int, n: int) -> _BasisArrays:
    return _BasisArrays(model_basis(r, n))


def rho(pi: ColoredPermutation, basis: ModelBasis | None = None) -> SignedPermMatrix:
    """The operator of pi on the model, computed for all basis vectors at once."""
    if basis is not None and (basis.r, basis.n) != (pi.r, pi.n):
        raise ValueError("basis belongs to another group")
    arr = _basis_arrays(pi.r, pi.n)
    r, n = pi.r, pi.n
    dim = len(arr.keys)
    if n == 0:
        return SignedPermMatrix.identity(dim)
    sigma = np.array(pi.perm, dtype=np.int64) - 1
    zpi = np.array(pi.colors, dtype=np.int64)
    sigma_inv = np.argsort(sigma)
    W = arr.perms - 1
    Z = arr.colors
    # (pi w pi^t)(k) = sigma(w(m)) with m = sigma^-1(k); color z_pi(m) + z_w(m) + z_pi(w(m))
    m = np.broadcast_to(sigma_inv, W.shape)
    wm = np.take_along_axis(W, m, axis=1)
    new_perm = sigma[wm] + 1
    new_col = (zpi[m] + np.take_along_axis(Z, m, axis=1) + zpi[wm]) % r
    targets = np.searchsorted(arr.keys, arr.encode(new_perm, new_col))
    # sign: inversions of |pi| among the 2-cycles of |w|, plus the arc set for even r
    idx = np.arange(n)
    paired = W > idx
    inverted = sigma[W] < sigma[idx]
    flips = np.count_nonzero(paired & inverted, axis=1)
    if r % 2 == 0:
        fixed_odd = (W == idx) & (Z % 2 == 1)
        crosses = (((Z - 1) // 2 + zpi) % r) >= r // 2
        flips = flips + np.count_nonzero(fixed_odd & crosses, axis=1)
    signs = np.where(flips % 2 == 1, -1, 1).astype(np.int64)
    return SignedPermMatrix(targets.astype(np.int64), signs)


def rho_reference(pi: ColoredPermutation, basis: ModelBasis | None = None) -> SignedPermMatrix:
    """Element-by-element construction of rho(pi) from act() and sign()."""
    basis = basis or model_basis(pi.r, pi.n)
    targets = np.empty(len(basis), dtype=np.int64)
    signs = np.empty(len(basis), dtype=np.int64)
    for k, w in enumerate(basis.elements):
        targets[k] = basis.index[act(pi, w)]
        signs[k] = sign(pi, w)
    return SignedPermMatrix(targets, signs)


def fix_set(pi: ColoredPermutation, basis: ModelBasis | None = None) -> list[ColoredPermutation]:
    """Fix(pi) = {w in I_{r,n} : pi w pi^t = w}, in basis order.

    With a basis, filters it directly. Without one, only involutions |w|
    commuting with |pi| are visited (no others can be fixed), and their
    colorings are filtered in bulk; this avoids building I_{r,n}.
    """
    if basis is not None:
        return [w for w in basis.elements if act(pi, w) == w]
    r, n = pi.r, pi.n
    if n == 0:
        return [ColoredPermutation.identity(r, 0)]
    sigma = np.array(pi.perm, dtype=np.int64) - 1
    zpi = np.array(pi.colors, dtype=np.int64)
    sigma_inv = np.argsort(sigma)
    out = []
    for v in _involutions(n):
        vv = np.array(v, dtype=np.int64) - 1
        if not np.array_equal(sigma[vv[sigma_inv]], vv):
            continue
        reps = [j for j in range(n) if vv[j] >= j]
        choices = np.array(list(itertools.product(range(r), repeat=len(reps))), dtype=np.int64)
        Z = np.empty((len(choices), n), dtype=np.int64)
        Z[:, reps] = choices
        Z[:, vv[reps]] = choices
        # color at k after conjugation: z_pi(m) + z_w(m) + z_pi(w(m)), m = sigma^-1(k)
        new = (zpi[sigma_inv] + Z[:, sigma_inv] + zpi[vv[sigma_inv]]) % r
        keep = np.all(new == Z, axis=1)
        out.extend(ColoredPermutation(r, n, v, tuple(int(c) for c in row)) for row in Z[keep])
    out.sort(key=lambda w: (w.perm, w.colors))
    return out


def model_character(pi: ColoredPermutation, basis: ModelBasis | None = None) -> int:
    """Trace of rho(pi), summed over Fix(pi) without building the operator."""
    return sum(sign(pi, w) for w in fix_set(pi, basis))


def homomorphism_check(pi1: ColoredPermutation, pi2: ColoredPermutation,
                       basis: ModelBasis | None = None) -> bool:
    """rho(pi2 * pi1) == rho(pi2) @ rho(pi1)."""
    basis = basis or model_basis(pi1.r, pi1.n)
    return rho(compose(pi2, pi1), basis) == rho(pi2, basis) @ rho(pi1, basis)


def all_rho(r: int, n: int, bound: int | None = None) -> dict[ColoredPermutation, SignedPermMatrix]:
    basis = model_basis(r, n)
    return {g: rho(g, basis) for g in enumerate_group(r, n, bound)}


def homomorphism_failures(r: int, n: int, pairs: Iterable[tuple[ColoredPermutation, ColoredPermutation]],
                          cache: dict | None = None) -> list[tuple[ColoredPermutation, ColoredPermutation]]:
    basis = model_basis(r, n)
    cache = {} if cache is None else cache

    def get(g):
        if g not in cache:
            cache[g] = rho(g, basis)
        return cache[g]

    return [(a, b) for a, b in pairs if get(compose(b, a)) != get(b) @ get(a)]


def random_element(r: int, n: int, rng: random.Random) -> ColoredPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return ColoredPermutation(r, n, tuple(perm), tuple(rng.randrange(r) for _ in range(n)))


# -- the sign-reversing involution on Fix(pi) -------------------------------

def _block_case(w: ColoredPermutation, start: int, d: int) -> int:
    """1: block fixed pointwise by |w|; 3: |w| swaps j and j + d/2 inside it; 2: otherwise."""
    block = range(start, start + d)
    if all(w.perm[j - 1] == j for j in block):
        return 1
    e = d // 2
    if d % 2 == 0 and all(w.perm[j - 1] == (j + e if j < start + e else j - e) for j in block):
        return 3
    return 2


def normalized_blocks(pi: ColoredPermutation) -> int:
    """Return d if |pi| = (1..d)(d+1..2d)... with colors on each block's first point; else raise."""
    cycles = colored_cycles(pi)
    if not cycles:
        raise ValueError("empty element")
    d = cycles[0].length
    for b, c in enumerate(cycles):
        start = b * d + 1
        if c.support != tuple(range(start, start + d)):
            raise ValueError(f"{pi} is not in normalized block form")
        if any(pi.colors[j - 1] for j in range(start + 1, start + d)):
            raise ValueError(f"{pi}: colors must sit on the first point of each cycle")
    return d


def phi_toggle(pi: ColoredPermutation, w: ColoredPermutation) -> ColoredPermutation:
    """Sign-reversing involution on Fix(pi) for |pi| of even cycle type d^m in block form.

    The first cycle of |pi| on which |w| acts as in Case (1) or (3) is
    toggled. A zero-colored cycle switches between the two cases keeping
    colors. A cycle of color r/2 (only Case (1) occurs) swaps the color of
    w on the cycle between 2k and 2k+1, flipping the arc sign instead.
    Elements of pure Case (2) are fixed.
    """
    d = normalized_blocks(pi)
    if d % 2:
        raise ValueError("cycle length must be even")
    if act(pi, w) != w:
        raise ValueError("w is not in Fix(pi)")
    e = d // 2
    perm = list(w.perm)
    colors = list(w.colors)
    for start in range(1, pi.n + 1, d):
        case = _block_case(w, start, d)
        if case == 2:
            continue
        block = range(start, start + d)
        if pi.colors[start - 1] == 0:
            for j in block:
                if case == 1:
                    perm[j - 1] = j + e if j < start + e else j - e
                else:
                    perm[j - 1] = j
        else:
            for j in block:
                colors[j - 1] = colors[j - 1] ^ 1
        return ColoredPermutation(w.r, w.n, tuple(perm), tuple(colors))
    return w


# -- decomposition and the cycle-count experiment --------------------------

def model_character_table(r: int, n: int) -> dict[ClassType, int]:
    basis = model_basis(r, n)
    return {ct: model_character(ct.representative(), basis) for ct, _ in classes_with_sizes(r, n)}


def decompose_model(r: int, n: int) -> dict[MultiPartition, int]:
    """Multiplicity of every irreducible in the model."""
    chars = model_character_table(r, n)
    out = {}
    for mp in multipartitions(r, n):
        m = inner_product(chars, lambda ct, mp=mp: chi_grn(mp, ct.cycles()), r, n)
        out[mp] = m.as_integer()
    return out


def two_cycle_count(w: ColoredPermutation) -> int:
    return sum(1 for i in range(1, w.n + 1) if w.perm[i - 1] > i)


@dataclass
class SubmoduleReport:
    two_cycles: int
    total_cycles: int
    dimension: int
    invariant: bool
    shapes: dict[MultiPartition, int]
    shape_counts_match_dimensions: bool
    multiplicities: dict[MultiPartition, int]
    character_match: bool

    @property
    def holds(self) -> bool:
        return self.invariant and self.character_match and self.shape_counts_match_dimensions

    def to_json(self) -> dict:
        return {
            "two_cycles": self.two_cycles,
            "total_cycles": self.total_cycles,
            "dimension": self.dimension,
            "invariant": self.invariant,
            "shapes": [{"shape": [list(p) for p in mp], "count": c} for mp, c in self.shapes.items()],
            "shape_counts_match_dimensions": self.shape_counts_match_dimensions,
            "multiplicities": [{"shape": [list(p) for p in mp], "multiplicity": m}
                               for mp, m in self.multiplicities.items() if m],
            "character_match": self.character_match,
            "holds": self.holds,
        }


def conjecture_experiment(r: int, n: int) -> list[SubmoduleReport]:
    """Split the model by the number of 2-cycles of |w| and test each piece.

    For each piece: invariance under the generators, the RSK shapes of its
    basis elements, and whether its character equals the sum of the
    irreducible characters indexed by those shapes.
    """
    basis = model_basis(r, n)
    groups: dict[int, list[int]] = defaultdict(list)
    for k, w in enumerate(basis.elements):
        groups[two_cycle_count(w)].append(k)
    gens = [rho(s, basis) for s in simple_reflections(r, n)] if n else []
    classes = classes_with_sizes(r, n)
    reports = []
    for k2 in sorted(groups):
        members = set(groups[k2])
        invariant = all(int(g.targets[i]) in members for g in gens for i in members)
        shapes = Counter(shape_of_involution(basis.elements[i]) for i in sorted(members))
        counts_ok = all(c == multi_syt_count(mp) for mp, c in shapes.items())

        def sub_char(ct: ClassType, members=members) -> int:
            pi = ct.representative()
            return sum(sign(pi, basis.elements[i]) for i in members
                       if act(pi, basis.elements[i]) == basis.elements[i])

        table = {ct: sub_char(ct) for ct, _ in classes}
        predicted_ok = all(
            CycEl.integer(r, table[ct]) == sum((chi_grn(mp, ct.cycles()) for mp in shapes), CycEl.zero(r))
            for ct, _ in classes
        )
        mults = {}
        for mp in multipartitions(r, n):
            m = inner_product(table, lambda ct, mp=mp: chi_grn(mp, ct.cycles()), r, n)
            mults[mp] = m.as_integer()
        reports.append(SubmoduleReport(
            two_cycles=k2,
            total_cycles=n - k2,
            dimension=len(members),
            invariant=invariant,
            shapes=dict(shapes),
            shape_counts_match_dimensions=counts_ok,
            multiplicities=mults,
            character_match=predicted_ok and all(mults[mp] == (1 if mp in shapes else 0) for mp in mults),
        ))
    return reports


def model_order_check(r: int, n: int) -> bool:
    """Sum of the model's multiplicity-weighted dimensions equals |I_{r,n}|."""
    dims = decompose_model(r, n)
    return sum(m * multi_syt_count(mp) for mp, m in dims.items()) == len(model_basis(r, n))

