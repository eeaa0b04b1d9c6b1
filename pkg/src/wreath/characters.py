"""Irreducible characters of S_n and G(r, n) by the Murnaghan-Nakayama rule.

Characters are evaluated on a sequence of colored cycles (length, color).
Two evaluation paths are provided: a memoized recursion that peels off the
last cycle (``chi_grn``), and a literal sum over enumerated r-partite rim
hook tableaux (``chi_grn_tableaux``); the tests hold them against each other.
"""

from __future__ import annotations

import csv
import io
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .colored_perm import (
    ClassType,
    ColoredCycle,
    ColoredPermutation,
    check_order,
    class_type,
    colored_cycles,
    compose,
    enumerate_group,
    group_order,
    inverse,
    simple_reflections,
)
from .cyclotomic import CycEl, NotRationalInteger
from .shapes import (
    MultiPartition,
    Partition,
    enumerate_multi_rht,
    multi_syt_count,
    multipartitions,
    partitions,
    rim_hook_removals,
)

BRUTE_FORCE_CLASS_LIMIT = 10**4

CycleSpec = Sequence[ColoredCycle | tuple[int, int]]


def _as_pairs(cycles: CycleSpec, r: int) -> tuple[tuple[int, int], ...]:
    out = []
    for c in cycles:
        if isinstance(c, ColoredCycle):
            out.append((c.length, c.color % r))
        else:
            out.append((int(c[0]), int(c[1]) % r))
    return tuple(out)


# -- symmetric group --------------------------------------------------------

@lru_cache(maxsize=None)
def _mn_sn(lam: Partition, lengths: tuple[int, ...]) -> int:
    if not lengths:
        return 1 if not lam else 0
    d, rest = lengths[-1], lengths[:-1]
    return sum((-1) ** ht * _mn_sn(mu, rest) for mu, ht in rim_hook_removals(lam, d))


def chi_sn(lam: Partition, cycle_lengths: Sequence[int]) -> int:
    """chi^lam of S_n at a permutation with the given cycle lengths (in any order)."""
    lengths = tuple(int(x) for x in cycle_lengths)
    if sum(lengths) != sum(lam):
        raise ValueError(f"cycle lengths {lengths} do not sum to |{lam}|")
    return _mn_sn(tuple(lam), lengths)


def chi_sn_tableaux(lam: Partition, cycle_lengths: Sequence[int]) -> int:
    """Same value as chi_sn, summed over explicitly enumerated rim hook tableaux."""
    return sum(t.sign() for t in enumerate_multi_rht((tuple(lam),), list(cycle_lengths)))


# -- wreath product ---------------------------------------------------------

@lru_cache(maxsize=None)
def _mn_grn(shape: MultiPartition, cycles: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    r = len(shape)
    if not cycles:
        out = [0] * r
        if all(not lam for lam in shape):
            out[0] = 1
        return tuple(out)
    (d, z), rest = cycles[-1], cycles[:-1]
    acc = [0] * r
    for j, lam in enumerate(shape):
        shift = (j * z) % r
        for mu, ht in rim_hook_removals(lam, d):
            sub = _mn_grn(shape[:j] + (mu,) + shape[j + 1:], rest)
            sgn = -1 if ht % 2 else 1
            for k, c in enumerate(sub):
                if c:
                    acc[(k + shift) % r] += sgn * c
    return tuple(acc)


def chi_grn(shape: MultiPartition, cycles: CycleSpec) -> CycEl:
    """chi^shape of G(r, n), r = len(shape), at an element with these colored cycles."""
    r = len(shape)
    pairs = _as_pairs(cycles, r)
    if sum(d for d, _ in pairs) != sum(sum(p) for p in shape):
        raise ValueError("cycle lengths do not match the size of the shape")
    return CycEl(r, _mn_grn(tuple(tuple(p) for p in shape), pairs))


def chi_grn_tableaux(shape: MultiPartition, cycles: CycleSpec) -> CycEl:
    """chi^shape by direct summation over r-partite rim hook tableaux."""
    r = len(shape)
    pairs = _as_pairs(cycles, r)
    coeffs = [0] * r
    for t in enumerate_multi_rht(shape, [d for d, _ in pairs]):
        alpha = sum(f * z for f, (_, z) in zip(t.components, pairs))
        coeffs[alpha % r] += t.sign()
    return CycEl(r, coeffs)


def character(shape: MultiPartition, g: ColoredPermutation) -> CycEl:
    if len(shape) != g.r:
        raise ValueError("shape has the wrong number of components")
    return chi_grn(shape, colored_cycles(g))


# -- classes ----------------------------------------------------------------

def centralizer_order(ct: ClassType) -> int:
    counts = Counter(ct.cycles())
    return prod(factorial(m) * (k * ct.r) ** m for (k, _), m in counts.items())


def class_size(ct: ClassType) -> int:
    return group_order(ct.r, ct.n) // centralizer_order(ct)


def class_types(r: int, n: int) -> list[ClassType]:
    """All class labels, in the order of ``multipartitions(r, n)``."""
    return [ClassType(r, n, mp) for mp in multipartitions(r, n)]


def conjugacy_classes_bruteforce(r: int, n: int, bound: int | None = None) -> list[list[ColoredPermutation]]:
    """Orbits of G(r, n) acting on itself by conjugation.

    Each orbit is closed under conjugation by the simple reflections, which
    generate the group, so a breadth-first search over those suffices.
    """
    check_order(r, n, bound)
    if n == 0:
        return [list(enumerate_group(r, n))]
    gens = [(s, inverse(s)) for s in simple_reflections(r, n)]
    seen: set[ColoredPermutation] = set()
    orbits = []
    for g in enumerate_group(r, n, bound):
        if g in seen:
            continue
        orbit = [g]
        seen.add(g)
        i = 0
        while i < len(orbit):
            x = orbit[i]
            i += 1
            for s, s_inv in gens:
                y = compose(compose(s, x), s_inv)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        orbits.append(orbit)
    return orbits


@lru_cache(maxsize=None)
def classes_with_sizes(r: int, n: int) -> tuple[tuple[ClassType, int], ...]:
    """(label, size) for every conjugacy class.

    Sizes come from explicit orbits for small groups and from the
    centralizer formula otherwise.
    """
    labels = class_types(r, n)
    if group_order(r, n) <= BRUTE_FORCE_CLASS_LIMIT:
        sizes = {}
        for orbit in conjugacy_classes_bruteforce(r, n, bound=BRUTE_FORCE_CLASS_LIMIT):
            ct = class_type(orbit[0])
            if ct in sizes:
                raise AssertionError(f"two orbits share the class type {ct}")
            sizes[ct] = len(orbit)
        if set(sizes) != set(labels):
            raise AssertionError("orbit labels differ from the r-partite class labels")
        return tuple((ct, sizes[ct]) for ct in labels)
    return tuple((ct, class_size(ct)) for ct in labels)


def _mp_label(mp: MultiPartition) -> str:
    return "(" + " | ".join(",".join(map(str, p)) or "." for p in mp) + ")"


@dataclass(frozen=True)
class CharacterTable:
    r: int
    n: int
    rows: tuple[MultiPartition, ...]
    classes: tuple[ClassType, ...]
    sizes: tuple[int, ...]
    values: tuple[tuple[CycEl, ...], ...]

    def value(self, shape: MultiPartition, ct: ClassType) -> CycEl:
        return self.values[self.rows.index(shape)][self.classes.index(ct)]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "rows": [[list(p) for p in mp] for mp in self.rows],
            "classes": [ct.to_json() for ct in self.classes],
            "class_sizes": list(self.sizes),
            "values": [[list(v.coeffs) for v in row] for row in self.values],
        }

    def to_text(self) -> str:
        header = ["shape \\ class"] + [str(ct) for ct in self.classes]
        body = [["size"] + [str(s) for s in self.sizes]]
        body += [[_mp_label(mp)] + [str(v) for v in row] for mp, row in zip(self.rows, self.values)]
        widths = [max(len(line[k]) for line in [header] + body) for k in range(len(header))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in [header] + body)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["shape"] + [str(ct) for ct in self.classes])
        w.writerow(["class_size"] + list(self.sizes))
        for mp, row in zip(self.rows, self.values):
            w.writerow([_mp_label(mp)] + [str(v) for v in row])
        return buf.getvalue()


def char_table(r: int, n: int, bound: int | None = None) -> CharacterTable:
    check_order(r, n, bound)
    pairs = classes_with_sizes(r, n)
    classes = tuple(ct for ct, _ in pairs)
    rows = multipartitions(r, n)
    values = tuple(tuple(chi_grn(mp, ct.cycles()) for ct in classes) for mp in rows)
    return CharacterTable(r, n, rows, classes, tuple(s for _, s in pairs), values)


# -- sums, inner products, indicators ----------------------------------------

def sum_irr_chars(g: ColoredPermutation) -> int:
    """sum of chi(g) over all irreducible characters, as a rational integer."""
    cyc = _as_pairs(colored_cycles(g), g.r)
    return _sum_irr(g.r, g.n, tuple(sorted(cyc)))


@lru_cache(maxsize=None)
def _sum_irr(r: int, n: int, cycles: tuple[tuple[int, int], ...]) -> int:
    total = CycEl.zero(r)
    for mp in multipartitions(r, n):
        total = total + CycEl(r, _mn_grn(mp, cycles))
    value = total.as_integer()
    if value < 0:
        raise NotRationalInteger(f"negative character sum {value}")
    return value


@lru_cache(maxsize=None)
def _sum_sn(lengths: tuple[int, ...]) -> int:
    return sum(_mn_sn(lam, lengths) for lam in partitions(sum(lengths)))


def lemma_chi_sum(g: ColoredPermutation) -> int:
    """sum over f: cycles -> colors of w^alpha(f) * prod_j sum_{lam |- n_j} chi^lam(sigma_j)."""
    r = g.r
    cyc = colored_cycles(g)
    coeffs = [0] * r
    for f in itertools.product(range(r), repeat=len(cyc)):
        alpha = sum(fi * c.color for fi, c in zip(f, cyc)) % r
        term = 1
        for j in range(r):
            lengths = tuple(c.length for fi, c in zip(f, cyc) if fi == j)
            term *= _sum_sn(lengths)
            if not term:
                break
        coeffs[alpha] += term
    return CycEl(r, coeffs).as_integer()


def exact_divide(x: CycEl, m: int) -> CycEl:
    can = x.canonical()
    if any(c % m for c in can):
        raise ArithmeticError(f"{x} is not divisible by {m}")
    return CycEl(x.r, [c // m for c in can])


ClassFunction = Mapping[ClassType, CycEl | int] | Callable[[ClassType], CycEl | int]


def _lookup(f: ClassFunction, ct: ClassType, r: int) -> CycEl:
    v = f(ct) if callable(f) else f[ct]
    return v if isinstance(v, CycEl) else CycEl.integer(r, int(v))


def inner_product(f1: ClassFunction, f2: ClassFunction, r: int, n: int) -> CycEl:
    """(1/|G|) sum over classes of size * f1 * conj(f2); division is exact or raises."""
    total = CycEl.zero(r)
    for ct, sz in classes_with_sizes(r, n):
        total = total + sz * _lookup(f1, ct, r) * _lookup(f2, ct, r).conj()
    return exact_divide(total, group_order(r, n))


def irreducible(shape: MultiPartition) -> Callable[[ClassType], CycEl]:
    return lambda ct: chi_grn(shape, ct.cycles())


def fs_indicator(shape: MultiPartition, r: int, n: int, bound: int | None = None) -> CycEl:
    """(1/|G|) sum_g chi(g^2), summed element by element."""
    check_order(r, n, bound)
    cache: dict[ClassType, CycEl] = {}
    total = CycEl.zero(r)
    for g in enumerate_group(r, n, bound):
        ct = class_type(compose(g, g))
        if ct not in cache:
            cache[ct] = chi_grn(shape, ct.cycles())
        total = total + cache[ct]
    return exact_divide(total, group_order(r, n))


def model_dimension(r: int, n: int) -> int:
    return sum(multi_syt_count(mp) for mp in multipartitions(r, n))


def row_orthogonality(table: CharacterTable) -> Iterable[tuple[int, int, CycEl]]:
    """Yield (i, j, sum_c size * chi_i * conj(chi_j)) for every pair of rows."""
    r = table.r
    V = np.array([[v.coeffs for v in row] for row in table.values], dtype=np.int64)
    sizes = np.array(table.sizes, dtype=np.int64)
    # exactness guard for int64 accumulation
    peak = int(np.abs(V).max(initial=0)) ** 2 * int(sizes.sum()) * r * r
    if peak >= 2**62:
        raise OverflowError("character values too large for int64 accumulation")
    # T[i, j, a, b] = sum_c size_c * V[i, c, a] * V[j, c, b]; w^a * conj(w^b) = w^(a - b)
    T = np.einsum("c,ica,jcb->ijab", sizes, V, V)
    a, b = np.meshgrid(np.arange(r), np.arange(r), indexing="ij")
    shift = (a - b) % r
    folded = np.stack([T[:, :, shift == k].sum(axis=-1) for k in range(r)], axis=-1)
    for i in range(len(table.rows)):
        for j in range(len(table.rows)):
            yield i, j, CycEl(r, folded[i, j].tolist())
