"""Partitions, r-partite partitions, standard tableaux and rim hooks.

Partitions are plain tuples of weakly decreasing positive ints; an r-partite
partition is a tuple of r such tuples. Cells are 0-based (row, column) pairs
in English notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]
Cell = tuple[int, int]


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multipartitions(r: int, n: int) -> tuple[MultiPartition, ...]:
    """All r-tuples of partitions with total size n.

    Component-major: sizes (n_0, ..., n_{r-1}) in reverse-lex order, then
    the product of the component partition lists.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    out = []
    for sizes in _compositions(n, r):
        for combo in itertools.product(*(partitions(k) for k in sizes)):
            out.append(tuple(combo))
    return tuple(out)


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into k parts, reverse-lex."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def multipartition_count(r: int, n: int) -> int:
    """Coefficient of q^n in (sum_k p(k) q^k)^r, by polynomial powering."""
    base = [len(partitions(k)) for k in range(n + 1)]
    series = [1] + [0] * n
    for _ in range(r):
        series = [sum(series[i] * base[k - i] for i in range(k + 1)) for k in range(n + 1)]
    return series[n]


def size(shape: Partition | MultiPartition) -> int:
    if shape and isinstance(shape[0], tuple):
        return sum(sum(p) for p in shape)
    return sum(shape)


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def cells(lam: Partition) -> list[Cell]:
    return [(i, j) for i, part in enumerate(lam) for j in range(part)]


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate_partition(lam)
    return [lam[i] - j + conj[j] - i - 1 for i, j in cells(lam)]


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    return factorial(n) // prod(hook_lengths(lam))


def enumerate_syt(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam, entries 1..n, as tuples of rows.

    Built by placing n, n-1, ... into removable corners.
    """
    n = sum(lam)
    if n == 0:
        return [()]
    out = []
    for i in range(len(lam)):
        if lam[i] > (lam[i + 1] if i + 1 < len(lam) else 0):
            smaller = list(lam)
            smaller[i] -= 1
            smaller = tuple(p for p in smaller if p)
            for t in enumerate_syt(smaller):
                rows = [list(row) for row in t]
                if i == len(rows):
                    rows.append([])
                rows[i].append(n)
                out.append(tuple(tuple(row) for row in rows))
    return out


def multi_syt_count(shape: MultiPartition) -> int:
    """Number of r-partite standard Young tableaux: multinomial times component counts."""
    sizes = [sum(p) for p in shape]
    multinomial = factorial(sum(sizes)) // prod(factorial(k) for k in sizes)
    return multinomial * prod(syt_count(p) for p in shape)


def enumerate_multi_syt(shape: MultiPartition) -> list[tuple]:
    """All r-partite SYT: distribute 1..n over the components, then fill each standardly."""
    sizes = [sum(p) for p in shape]
    n = sum(sizes)
    out = []
    for labels in _set_compositions(tuple(range(1, n + 1)), sizes):
        per_component = []
        for lam, labs in zip(shape, labels):
            per_component.append([
                tuple(tuple(labs[x - 1] for x in row) for row in t) for t in enumerate_syt(lam)
            ])
        out.extend(itertools.product(*per_component))
    return out


def _set_compositions(items: tuple[int, ...], sizes: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not sizes:
        yield ()
        return
    k = sizes[0]
    for chosen in itertools.combinations(items, k):
        rest = tuple(x for x in items if x not in chosen)
        for tail in _set_compositions(rest, sizes[1:]):
            yield (chosen,) + tail


# -- rim hooks --------------------------------------------------------------

def skew_cells(lam: Partition, mu: Partition) -> frozenset[Cell]:
    """Cells of lam / mu; assumes mu is contained in lam."""
    out = set()
    for i, part in enumerate(lam):
        start = mu[i] if i < len(mu) else 0
        out.update((i, j) for j in range(start, part))
    return frozenset(out)


def contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def is_connected(cs: frozenset[Cell]) -> bool:
    if not cs:
        return False
    start = next(iter(cs))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cs)


def has_2x2(cs: frozenset[Cell]) -> bool:
    return any((i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs for i, j in cs)


def is_rim_hook(cs: frozenset[Cell]) -> bool:
    return is_connected(cs) and not has_2x2(cs)


@dataclass(frozen=True)
class RimHook:
    cells: frozenset[Cell]
    component: int = 0

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def height(self) -> int:
        return len({i for i, _ in self.cells}) - 1


@lru_cache(maxsize=None)
def rim_hook_removals(lam: Partition, d: int) -> tuple[tuple[Partition, int], ...]:
    """Every mu such that lam / mu is a rim hook of length d, with its height.

    Uses beta-numbers: removing a d-hook moves one bead from x to x - d onto
    an empty position, and the height is the number of beads jumped over.
    """
    if d < 1:
        raise ValueError("rim hook length must be positive")
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]  # strictly decreasing
    beads = set(beta)
    out = []
    for idx, x in enumerate(beta):
        y = x - d
        if y < 0 or y in beads:
            continue
        height = sum(1 for b in beta if y < b < x)
        new_beta = sorted([b for b in beta if b != x] + [y], reverse=True)
        mu = tuple(b - (k - 1 - i) for i, b in enumerate(new_beta))
        out.append((tuple(p for p in mu if p), height))
    return tuple(out)


def _between(mu: Partition, lam: Partition, total: int) -> Iterator[Partition]:
    """Partitions nu with mu <= nu <= lam and |nu| = total."""
    rows = len(lam)
    mu = tuple(mu) + (0,) * (rows - len(mu))

    def rec(i: int, prev: int, remaining: int, acc: list[int]):
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        lo, hi = mu[i], min(lam[i], prev)
        for v in range(hi, lo - 1, -1):
            if v <= remaining:
                acc.append(v)
                yield from rec(i + 1, v, remaining - v, acc)
                acc.pop()

    yield from rec(0, lam[0] if lam else 0, total, [])


@dataclass(frozen=True)
class MultiRimHookTableau:
    shape: MultiPartition
    hooks: tuple[RimHook, ...]

    def sign(self) -> int:
        return (-1) ** sum(h.height for h in self.hooks)

    @property
    def components(self) -> tuple[int, ...]:
        return tuple(h.component for h in self.hooks)


def enumerate_multi_rht(shape: MultiPartition, lengths: Sequence[int]) -> list[MultiRimHookTableau]:
    """All r-partite rim hook tableaux of the given shape whose i-th hook has length lengths[i].

    Grows from the empty shape, testing every candidate skew shape cellwise
    for connectivity and the absence of 2x2 squares.
    """
    if sum(lengths) != size(shape):
        raise ValueError("hook lengths must sum to the size of the shape")
    r = len(shape)
    out = []

    def rec(step: int, current: list[Partition], hooks: list[RimHook]):
        if step == len(lengths):
            out.append(MultiRimHookTableau(tuple(shape), tuple(hooks)))
            return
        d = lengths[step]
        for j in range(r):
            mu = current[j]
            for nu in _between(mu, shape[j], sum(mu) + d):
                cs = skew_cells(nu, mu)
                if not is_rim_hook(cs):
                    continue
                current[j] = nu
                hooks.append(RimHook(cs, j))
                rec(step + 1, current, hooks)
                hooks.pop()
                current[j] = mu

    rec(0, [()] * r, [])
    return out
