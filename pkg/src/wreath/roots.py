"""Counting absolute square roots v * bar(v) = g, by enumeration and by formula."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .colored_perm import (
    ColoredPermutation,
    bar,
    colored_cycles,
    compose,
    enumerate_group,
)


def absolute_square(v: ColoredPermutation) -> ColoredPermutation:
    return compose(v, bar(v))


@lru_cache(maxsize=16)
def _absolute_square_histogram(r: int, n: int, bound: int | None) -> Counter:
    return Counter(absolute_square(v) for v in enumerate_group(r, n, bound))


def count_bruteforce(g: ColoredPermutation, bound: int | None = None) -> int:
    """#{v in G : v * bar(v) = g} by enumerating the whole group (cached per group)."""
    return _absolute_square_histogram(g.r, g.n, bound)[g]


def count_squares_bruteforce(g: ColoredPermutation, bound: int | None = None) -> int:
    """#{v in G : v * v = g}, the ordinary square roots."""
    return sum(1 for v in enumerate_group(g.r, g.n, bound) if compose(v, v) == g)


@dataclass(frozen=True)
class PairSingletonPartition:
    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...]

    @property
    def n2(self) -> int:
        return len(self.pairs)

    @property
    def n1(self) -> int:
        return len(self.singletons)

    def blocks(self) -> list[tuple[int, ...]]:
        return [tuple(p) for p in self.pairs] + [(s,) for s in self.singletons]


def enumerate_pair_singleton_partitions(
    indices: Sequence[int],
    colors: Sequence[int],
    lengths: Sequence[int],
    allow_singletons: bool,
    r: int,
) -> list[PairSingletonPartition]:
    """Partitions of ``indices`` into pairs and (optionally) singletons.

    A pair {i, j} needs equal lengths and colors summing to 0 mod r; a
    singleton {i} needs color 0. ``colors`` and ``lengths`` are indexed
    parallel to ``indices``.
    """
    color = {i: c % r for i, c in zip(indices, colors)}
    length = dict(zip(indices, lengths))
    out = []

    def rec(rest: tuple[int, ...], pairs: list, singles: list):
        if not rest:
            out.append(PairSingletonPartition(tuple(pairs), tuple(singles)))
            return
        i, tail = rest[0], rest[1:]
        if allow_singletons and color[i] == 0:
            singles.append(i)
            rec(tail, pairs, singles)
            singles.pop()
        for k, j in enumerate(tail):
            if length[i] == length[j] and (color[i] + color[j]) % r == 0:
                pairs.append((i, j))
                rec(tail[:k] + tail[k + 1:], pairs, singles)
                pairs.pop()

    rec(tuple(indices), [], [])
    return out


def _formula(cycles: Sequence[tuple[int, int]], r: int) -> int:
    by_length: dict[int, list[int]] = defaultdict(list)
    for idx, (d, _) in enumerate(cycles):
        by_length[d].append(idx)
    total = 1
    for d, idxs in by_length.items():
        parts = enumerate_pair_singleton_partitions(
            idxs, [cycles[i][1] for i in idxs], [d] * len(idxs), d % 2 == 1, r
        )
        total *= sum((d * r) ** p.n2 * r ** p.n1 for p in parts)
    return total


def count_formula(g: ColoredPermutation) -> int:
    """Product over cycle lengths d of sum_P (d r)^{pairs} r^{singletons}.

    Odd d allows zero-colored singletons; even d allows pairs only.
    """
    cycles = [(c.length, c.color) for c in colored_cycles(g)]
    return _formula(cycles, g.r)


def count_sqroots_sn(sigma: Sequence[int] | ColoredPermutation) -> int:
    """#{v in S_n : v^2 = sigma} from the cycle type: product over d of sum_P d^{pairs}."""
    perm = sigma.perm if isinstance(sigma, ColoredPermutation) else tuple(sigma)
    plain = ColoredPermutation(1, len(perm), perm, (0,) * len(perm))
    by_length: dict[int, list[int]] = defaultdict(list)
    for idx, c in enumerate(colored_cycles(plain)):
        by_length[c.length].append(idx)
    total = 1
    for d, idxs in by_length.items():
        parts = enumerate_pair_singleton_partitions(idxs, [0] * len(idxs), [d] * len(idxs), d % 2 == 1, 1)
        total *= sum(d ** p.n2 for p in parts)
    return total


def sqroots_sn_bruteforce(sigma: Sequence[int]) -> int:
    n = len(sigma)
    target = tuple(sigma)
    return sum(
        1 for v in itertools.permutations(range(1, n + 1))
        if tuple(v[v[j] - 1] for j in range(n)) == target
    )
