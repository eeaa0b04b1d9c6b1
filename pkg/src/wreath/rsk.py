"""Colored Robinson-Schensted correspondence for G(r, n).

An element is read as biletters (j, perm[j]) for j = 1..n, each carrying
the color of position j. Letters of color c are row-inserted into P[c] and
their positions recorded in Q[c]. With this attachment the transposed
element maps to the swapped pair (Q, P).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Literal

from .colored_perm import ColoredPermutation, is_absolute_involution
from .shapes import MultiPartition

Tableau = tuple[tuple[int, ...], ...]
Attach = Literal["position", "value"]


def rs_insert(tableau: Tableau, value: int) -> tuple[Tableau, tuple[int, int]]:
    """Row-insert ``value``; returns the new tableau and the cell that was added."""
    rows = [list(row) for row in tableau]
    if any(value in row for row in rows):
        raise ValueError(f"{value} already in tableau")
    x = value
    for i, row in enumerate(rows):
        k = bisect.bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return tuple(tuple(r) for r in rows), (i, k)
        row[k], x = x, row[k]
    rows.append([x])
    return tuple(tuple(r) for r in rows), (len(rows) - 1, 0)


def _place(tableau: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    rows = [list(row) for row in tableau]
    i, j = cell
    if i == len(rows):
        rows.append([])
    assert len(rows[i]) == j
    rows[i].append(value)
    return tuple(tuple(r) for r in rows)


def tableau_shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


@dataclass(frozen=True)
class TableauPair:
    P: tuple[Tableau, ...]
    Q: tuple[Tableau, ...]

    @property
    def shape(self) -> MultiPartition:
        return tuple(tableau_shape(t) for t in self.P)

    def swap(self) -> "TableauPair":
        return TableauPair(self.Q, self.P)

    def to_json(self) -> dict:
        return {
            "P": [[list(row) for row in t] for t in self.P],
            "Q": [[list(row) for row in t] for t in self.Q],
        }


def colored_rsk(pi: ColoredPermutation, attach: Attach = "position") -> TableauPair:
    """Map pi to a pair of r-partite standard tableaux of the same shape.

    ``attach="value"`` gives the letter perm[j] the color stored at index
    perm[j] instead; it is kept only so tests can show it breaks duality.
    """
    P: list[Tableau] = [()] * pi.r
    Q: list[Tableau] = [()] * pi.r
    for j in range(1, pi.n + 1):
        letter = pi.perm[j - 1]
        c = pi.colors[j - 1] if attach == "position" else pi.colors[letter - 1]
        P[c], cell = rs_insert(P[c], letter)
        Q[c] = _place(Q[c], cell, j)
    return TableauPair(tuple(P), tuple(Q))


def _reverse_bump(P: list[list[int]], i: int) -> int:
    """Remove the last cell of row i of P and reverse-bump up to the first row."""
    x = P[i].pop()
    if not P[i]:
        P.pop(i)
    for row in reversed(P[:i]):
        k = bisect.bisect_left(row, x) - 1
        row[k], x = x, row[k]
    return x


def inverse_colored_rsk(pair: TableauPair, r: int, n: int) -> ColoredPermutation:
    if len(pair.P) != r or len(pair.Q) != r:
        raise ValueError("pair must have r components")
    if pair.shape != tuple(tableau_shape(t) for t in pair.Q):
        raise ValueError("P and Q have different shapes")
    perm = [0] * n
    colors = [0] * n
    for c in range(r):
        P = [list(row) for row in pair.P[c]]
        Q = [list(row) for row in pair.Q[c]]
        while Q:
            # the largest recorded position sits at the end of some row
            i = max(range(len(Q)), key=lambda k: Q[k][-1])
            q = Q[i].pop()
            if not Q[i]:
                Q.pop(i)
            p = _reverse_bump(P, i)
            if not 1 <= q <= n or perm[q - 1]:
                raise ValueError("Q entries are not a set of distinct positions in 1..n")
            perm[q - 1] = p
            colors[q - 1] = c
    return ColoredPermutation(r, n, tuple(perm), tuple(colors))


def shape_of_involution(w: ColoredPermutation) -> MultiPartition:
    """Common shape of (P, P) for a symmetric element."""
    if not is_absolute_involution(w):
        raise ValueError(f"{w} is not an absolute involution")
    pair = colored_rsk(w)
    assert pair.P == pair.Q
    return pair.shape
