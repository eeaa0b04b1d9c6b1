"""Colored permutations: elements of the wreath product G(r, n) = Z_r wr S_n.

An element is a pair (perm, colors). ``perm[j-1]`` is the image of ``j`` and
``colors[j-1]`` is the color carried by position ``j``. The monomial matrix
of an element has entry ``w**colors[j-1]`` in row ``perm[j-1]``, column ``j``;
composition is defined so that this matrix map is a homomorphism.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .cyclotomic import CycEl, omega_pow

DEFAULT_MAX_ORDER = 10**5
_configured_max_order: int | None = None


class DimensionMismatch(ValueError):
    pass


class GroupTooLarge(ValueError):
    pass


def configure_max_order(value: int | None) -> None:
    """Set a process-wide bound on |G| (None restores the environment/default)."""
    global _configured_max_order
    _configured_max_order = value


def max_order(override: int | None = None) -> int:
    """Bound on |G| for enumeration: explicit override, configured value, $WREATH_MAX_ORDER, default."""
    if override is not None:
        return override
    if _configured_max_order is not None:
        return _configured_max_order
    env = os.environ.get("WREATH_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


def group_order(r: int, n: int) -> int:
    return r**n * factorial(n)


def check_order(r: int, n: int, bound: int | None = None) -> None:
    limit = max_order(bound)
    order = group_order(r, n)
    if order > limit:
        raise GroupTooLarge(f"|G({r},{n})| = {order} exceeds the bound {limit}")


@dataclass(frozen=True, order=True)
class ColoredPermutation:
    r: int
    n: int
    perm: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1 or self.n < 0:
            raise ValueError(f"invalid parameters r={self.r}, n={self.n}")
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "colors", tuple(c % self.r for c in self.colors))
        if len(self.perm) != self.n or len(self.colors) != self.n:
            raise ValueError("perm and colors must both have length n")
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{self.n}")

    @classmethod
    def identity(cls, r: int, n: int) -> "ColoredPermutation":
        return cls(r, n, tuple(range(1, n + 1)), (0,) * n)

    @classmethod
    def from_cycles(cls, r: int, n: int, cycles: Sequence[Sequence[int]],
                    colors: Sequence[int] | None = None) -> "ColoredPermutation":
        """Build from disjoint cycles in 1-based notation; missing points are fixed."""
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(r, n, tuple(img), tuple(colors) if colors is not None else (0,) * n)

    # -- group structure ----------------------------------------------------
    def __mul__(self, other: "ColoredPermutation") -> "ColoredPermutation":
        return compose(self, other)

    def inverse(self) -> "ColoredPermutation":
        return inverse(self)

    def bar(self) -> "ColoredPermutation":
        return bar(self)

    @property
    def t(self) -> "ColoredPermutation":
        return transpose(self)

    def is_identity(self) -> bool:
        return all(p == i + 1 for i, p in enumerate(self.perm)) and not any(self.colors)

    def underlying(self) -> tuple[int, ...]:
        """The underlying permutation |v| in one-line notation."""
        return self.perm

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "perm": list(self.perm), "colors": list(self.colors)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict | str) -> "ColoredPermutation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["r"]), int(obj["n"]), tuple(obj["perm"]), tuple(obj["colors"]))

    def __str__(self) -> str:
        body = " ".join(f"{p}^{c}" if c else str(p) for p, c in zip(self.perm, self.colors))
        return f"[{body}]"


def _make(r: int, n: int, perm: tuple[int, ...], colors: tuple[int, ...]) -> ColoredPermutation:
    # trusted inputs only: skips validation
    v = object.__new__(ColoredPermutation)
    object.__setattr__(v, "r", r)
    object.__setattr__(v, "n", n)
    object.__setattr__(v, "perm", perm)
    object.__setattr__(v, "colors", colors)
    return v


def _check_same_group(a: ColoredPermutation, b: ColoredPermutation) -> None:
    if a.r != b.r or a.n != b.n:
        raise DimensionMismatch(f"G({a.r},{a.n}) vs G({b.r},{b.n})")


def compose(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    """The product a*b, acting as matrices: apply b first, then a."""
    _check_same_group(a, b)
    pa, ca, pb, cb, r = a.perm, a.colors, b.perm, b.colors, a.r
    perm = tuple(pa[pb[j] - 1] for j in range(a.n))
    colors = tuple((cb[j] + ca[pb[j] - 1]) % r for j in range(a.n))
    return _make(r, a.n, perm, colors)


def inverse(a: ColoredPermutation) -> ColoredPermutation:
    n, r = a.n, a.r
    perm = [0] * n
    colors = [0] * n
    for j in range(n):
        i = a.perm[j]
        perm[i - 1] = j + 1
        colors[i - 1] = -a.colors[j] % r
    return _make(r, n, tuple(perm), tuple(colors))


def bar(a: ColoredPermutation) -> ColoredPermutation:
    """Negate every color; entrywise complex conjugation of the matrix."""
    return _make(a.r, a.n, a.perm, tuple(-c % a.r for c in a.colors))


def transpose(a: ColoredPermutation) -> ColoredPermutation:
    """inverse(bar(a)); corresponds to the transposed monomial matrix."""
    n = a.n
    perm = [0] * n
    colors = [0] * n
    for j in range(n):
        i = a.perm[j]
        perm[i - 1] = j + 1
        colors[i - 1] = a.colors[j]
    return _make(a.r, n, tuple(perm), tuple(colors))


def is_absolute_involution(a: ColoredPermutation) -> bool:
    """True iff a * bar(a) is the identity, i.e. the monomial matrix is symmetric."""
    p, c = a.perm, a.colors
    return all(p[p[j] - 1] == j + 1 and c[p[j] - 1] == c[j] for j in range(a.n))


def conjugate(h: ColoredPermutation, g: ColoredPermutation) -> ColoredPermutation:
    """h g h^-1."""
    return compose(compose(h, g), inverse(h))


# -- cycles and classes -----------------------------------------------------

@dataclass(frozen=True)
class ColoredCycle:
    support: tuple[int, ...]
    color: int

    @property
    def length(self) -> int:
        return len(self.support)


def colored_cycles(a: ColoredPermutation) -> list[ColoredCycle]:
    """Disjoint cycles of |a|, each starting at its smallest point, with color sums mod r."""
    seen = [False] * (a.n + 1)
    out = []
    for start in range(1, a.n + 1):
        if seen[start]:
            continue
        support = []
        z = 0
        j = start
        while not seen[j]:
            seen[j] = True
            support.append(j)
            z += a.colors[j - 1]
            j = a.perm[j - 1]
        out.append(ColoredCycle(tuple(support), z % a.r))
    return out


@dataclass(frozen=True, order=True)
class ClassType:
    """Conjugacy class label: for each color a, the partition of lengths of a-colored cycles."""
    r: int
    n: int
    parts: tuple[tuple[int, ...], ...]

    def cycles(self) -> list[tuple[int, int]]:
        """(length, color) pairs in a fixed order."""
        return [(k, a) for a, lam in enumerate(self.parts) for k in lam]

    def representative(self) -> ColoredPermutation:
        """Consecutive cycles, each color concentrated on the cycle's first point."""
        img = []
        colors = []
        pos = 1
        for k, a in self.cycles():
            img.extend(list(range(pos + 1, pos + k)) + [pos])
            colors.extend([a] + [0] * (k - 1))
            pos += k
        return ColoredPermutation(self.r, self.n, tuple(img), tuple(colors))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def __str__(self) -> str:
        return "(" + " | ".join(",".join(map(str, p)) or "." for p in self.parts) + ")"


def class_type(a: ColoredPermutation) -> ClassType:
    lengths: list[list[int]] = [[] for _ in range(a.r)]
    for c in colored_cycles(a):
        lengths[c.color].append(c.length)
    return ClassType(a.r, a.n, tuple(tuple(sorted(p, reverse=True)) for p in lengths))


# -- enumeration ------------------------------------------------------------

def enumerate_group(r: int, n: int, bound: int | None = None) -> Iterator[ColoredPermutation]:
    """All r^n * n! elements, lexicographic in (perm, colors)."""
    check_order(r, n, bound)
    color_vectors = list(itertools.product(range(r), repeat=n))
    for perm in itertools.permutations(range(1, n + 1)):
        for colors in color_vectors:
            yield _make(r, n, perm, colors)


def _involutions(n: int) -> Iterator[tuple[int, ...]]:
    """Involutions of S_n in one-line notation (unordered)."""
    def rec(img: list[int], free: list[int]):
        if not free:
            yield tuple(img)
            return
        i, rest = free[0], free[1:]
        img[i - 1] = i
        yield from rec(img, rest)
        for k, j in enumerate(rest):
            img[i - 1], img[j - 1] = j, i
            yield from rec(img, rest[:k] + rest[k + 1:])
            img[j - 1] = j
        img[i - 1] = i

    yield from rec(list(range(1, n + 1)), list(range(1, n + 1)))


def enumerate_absolute_involutions(r: int, n: int, bound: int | None = None) -> list[ColoredPermutation]:
    """Symmetric elements of G(r, n), sorted lexicographically by (perm, colors)."""
    check_order(r, n, bound)
    out = []
    for perm in _involutions(n):
        # one free color per orbit of the involution
        reps = [j for j in range(1, n + 1) if perm[j - 1] >= j]
        for choice in itertools.product(range(r), repeat=len(reps)):
            colors = [0] * n
            for j, c in zip(reps, choice):
                colors[j - 1] = c
                colors[perm[j - 1] - 1] = c
            out.append(ColoredPermutation(r, n, perm, tuple(colors)))
    out.sort(key=lambda v: (v.perm, v.colors))
    return out


def simple_reflections(r: int, n: int) -> list[ColoredPermutation]:
    """s_0 = (id, (1,0,...,0)) and the adjacent transpositions s_1..s_{n-1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    ident = tuple(range(1, n + 1))
    gens = [ColoredPermutation(r, n, ident, (1,) + (0,) * (n - 1))]
    for i in range(1, n):
        img = list(ident)
        img[i - 1], img[i] = i + 1, i
        gens.append(ColoredPermutation(r, n, tuple(img), (0,) * n))
    return gens


def element_order(a: ColoredPermutation) -> int:
    k = 1
    x = a
    while not x.is_identity():
        x = compose(x, a)
        k += 1
    return k


def to_monomial_matrix(a: ColoredPermutation) -> list[list[CycEl]]:
    """n x n matrix with w**colors[j] at row perm[j], column j."""
    zero = CycEl.zero(a.r)
    m = [[zero] * a.n for _ in range(a.n)]
    for j in range(a.n):
        m[a.perm[j] - 1][j] = omega_pow(a.r, a.colors[j])
    return m


def matmul(x: list[list[CycEl]], y: list[list[CycEl]]) -> list[list[CycEl]]:
    n = len(x)
    r = x[0][0].r if n else 1
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = CycEl.zero(r)
            for k in range(n):
                acc = acc + x[i][k] * y[k][j]
            row.append(acc)
        out.append(row)
    return out
