"""Exact arithmetic in the cyclotomic integers Z[w], w = exp(2*pi*i/r).

Elements are stored as integer coefficient vectors in Z[x]/(x^r - 1), so
addition is componentwise and multiplication is cyclic convolution. Equality
is decided after reduction modulo the r-th cyclotomic polynomial, which is
done lazily and cached.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class ModulusMismatch(ValueError):
    pass


class NotRationalInteger(ValueError):
    pass


# -- integer polynomials, coefficient lists lowest degree first --------------

def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_monic(a: Sequence[int], m: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide ``a`` by the monic polynomial ``m`` over the integers."""
    if m[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    dm = len(m) - 1
    if len(rem) - 1 < dm:
        return [0], _trim(rem)
    quot = [0] * (len(rem) - dm)
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c:
            quot[k - dm] = c
            for t in range(dm + 1):
                rem[k - dm + t] -= c * m[t]
    return _trim(quot), _trim(rem[:dm] if dm else [0])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Phi_r as a coefficient tuple, lowest degree first.

    Obtained from x^r - 1 by exact division by Phi_d for every proper
    divisor d of r.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    p = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            p, rem = _poly_divmod_monic(p, cyclotomic_polynomial(d))
            assert rem == [0], f"Phi_{d} does not divide x^{r}-1"
    return tuple(p)


def euler_phi(r: int) -> int:
    return sum(1 for k in range(1, r + 1) if gcd(k, r) == 1)


# -- CycEl ------------------------------------------------------------------

class CycEl:
    """An element sum(coeffs[k] * w**k) of Z[w] with w a primitive r-th root of unity."""

    __slots__ = ("r", "coeffs", "_canon")

    def __init__(self, r: int, coeffs: Iterable[int] | None = None):
        if r < 1:
            raise ValueError(f"r must be >= 1, got {r}")
        c = [0] * r
        if coeffs is not None:
            # fold any longer vector using x^r = 1
            for k, v in enumerate(coeffs):
                c[k % r] += int(v)
        self.r = r
        self.coeffs: tuple[int, ...] = tuple(c)
        self._canon: tuple[int, ...] | None = None

    @classmethod
    def integer(cls, r: int, value: int) -> "CycEl":
        c = [0] * r
        c[0] = value
        return cls(r, c)

    @classmethod
    def zero(cls, r: int) -> "CycEl":
        return cls(r)

    @classmethod
    def one(cls, r: int) -> "CycEl":
        return cls.integer(r, 1)

    # canonical form
    def canonical(self) -> tuple[int, ...]:
        """Remainder modulo Phi_r, padded to length phi(r)."""
        if self._canon is None:
            phi = cyclotomic_polynomial(self.r)
            _, rem = _poly_divmod_monic(list(self.coeffs), phi)
            deg = len(phi) - 1
            self._canon = tuple(rem + [0] * (deg - len(rem)))
        return self._canon

    def reduced(self) -> "CycEl":
        """Representative whose raw vector is the canonical remainder."""
        return CycEl(self.r, self.canonical())

    def _coerce(self, other) -> "CycEl":
        if isinstance(other, CycEl):
            if other.r != self.r:
                raise ModulusMismatch(f"moduli differ: {self.r} != {other.r}")
            return other
        if isinstance(other, int):
            return CycEl.integer(self.r, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycEl(self.r, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycEl":
        return CycEl(self.r, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycEl(self.r, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        r = self.r
        out = [0] * r
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[(i + j) % r] += a * b
        return CycEl(r, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycEl":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycEl.one(self.r)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycEl.integer(self.r, other)
        if not isinstance(other, CycEl):
            return NotImplemented
        return self.r == other.r and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.r, self.canonical()))

    def conj(self) -> "CycEl":
        """Complex conjugate: w**k -> w**(r-k)."""
        r = self.r
        return CycEl(r, [self.coeffs[(-k) % r] for k in range(r)])

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.canonical()[1:])

    def as_integer(self) -> int:
        can = self.canonical()
        if any(can[1:]):
            raise NotRationalInteger(f"{self!r} is not a rational integer")
        return can[0] if can else 0

    def __int__(self) -> int:
        return self.as_integer()

    def to_complex(self) -> complex:
        """Floating-point embedding, for display only."""
        w = cmath.exp(2j * cmath.pi / self.r)
        return sum(c * w**k for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "CycEl":
        return cls(int(obj["r"]), obj["coeffs"])

    def __repr__(self) -> str:
        return f"CycEl(r={self.r}, coeffs={list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.canonical()):
            if c == 0:
                continue
            mono = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def omega_pow(r: int, k: int) -> CycEl:
    """w**k, exponent taken mod r."""
    c = [0] * r
    c[k % r] = 1
    return CycEl(r, c)


def root_of_unity_sum(r: int, a: int) -> CycEl:
    """sum_{j=0}^{r-1} w**(j*a)."""
    c = [0] * r
    for j in range(r):
        c[(j * a) % r] += 1
    return CycEl(r, c)
