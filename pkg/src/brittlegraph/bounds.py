"""Explicit brittleness thresholds ``ell(k, n)`` for the four obstruction families.

Every graph whose k-brittleness exceeds (or, for the vertex family, reaches)
``ell(k, n)`` contains n copies of one of the obstructions.  The values are
exact big integers.  The rank family goes through a multicolour Ramsey number
``R(n; k)`` and through the unavoidable bipartite pattern function ``f(n)``,
neither of which has a closed form; both are pluggable upper bounds, so a
rank-family result is only as meaningful as the rules plugged in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

MAX_BITS = 1 << 20

FAMILIES = ("vertex", "edge", "matching", "rank")


class BoundTooLarge(OverflowError):
    """Value would need more than ``MAX_BITS`` bits to write down."""


def _pow(base: int, exp: int) -> int:
    if base > 1 and (exp > MAX_BITS or exp * math.log2(base) > MAX_BITS):
        shown = exp if exp.bit_length() <= 64 else f"(a {exp.bit_length()}-bit exponent)"
        raise BoundTooLarge(f"{base}^{shown} has more than {MAX_BITS} bits")
    return base**exp


def ramsey_pigeonhole(n: int, colors: int) -> int:
    """Upper bound ``colors^(colors*(n-1)) + 1`` on ``R(n; colors)``."""
    return _pow(colors, colors * (n - 1)) + 1


def dov_placeholder(n: int) -> int:
    """Placeholder ``2^(2^(2n))`` for the bipartite pattern function; not tight."""
    return _pow(2, _pow(2, 2 * n))


@dataclass(frozen=True)
class BoundParams:
    k: int
    n: int
    ramsey_bound: Callable[[int, int], int] | None = field(default=ramsey_pigeonhole)
    dov_bound: Callable[[int], int] | None = field(default=dov_placeholder)

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise ValueError("k and n must be positive")


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def vertex_bound(k: int, n: int) -> int:
    if k == 1:
        return 256 * n**4
    sunflower = k * k * math.factorial(k) * _pow(math.comb((2 * k + 1) * k, 2 * k), k) * _pow(n - 1, k)
    return vertex_bound(k - 1, 4 * (k + 1) ** 2 * n * n + sunflower) + sunflower


def edge_bound(k: int, n: int) -> int:
    if k == 1:
        return n * (n - 1)
    return edge_bound(k - 1, 4 * k * (n - 1) ** 2 + 1)


def matching_bound(k: int, n: int) -> int:
    return _pow(k + 1, k) * (n - 1)


@dataclass(frozen=True)
class RankBounds:
    """The rank-family helper functions with the two external bounds plugged in."""

    ramsey: Callable[[int, int], int]
    dov: Callable[[int], int]

    def f1(self, k: int, n: int) -> int:
        size = max(_ceil_half((k + 2) * n - 1) + 1, n + 3)
        return 2 ** (k - 1) * (self.ramsey(size, (2 ** (k - 1)) ** 2) - 1) + 1

    def f2(self, k: int, n: int) -> int:
        return self.f1(k, n) + 2

    def n3(self, k: int, n: int) -> int:
        return max(self.f1(k, n), self.f2(k, n), _ceil_half((k + 2) * n - 1))

    def n2(self, k: int, n: int) -> int:
        if k > 1:
            return (k - 1) * self.n3(k, n) + 1
        return max(n + 2, _ceil_half(3 * n + 1))

    def n1(self, k: int, n: int) -> int:
        return self.ramsey(self.n2(k, n), 2)

    def N(self, k: int, n: int) -> int:
        return self.dov(self.n1(k, n))

    def ell(self, k: int, n: int) -> int:
        if k == 1:
            l2 = max(n + 2, _ceil_half(3 * n + 1))
            return self.dov(self.ramsey(l2, 4)) - 1
        l3 = k * _pow(2, k * (self.N(k, n) - 1)) + 1
        l2 = max((k + 2) * n, _pow(2, math.comb(k + 1, 2)) * (n - 1) + 2)
        l1 = self.ramsey(l2, 2 ** (k + 1))
        return self.ell(k - 1, l3) + (k + 1) ** 2 * (l1 - 1)


def bound_ell(family: str, p: BoundParams) -> int:
    """Threshold ``ell(k, n)`` for the named family.

    Raises :class:`BoundTooLarge` when an intermediate value cannot be written
    down, which happens for the rank family under the default rules.
    """
    if family == "vertex":
        return vertex_bound(p.k, p.n)
    if family == "edge":
        return edge_bound(p.k, p.n)
    if family == "matching":
        return matching_bound(p.k, p.n)
    if family == "rank":
        if p.ramsey_bound is None or p.dov_bound is None:
            raise ValueError("the rank family needs both a Ramsey and a bipartite-pattern bound")
        return RankBounds(p.ramsey_bound, p.dov_bound).ell(p.k, p.n)
    raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
