"""Wythoff pair sequences extended to all of Z, and two-term Fibonacci seeds.

The lower sequence is u(n) = floor(n*phi) for n > 0 (OEIS A000201), with
u(0) = -1 and u(-n) = -u(n) - 1; the upper sequence is v(n) = u(n) + n
(A001950 on the positive side).  Floors are computed through integer
square roots, never through floats: 5*n**2 is not a perfect square for
n != 0, so floor((n + sqrt(5 n^2)) / 2) is exact and unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .goldring import GoldInt, fib, gold_sign


def u(n: int) -> int:
    """Lower Wythoff value at any integer rank."""
    if n == 0:
        return -1
    if n > 0:
        return (n + isqrt(5 * n * n)) // 2
    m = -n
    return -((m + isqrt(5 * m * m)) // 2) - 1


def v(n: int) -> int:
    """Upper Wythoff value, v(n) = u(n) + n."""
    return u(n) + n


def u_inverse(y: int) -> int | None:
    """The unique rank m with u(m) == y, or None when y is not a u-value.

    For y >= 1 the only candidate is floor((y+1)/phi), computed exactly
    as u(y+1) - (y+1); the negative side mirrors through the reflection
    u(-m) = -u(m) - 1.
    """
    if y >= 1:
        m = u(y + 1) - (y + 1)
        return m if u(m) == y else None
    if y == -1:
        return 0
    if y == 0:
        return None
    m = u_inverse(-y - 1)
    return -m if m is not None and m >= 1 else None


@dataclass(frozen=True)
class WythoffPair:
    """One column of the pair table: rank n with (u(n), v(n))."""

    rank: int
    u_val: int
    v_val: int

    @classmethod
    def at(cls, rank: int) -> WythoffPair:
        uv = u(rank)
        return cls(rank, uv, uv + rank)


def primitive_rank(pair: tuple[int, int]) -> int | None:
    """Rank j in Z* with pair == (u(u(j)), v(u(j))), or None.

    The candidate is recovered by inverting the Beatty map twice with
    exact checks.  The pair (-2, -3) sits at rank -1 = u(0) and is
    rejected because 0 is outside Z*.
    """
    c, d = pair
    rank = d - c
    if u(rank) != c:
        return None
    j = u_inverse(rank)
    if j is None or j == 0:
        return None
    return j


@dataclass(frozen=True)
class FibSeq:
    """A bidirectional Fibonacci sequence seeded by its index-0 and index-1 terms."""

    c: int
    d: int

    def term(self, n: int) -> int:
        """Term at any integer index: c*F_{n-1} + d*F_n."""
        return self.c * fib(n - 1) + self.d * fib(n)

    def pair(self, n: int) -> tuple[int, int]:
        return self.term(n), self.term(n + 1)

    def is_zero(self) -> bool:
        return self.c == 0 and self.d == 0

    def sign(self) -> int:
        """+1 when the terms head to +infinity, -1 to -infinity, 0 for the zero seed."""
        return gold_sign(GoldInt(self.c, self.d))

    def __str__(self) -> str:
        return f"F[{self.c},{self.d}]"


def reference_index(seq: FibSeq) -> int:
    """The unique index nu splitting the alternating and monotonic parts.

    For a positive sequence: term(nu - 1) > term(nu) >= 0; for a negative
    sequence the inequalities flip.  Terms grow geometrically in both
    directions, so the scan window only needs O(bit length) indices.
    """
    if seq.is_zero():
        raise ValueError("reference index undefined for F[0,0]")
    positive = seq.sign() > 0
    span = 3 * max(abs(seq.c), abs(seq.d)).bit_length() + 8
    hits = []
    prev = seq.term(-span - 1)
    cur = seq.term(-span)
    for n in range(-span, span + 1):
        if (prev > cur >= 0) if positive else (prev < cur <= 0):
            hits.append(n)
        prev, cur = cur, prev + cur
    if len(hits) != 1:
        raise RuntimeError(f"reference index scan found {hits} for {seq}")
    return hits[0]
