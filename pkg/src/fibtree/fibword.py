"""Fibonacci words over the alphabet {u, v} and their position combinatorics.

Finite levels follow the concatenation recursion; queries against the
infinite word (letters, u-counts, parent positions) are answered in O(1)
big-int operations through the Wythoff sequences, so they work far beyond
any materialized prefix.  Positions are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .goldring import fib
from .wythoff import u

U = "u"
V = "v"

# Materialization cap: level 30 is about 2.1M letters.
MAX_WORD_LEVEL = 30


@dataclass(frozen=True)
class Word:
    """Finite Fibonacci word: level n, F_{n+2} letters."""

    level: int
    letters: str

    def __len__(self) -> int:
        return len(self.letters)

    def letter(self, i: int) -> str:
        """Letter at 1-based position i."""
        if not 1 <= i <= len(self.letters):
            raise ValueError(f"position {i} outside 1..{len(self.letters)}")
        return self.letters[i - 1]


@lru_cache(maxsize=None)
def _letters(n: int) -> str:
    if n == 0:
        return U
    if n == 1:
        return U + V
    return _letters(n - 1) + _letters(n - 2)


def word(n: int, max_level: int = MAX_WORD_LEVEL) -> Word:
    """The level-n Fibonacci word, built by the concatenation recursion."""
    if n < 0:
        raise ValueError(f"word level must be >= 0, got {n}")
    if n > max_level:
        raise ValueError(f"word level {n} exceeds materialization cap {max_level}")
    return Word(n, _letters(n))


def letter_at(i: int) -> str:
    """Letter of the infinite Fibonacci word at position i >= 1.

    Position i carries a u exactly when i is a u-value, i.e. when the
    k-th u (k the inclusive u-count at i) sits at i itself.
    """
    k = u_count(i)
    return U if u(k) == i else V


def u_count(i: int) -> int:
    """Number of u letters at positions 1..i inclusive."""
    if i < 1:
        raise ValueError(f"position must be >= 1, got {i}")
    return u(i + 1) - (i + 1)


def v_count(i: int) -> int:
    """Number of v letters at positions 1..i inclusive."""
    return i - u_count(i)


def parent_position(i: int) -> int:
    """Position in the previous level of the letter that generates position i.

    Under the substitutions u -> uv, v -> u this is the inclusive
    u-count at i: u's to the left of the generator each add two letters,
    v's add one.
    """
    return u_count(i)
