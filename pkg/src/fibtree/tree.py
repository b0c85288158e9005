"""Labeled trees on the Fibonacci generation scheme u -> uv, v -> u.

A tree is identified by two integers: root label a, and b the label of
the root's v-child.  Level n then carries exactly the consecutive
integers from hi(n) - F_{n+2} + 1 to hi(n), where hi follows the
Fibonacci recursion from (a, b).  Every node query here is closed-form
and O(1) in big-int operations; `build_levels` applies the three child
labeling rules literally and exists as the independent oracle for the
closed forms (and for explicit dumps).
"""

from __future__ import annotations

from dataclasses import dataclass

from .goldring import GoldInt, fib
from .fibword import U, V, Word, letter_at, u_count, v_count, word
from .wythoff import FibSeq, u, v

# Rule-by-rule construction cap: level n holds F_{n+2} nodes.
MAX_BUILD_LEVEL = 30

# One rules-built node: (label, letter, 1-based parent position or None).
LevelNode = tuple[int, str, int | None]


@dataclass(frozen=True)
class FibTree:
    """Tree with root label a and first-level labels b-1, b."""

    a: int
    b: int

    def gold(self) -> GoldInt:
        return GoldInt(self.a, self.b)

    def seq(self) -> FibSeq:
        """Rightmost labels per level, as a Fibonacci sequence."""
        return FibSeq(self.a, self.b)

    def hi(self, n: int) -> int:
        """Rightmost label at level n."""
        return self.seq().term(n)

    def lo(self, n: int) -> int:
        """Leftmost label at level n."""
        return self.hi(n) - fib(n + 2) + 1

    def width(self, n: int) -> int:
        return fib(n + 2)

    def __str__(self) -> str:
        return f"F[{self.a},{self.b}]"


@dataclass(frozen=True)
class NodeRef:
    """Address of one node: level n >= 0 and 1-based position within the level."""

    level: int
    pos: int


@dataclass(frozen=True)
class LevelLabeling:
    """Closed-form description of one level: label interval plus letter pattern."""

    n: int
    lo: int
    hi: int

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    @property
    def pattern(self) -> Word:
        return word(self.n)

    def labels(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, label: int) -> bool:
        return self.lo <= label <= self.hi


def level_interval(t: FibTree, n: int) -> LevelLabeling:
    """The interval of consecutive labels at level n."""
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    return LevelLabeling(n, t.lo(n), t.hi(n))


def build_levels(t: FibTree, n: int, max_level: int = MAX_BUILD_LEVEL) -> list[list[LevelNode]]:
    """Levels 0..n built by literally applying the three labeling rules.

    Rules: the root (labeled a) gets children labeled b-1 (u) and b (v);
    a u-node labeled y under a parent labeled x gets children x+y-1 (u)
    and x+y (v); a v-node labeled t under z gets the single child z+t (u).
    """
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    if n > max_level:
        raise ValueError(f"level {n} exceeds build cap {max_level}")
    levels: list[list[LevelNode]] = [[(t.a, U, None)]]
    if n == 0:
        return levels
    levels.append([(t.b - 1, U, 1), (t.b, V, 1)])
    for _ in range(2, n + 1):
        prev = levels[-1]
        above = levels[-2]
        nxt: list[LevelNode] = []
        for pos, (label, letter, ppos) in enumerate(prev, 1):
            x = above[ppos - 1][0]
            if letter == U:
                nxt.append((x + label - 1, U, pos))
                nxt.append((x + label, V, pos))
            else:
                nxt.append((x + label, U, pos))
        levels.append(nxt)
    return levels


def build_level_by_rules(t: FibTree, n: int, max_level: int = MAX_BUILD_LEVEL) -> list[LevelNode]:
    """Level n alone, from the rule-by-rule construction."""
    return build_levels(t, n, max_level)[n]


def _check_ref(t: FibTree, ref: NodeRef) -> None:
    if ref.level < 0:
        raise ValueError(f"level must be >= 0, got {ref.level}")
    if not 1 <= ref.pos <= t.width(ref.level):
        raise ValueError(
            f"position {ref.pos} outside 1..{t.width(ref.level)} at level {ref.level}"
        )


def node_label(t: FibTree, ref: NodeRef) -> tuple[int, str]:
    """Label and letter of one node.

    Computed twice -- interval offset, and the Wythoff-sequence form
    lo - 1 + u(k) (u-node, k its inclusive u-count) or lo - 1 + v(l)
    (v-node, l its inclusive v-count) -- and the two must agree.
    """
    _check_ref(t, ref)
    lo = t.lo(ref.level)
    direct = lo + ref.pos - 1
    letter = letter_at(ref.pos)
    if letter == U:
        via_wythoff = lo - 1 + u(u_count(ref.pos))
    else:
        via_wythoff = lo - 1 + v(v_count(ref.pos))
    if direct != via_wythoff:
        raise RuntimeError(f"label formulas disagree at {ref}: {direct} vs {via_wythoff}")
    return direct, letter


def parent_label(t: FibTree, ref: NodeRef) -> int:
    """Label of the parent node: lo(level-1) - 1 + inclusive u-count at pos."""
    _check_ref(t, ref)
    if ref.level == 0:
        raise ValueError("root has no parent")
    return t.lo(ref.level - 1) - 1 + u_count(ref.pos)


def children_labels(t: FibTree, ref: NodeRef) -> list[tuple[int, str]]:
    """Labels and letters of the node's children, by the labeling rules."""
    label, letter = node_label(t, ref)
    if ref.level == 0:
        return [(t.b - 1, U), (t.b, V)]
    x = parent_label(t, ref)
    if letter == U:
        return [(x + label - 1, U), (x + label, V)]
    return [(x + label, U)]


def branch_sequence(t: FibTree, start: NodeRef, length: int) -> list[int]:
    """Labels along the ascending branch rooted at a u-node.

    The branch alternates u- and v-nodes (u-node -> its v-child -> that
    child's u-child -> ...), so consecutive labels obey the Fibonacci
    recursion; the first two are the node's label and its v-child's.
    """
    if length < 2:
        raise ValueError(f"branch length must be >= 2, got {length}")
    label, letter = node_label(t, start)
    if letter != U:
        raise ValueError(f"branch must start at a u-node, got v at {start}")
    second = t.b if start.level == 0 else parent_label(t, start) + label
    out = [label, second]
    while len(out) < length:
        out.append(out[-2] + out[-1])
    return out
