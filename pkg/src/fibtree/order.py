"""The subtree partial order, self-containment, and bounded join search.

One tree sits inside another when some u-node of the host carries the
guest's root label and its v-child carries the guest's second label;
the guest is then reproduced label for label.  On identities this is
generated by two affine maps: L descends to the first left subtree,
R to the first right subtree (two levels down).  Joins are searched by
enumerating inverse-map ancestors to a bounded depth; an empty result
bounds the search, it proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .goldring import Atom, GoldInt, MapWord, _apply_atom, fib
from .fibword import U, letter_at, u_count
from .tree import FibTree
from .wythoff import u

DEFAULT_SUBTREE_CAP = 30
DEFAULT_SEARCH_DEPTH = 10


@dataclass(frozen=True)
class SubtreeWitness:
    """Location of the guest's root inside the host, plus the map word
    sending the host identity to the guest identity."""

    level: int
    pos: int
    word: MapWord


def _word_to(level: int, pos: int) -> MapWord:
    """Map word from the root identity to the u-node at (level, pos).

    Walks upward: a u-node under a u-parent was reached by L from the
    parent; under a v-parent, by R from the grandparent (v-nodes have
    u-parents always).  Collected deepest-first, which is exactly the
    function-composition order the word applies in.
    """
    atoms: list[Atom] = []
    n, q = level, pos
    while n > 0:
        k = u_count(q)
        if letter_at(k) == U:
            atoms.append(Atom.L)
            n, q = n - 1, k
        else:
            atoms.append(Atom.R)
            n, q = n - 2, u_count(k)
    return MapWord(tuple(atoms))


def is_subtree(
    child: FibTree, parent: FibTree, level_cap: int = DEFAULT_SUBTREE_CAP
) -> SubtreeWitness | None:
    """First witness that child sits inside parent, scanning levels 1..cap.

    Per level the candidate is unique and O(1) to test: a u-node whose
    v-child carries child.b must have a parent labeled child.b - child.a,
    pinning its u-count k; accept when k is in range and the k-th u-node
    carries child.a.  None means not found below the cap.
    """
    if child == parent:
        return SubtreeWitness(0, 1, MapWord())
    c, d = child.a, child.b
    for n in range(1, level_cap + 1):
        k = (d - c) - (parent.lo(n - 1) - 1)
        if not 1 <= k <= fib(n + 1):
            continue
        if parent.lo(n) - 1 + u(k) != c:
            continue
        pos = u(k)
        return SubtreeWitness(n, pos, _word_to(n, pos))
    return None


def subtree_at(t: FibTree, w: MapWord) -> FibTree:
    """The subtree reached by a forward word of L and R steps."""
    if not w.is_forward():
        raise ValueError(f"only L and R atoms descend to subtrees, got {w}")
    z = w.apply(t.gold())
    return FibTree(z.a, z.b)


def self_containment(t: FibTree, depth: int) -> list[MapWord]:
    """All nonempty forward words of length <= depth fixing t's identity.

    Nonempty only for F[1,2] (pure-L words, fixed point phi^3) and
    F[0,0] (pure-R words, fixed point 0).
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    z0 = t.gold()
    hits: list[MapWord] = []

    def extend(atoms: tuple[Atom, ...], value: GoldInt) -> None:
        # value == apply(atoms, z0); prepending an atom applies it on top.
        if atoms and value == z0:
            hits.append(MapWord(atoms))
        if len(atoms) == depth:
            return
        for a in (Atom.L, Atom.R):
            extend((a,) + atoms, _apply_atom(a, value))

    extend((), z0)
    hits.sort(key=lambda w: (len(w), w.tokens()))
    return hits


def _ancestors(t: FibTree, depth: int) -> set[tuple[int, int]]:
    """Identities reachable from t by inverse words of length <= depth (t included)."""
    out: set[tuple[int, int]] = set()

    def extend(length: int, value: GoldInt) -> None:
        out.add((value.a, value.b))
        if length == depth:
            return
        for a in (Atom.LINV, Atom.RINV):
            extend(length + 1, _apply_atom(a, value))

    extend(0, t.gold())
    return out


def least_upper_bound(
    t1: FibTree, t2: FibTree, depth: int, level_cap: int | None = None
) -> list[FibTree]:
    """Nearest common ancestors found within the given inverse-word depth.

    Widens the inverse-word radius one step at a time until the two
    ancestor sets first intersect, then keeps the intersection's trees
    containing no other candidate (containment decided by is_subtree up
    to level_cap, default 4*depth + 2).  Stopping at the first nonempty
    radius keeps far-off incomparable ancestors out of the answer.  An
    empty list means nothing was found within the depth, not that no
    upper bound exists.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if level_cap is None:
        level_cap = 4 * depth + 2
    for d in range(depth + 1):
        common = sorted(_ancestors(t1, d) & _ancestors(t2, d))
        if common:
            break
    else:
        return []
    trees = [FibTree(a, b) for a, b in common]
    return [
        x
        for x in trees
        if not any(y != x and is_subtree(y, x, level_cap) for y in trees)
    ]
