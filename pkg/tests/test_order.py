from itertools import product

import pytest

from fibtree.fibword import U
from fibtree.goldring import Atom, MapWord
from fibtree.order import is_subtree, least_upper_bound, self_containment, subtree_at
from fibtree.tree import FibTree, NodeRef, build_levels, node_label, parent_label

T01 = FibTree(0, 1)
T12 = FibTree(1, 2)
T00 = FibTree(0, 0)


def test_is_subtree_anchors():
    w = is_subtree(T00, T01)
    assert w is not None and w.level == 1
    w = is_subtree(T12, T01)
    assert w is not None and w.level == 2
    assert is_subtree(T00, T12) is None


def test_is_subtree_reflexive_witness():
    w = is_subtree(T01, T01)
    assert (w.level, w.pos) == (0, 1)
    assert len(w.word) == 0


def test_witness_word_and_node_are_consistent():
    pairs = [(T00, T01), (T12, T01), (FibTree(0, 1), FibTree(-1, 1)), (FibTree(1, 1), FibTree(-1, 2))]
    for child, parent in pairs:
        w = is_subtree(child, parent, level_cap=20)
        assert w is not None
        # word maps parent identity to child identity
        assert w.word.apply(parent.gold()) == child.gold()
        assert w.word.is_forward()
        # the witness node carries the child's root label, on a u-node
        assert node_label(parent, NodeRef(w.level, w.pos)) == (child.a, U)
        assert parent_label(parent, NodeRef(w.level, w.pos)) == child.b - child.a


def test_is_subtree_matches_brute_force_grid():
    grid = 2
    cap = 10
    trees = [FibTree(a, b) for a in range(-grid, grid + 1) for b in range(-grid, grid + 1)]
    for parent in trees:
        levels = build_levels(parent, cap)
        per_level = []
        for n in range(cap + 1):
            if n == 0:
                per_level.append(set())
                continue
            above = levels[n - 1]
            per_level.append(
                {(lab, above[pp - 1][0]) for lab, let, pp in levels[n] if let == U}
            )
        for child in trees:
            got = is_subtree(child, parent, level_cap=cap)
            if child == parent:
                assert got is not None and got.level == 0
                continue
            brute = next(
                (n for n in range(1, cap + 1) if (child.a, child.b - child.a) in per_level[n]),
                None,
            )
            assert (got.level if got else None) == brute


def test_subtree_at_anchors():
    assert subtree_at(T01, MapWord((Atom.L,))) == T00
    assert subtree_at(T01, MapWord((Atom.R,))) == T12
    assert subtree_at(T12, MapWord((Atom.L,))) == T12


def test_subtree_at_rejects_inverse_atoms():
    with pytest.raises(ValueError, match="L and R"):
        subtree_at(T01, MapWord((Atom.LINV,)))


def test_every_forward_word_lands_inside():
    for t in (T01, FibTree(2, -1)):
        for length in range(1, 5):
            for atoms in product((Atom.L, Atom.R), repeat=length):
                child = subtree_at(t, MapWord(atoms))
                assert is_subtree(child, t, level_cap=2 * length + 2) is not None


def test_self_containment_anchors():
    assert self_containment(T12, 4) == [MapWord((Atom.L,) * k) for k in range(1, 5)]
    assert self_containment(T00, 3) == [MapWord((Atom.R,) * k) for k in range(1, 4)]
    assert self_containment(T01, 8) == []


def test_self_containment_exhaustive_small_grid():
    for a in range(-3, 4):
        for b in range(-3, 4):
            words = self_containment(FibTree(a, b), 7)
            if (a, b) == (1, 2):
                assert all(set(w.atoms) == {Atom.L} for w in words)
            elif (a, b) == (0, 0):
                assert all(set(w.atoms) == {Atom.R} for w in words)
            else:
                assert words == []


def test_self_containment_depth_validation():
    with pytest.raises(ValueError):
        self_containment(T01, 0)


def test_antisymmetry_small_grid():
    trees = [FibTree(a, b) for a in range(-3, 4) for b in range(-3, 4)]
    inside = {}
    for x in trees:
        for y in trees:
            if x != y:
                inside[(x, y)] = is_subtree(y, x, level_cap=12) is not None
    for x in trees:
        for y in trees:
            if x != y:
                assert not (inside[(x, y)] and inside[(y, x)])


def test_lub_known_joins():
    assert least_upper_bound(FibTree(-1, 2), FibTree(-3, 5), 4) == [FibTree(18, -10)]
    assert least_upper_bound(T00, T12, 2) == [T01]


def test_lub_reflexive_and_validation():
    t = FibTree(4, -3)
    assert least_upper_bound(t, t, 3) == [t]
    with pytest.raises(ValueError):
        least_upper_bound(t, t, 0)


def test_lub_results_are_upper_bounds():
    for t1, t2 in [(FibTree(-1, 2), FibTree(-3, 5)), (T00, T12), (FibTree(0, 1), FibTree(1, 1))]:
        for g in least_upper_bound(t1, t2, 5):
            assert is_subtree(t1, g, level_cap=30) is not None
            assert is_subtree(t2, g, level_cap=30) is not None
