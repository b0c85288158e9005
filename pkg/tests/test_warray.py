import pytest

from fibtree.fibword import U
from fibtree.goldring import fib
from fibtree.tree import FibTree, NodeRef, build_levels, parent_label
from fibtree.warray import (
    hofstadter_g,
    hofstadter_levels,
    primitive_pairs_in_tree,
    wythoff_array,
)
from fibtree.wythoff import u, v

T12 = FibTree(1, 2)


def test_array_first_rows():
    arr = wythoff_array(4, 6)
    assert arr.rows[0] == (1, 2, 3, 5, 8, 13)
    assert arr.rows[1] == (4, 7, 11, 18, 29, 47)
    assert arr.rows[2] == (6, 10, 16, 26, 42, 68)
    assert arr.rows[3] == (9, 15, 24, 39, 63, 102)
    assert arr.shape == (4, 6)


def test_array_row_seeds_are_primitive_pairs():
    arr = wythoff_array(25, 2)
    for j, row in enumerate(arr.rows, 1):
        assert row == (u(u(j)), v(u(j)))


def test_array_validation():
    with pytest.raises(ValueError):
        wythoff_array(0, 5)
    with pytest.raises(ValueError):
        wythoff_array(3, 1)


def test_array_corner_properties():
    arr = wythoff_array(40, 10)
    flat = [x for row in arr.rows for x in row]
    assert len(set(flat)) == 400
    for row in arr.rows:
        assert all(row[i] < row[i + 1] for i in range(9))
    starts = [row[0] for row in arr.rows]
    assert all(starts[i] < starts[i + 1] for i in range(39))
    assert set(range(1, 101)) <= set(flat)


def test_hofstadter_levels_fixture():
    assert hofstadter_levels(4) == [(1, 1), (2, 2), (3, 3), (4, 5), (6, 8)]
    assert hofstadter_levels(5)[5] == (9, 13)


def test_hofstadter_levels_concatenate_to_consecutive_integers():
    flat = []
    for lo, hi in hofstadter_levels(10):
        flat.extend(range(lo, hi + 1))
    assert flat == list(range(1, 145))


def test_hofstadter_levels_are_the_right_region():
    # brute force: drop the first F_{n+1} positions (the nested left copy)
    levels = build_levels(T12, 10)
    intervals = hofstadter_levels(10)
    for n in range(1, 11):
        rest = [label for label, _, _ in levels[n][fib(n + 1):]]
        lo, hi = intervals[n]
        assert rest == list(range(lo, hi + 1))


def test_hofstadter_levels_validation():
    with pytest.raises(ValueError):
        hofstadter_levels(-1)


def test_g_small_values():
    assert [hofstadter_g(n) for n in range(8)] == [0, 1, 1, 2, 3, 3, 4, 4]


def test_g_matches_recursion_definition():
    for n in range(1, 2000):
        assert hofstadter_g(n) == n - hofstadter_g(hofstadter_g(n - 1))


def test_g_equals_u_count_of_the_infinite_word():
    from fibtree.fibword import u_count

    for n in range(1, 10**4 + 1):
        assert hofstadter_g(n) == u_count(n)


def test_g_is_the_parent_label_in_the_plus_tree():
    for n in range(1, 3000):
        g = hofstadter_g(n)
        m = 1
        while fib(m + 2) < n:
            m += 1
        assert parent_label(T12, NodeRef(m, n)) == g
        assert parent_label(T12, NodeRef(m + 1, n)) == g


def test_g_validation():
    with pytest.raises(ValueError):
        hofstadter_g(-1)


def test_primitive_pairs_anchors():
    assert primitive_pairs_in_tree(FibTree(0, 1), 1) == [((0, 0), 1, 1)]
    assert primitive_pairs_in_tree(FibTree(5, -2), 0) == []
    found = primitive_pairs_in_tree(T12, 4)
    assert ((4, 7), 3, 4) in found


def test_primitive_pairs_in_plus_tree_are_wythoff_rows():
    # every primitive pair of F[1,2] seeds some array row
    arr = wythoff_array(60, 2)
    seeds = set(arr.rows)
    for pair, level, pos in primitive_pairs_in_tree(T12, 9):
        assert pair in seeds


def test_primitive_pairs_match_definition():
    t = FibTree(-1, 2)
    levels = build_levels(t, 8)
    found = set()
    for n in range(1, 9):
        above = levels[n - 1]
        for pos, (label, letter, ppos) in enumerate(levels[n], 1):
            if letter == U and above[ppos - 1][1] == U:
                found.add((n, pos))
    got = {(level, pos) for _, level, pos in primitive_pairs_in_tree(t, 8)}
    assert got == found
