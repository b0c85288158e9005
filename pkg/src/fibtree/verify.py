"""Machine-checkable property suites behind the `verify` CLI subcommand.

Every check returns a list of failure records (empty means pass), so the
CLI can emit one machine-readable report and a nonzero exit code on any
failure.  The structural facts are all exact; no tolerances anywhere.
The decimal oracles here are the one sanctioned use of approximate
golden-ratio values: a 50-digit scaled integer, cross-derived from the
stdlib decimal square root rather than from the integer-sqrt path used
by the library itself.
"""

from __future__ import annotations

import random
from decimal import Decimal, localcontext
from functools import lru_cache

from .algebra import scalar_mul, tree_sum
from .fibword import U, V, letter_at, parent_position, u_count, v_count, word
from .goldring import Atom, GoldInt, MapWord, apply_map, fib, gold_sign, phi_pow
from .order import is_subtree, least_upper_bound, self_containment, subtree_at
from .represent import (
    TreeClass,
    classify,
    count_occurrences,
    find_interval_level,
    find_sequence,
    verify_lemma_shift,
)
from .tree import FibTree, NodeRef, build_levels, node_label, parent_label
from .warray import hofstadter_g, hofstadter_levels, wythoff_array
from .wythoff import FibSeq, u, v

ORACLE_DIGITS = 50
_SCALE = 10**ORACLE_DIGITS

# Fixture: ranks -6..8 of the extended pair table.
TABLE_RANKS = list(range(-6, 9))
TABLE_U = [-10, -9, -7, -5, -4, -2, -1, 1, 3, 4, 6, 8, 9, 11, 12]
TABLE_V = [-16, -14, -11, -8, -6, -3, -1, 2, 5, 7, 10, 13, 15, 18, 20]


@lru_cache(maxsize=None)
def _sqrt5_scaled() -> int:
    """floor(sqrt(5) * 10**50), via decimal arithmetic at guard precision."""
    with localcontext() as ctx:
        ctx.prec = ORACLE_DIGITS + 40
        return int(Decimal(5).sqrt() * _SCALE)


@lru_cache(maxsize=None)
def _phi_scaled() -> int:
    """floor(phi * 10**50)."""
    return (_SCALE + _sqrt5_scaled()) // 2


def beatty_oracle(n: int) -> int:
    """floor(n * phi) from the 50-digit decimal constant; needs n != 0."""
    return (n * _phi_scaled()) // _SCALE


def gold_sign_oracle(z: GoldInt) -> int:
    """Sign of a + b*phi from the 50-digit decimal constant."""
    val = 2 * z.a * _SCALE + z.b * (_SCALE + _sqrt5_scaled())
    return (val > 0) - (val < 0)


def _fail(check: str, detail: str) -> dict:
    return {"check": check, "detail": detail}


# ---------------------------------------------------------------- labels


def check_consecutive_labels(grid: int = 5, max_level: int = 20) -> list[dict]:
    """Rule-built levels equal the closed-form consecutive interval exactly."""
    failures = []
    for a in range(-grid, grid + 1):
        for b in range(-grid, grid + 1):
            t = FibTree(a, b)
            levels = build_levels(t, max_level, max_level=max(30, max_level))
            for n, row in enumerate(levels):
                labels = [node[0] for node in row]
                lo, hi = t.lo(n), t.hi(n)
                if labels != list(range(lo, hi + 1)):
                    failures.append(
                        _fail(
                            "consecutive-labels",
                            f"{t} level {n}: rules give {labels[:4]}.., interval [{lo}..{hi}]",
                        )
                    )
                letters = "".join(node[1] for node in row)
                if letters != word(n).letters:
                    failures.append(
                        _fail("level-pattern", f"{t} level {n}: pattern mismatch")
                    )
    return failures


def check_worked_example() -> list[dict]:
    """The F[0,1] level-5 anchor: label -2 at position 6, parent -1, v-child -3."""
    failures = []
    t = FibTree(0, 1)
    ref = NodeRef(5, 6)
    got = node_label(t, ref)
    if got != (-2, U):
        failures.append(_fail("example-node", f"node (5,6) gave {got}, want (-2, u)"))
    if parent_label(t, ref) != -1:
        failures.append(_fail("example-parent", f"parent gave {parent_label(t, ref)}"))
    from .tree import children_labels

    kids = children_labels(t, ref)
    if kids != [(-4, U), (-3, V)]:
        failures.append(_fail("example-children", f"children gave {kids}"))
    if t.lo(5) != -7 or t.hi(5) != 5:
        failures.append(_fail("example-interval", f"level 5 is [{t.lo(5)}..{t.hi(5)}]"))
    return failures


# --------------------------------------------------------------- wythoff


def check_table_fixture() -> list[dict]:
    failures = []
    for rank, uu, vv in zip(TABLE_RANKS, TABLE_U, TABLE_V):
        if u(rank) != uu or v(rank) != vv:
            failures.append(
                _fail("pair-table", f"rank {rank}: got ({u(rank)},{v(rank)}), want ({uu},{vv})")
            )
    return failures


def check_wythoff_identities(n_id: int = 10**4, n_oracle: int = 10**6) -> list[dict]:
    """v = u + n and v = u(u(n)) + 1 on |n| <= n_id; Beatty floor vs decimal oracle."""
    failures = []
    for n in range(-n_id, n_id + 1):
        un = u(n)
        if v(n) != un + n:
            failures.append(_fail("v-from-u", f"n={n}"))
            break
        if v(n) != u(un) + 1:
            failures.append(_fail("v-from-uu", f"n={n}"))
            break
    for n in range(1, n_id + 1):
        if u(-n) != -u(n) - 1 or v(-n) != -v(n) - 1:
            failures.append(_fail("reflection", f"n={n}"))
            break
    for n in range(1, n_oracle + 1):
        if u(n) != beatty_oracle(n) or u(-n) != beatty_oracle(-n):
            failures.append(_fail("beatty-oracle", f"n={n}: u={u(n)} oracle={beatty_oracle(n)}"))
            break
    return failures


def check_complementarity(limit: int = 10**5) -> list[dict]:
    """Each positive integer <= limit is hit by exactly one of u, v on positive ranks."""
    seen = bytearray(limit + 1)
    failures = []
    n = 1
    while True:
        hit = False
        for val in (u(n), v(n)):
            if val <= limit:
                hit = True
                seen[val] += 1
        if not hit:
            break
        n += 1
    bad = [m for m in range(1, limit + 1) if seen[m] != 1]
    if bad:
        failures.append(_fail("complementarity", f"first miscovered: {bad[:5]}"))
    return failures


# ----------------------------------------------------------------- group


def check_group_laws(samples: int = 1000, bound: int = 10**6, seed: int = 20260808) -> list[dict]:
    failures = []
    rng = random.Random(seed)
    zero = FibTree(0, 0)
    for _ in range(samples):
        t1 = FibTree(rng.randint(-bound, bound), rng.randint(-bound, bound))
        t2 = FibTree(rng.randint(-bound, bound), rng.randint(-bound, bound))
        t3 = FibTree(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if tree_sum(t1, t2) != tree_sum(t2, t1):
            failures.append(_fail("commutativity", f"{t1} {t2}"))
        if tree_sum(tree_sum(t1, t2), t3) != tree_sum(t1, tree_sum(t2, t3)):
            failures.append(_fail("associativity", f"{t1} {t2} {t3}"))
        if tree_sum(t1, zero) != t1:
            failures.append(_fail("identity", f"{t1}"))
        if tree_sum(t1, scalar_mul(-1, t1)) != zero:
            failures.append(_fail("inverse", f"{t1}"))
    return failures


def check_superposition(pairs: int = 20, levels: int = 12, seed: int = 97) -> list[dict]:
    """Level-wise label addition minus the base interval equals the sum tree."""
    failures = []
    rng = random.Random(seed)
    for _ in range(pairs):
        t1 = FibTree(rng.randint(-50, 50), rng.randint(-50, 50))
        t2 = FibTree(rng.randint(-50, 50), rng.randint(-50, 50))
        try:
            tree_sum(t1, t2, verify_levels=levels)
        except RuntimeError as exc:
            failures.append(_fail("superposition", str(exc)))
    if tree_sum(FibTree(0, 1), FibTree(1, 1)) != FibTree(1, 2):
        failures.append(_fail("sum-anchor", "F[0,1] + F[1,1] != F[1,2]"))
    return failures


# ----------------------------------------------------------- represent


def check_classification() -> list[dict]:
    failures = []
    anchors = [
        (FibTree(0, 1), TreeClass.REPRESENTS_Z),
        (FibTree(0, 0), TreeClass.NONPOSITIVE_SIDE),
        (FibTree(1, 2), TreeClass.POSITIVE_SIDE),
    ]
    for t, want in anchors:
        if classify(t) is not want:
            failures.append(_fail("classify", f"{t} -> {classify(t)}, want {want}"))
    # Boundary trees sit exactly on the defining equalities.
    if gold_sign(FibTree(0, 0).gold()) != 0:
        failures.append(_fail("classify-boundary", "F[0,0] not on the zero boundary"))
    if gold_sign(GoldInt(1 - 1, 2 - 2)) != 0:
        failures.append(_fail("classify-boundary", "F[1,2] not on the phi^3 boundary"))
    return failures


SAMPLE_FULL_TREES = (FibTree(0, 1), FibTree(1, 1), FibTree(-1, 2), FibTree(1, 0))


def check_find_sequence(seed_bound: int = 10, cap: int = 60, replay: int = 10) -> list[dict]:
    """Every small seed is located in each sample tree, and the branch replays."""
    failures = []
    for t in SAMPLE_FULL_TREES:
        for c in range(-seed_bound, seed_bound + 1):
            for d in range(-seed_bound, seed_bound + 1):
                s = FibSeq(c, d)
                try:
                    occ = find_sequence(t, s, level_cap=cap)
                except (ValueError, RuntimeError) as exc:
                    failures.append(_fail("find-sequence", f"{t} {s}: {exc}"))
                    continue
                from .tree import branch_sequence

                got = branch_sequence(t, NodeRef(occ.level, occ.pos), replay)
                want = [s.term(occ.shift + k) for k in range(replay)]
                if got != want:
                    failures.append(_fail("find-sequence-replay", f"{t} {s}: {got} vs {want}"))
    return failures


def check_zero_occurrences(cap: int = 15) -> list[dict]:
    failures = []
    zero = FibSeq(0, 0)
    for t in SAMPLE_FULL_TREES:
        n = count_occurrences(t, zero, cap)
        if n != 1:
            failures.append(_fail("zero-count", f"{t}: {n} occurrences up to level {cap}"))
    return failures


def check_interval_levels() -> list[dict]:
    failures = []
    t = FibTree(0, 1)
    anchors = [((-7, 5), 5), ((0, 0), 0), ((-100, 100), 12)]
    for (lo, hi), want in anchors:
        got = find_interval_level(t, lo, hi)
        if got != want:
            failures.append(_fail("interval-level", f"[{lo}..{hi}] -> {got}, want {want}"))
    return failures


def check_lemma_witnesses(
    pairs: int = 50, n_max: int = 30, zero_trees: int = 20, zero_window: int = 40, seed: int = 11
) -> list[dict]:
    """Shift-identity stabilization, and uniqueness of the zero-pair level."""
    failures = []
    rng = random.Random(seed)
    done = 0
    while done < pairs:
        s = FibSeq(rng.randint(-20, 20), rng.randint(-20, 20))
        i = rng.randint(-50, 50)
        if s.is_zero() or i == 0:
            continue
        done += 1
        try:
            n1 = verify_lemma_shift(s, i, n_max)
        except ValueError as exc:
            failures.append(_fail("lemma-shift", f"{s} i={i}: {exc}"))
            continue
        if not 0 <= n1 <= n_max:
            failures.append(_fail("lemma-shift", f"{s} i={i}: n1={n1} out of range"))
    done = 0
    while done < zero_trees:
        t = FibTree(rng.randint(-50, 50), rng.randint(-50, 50))
        if classify(t) is not TreeClass.REPRESENTS_Z:
            continue
        done += 1
        edge = FibSeq(t.a - 1, t.b - 2)
        hits = [
            n
            for n in range(1, zero_window + 1)
            if 1 <= 1 - edge.term(n - 2) <= fib(n)
            and u(1 - edge.term(n - 2)) + edge.term(n - 1) == 0
        ]
        if len(hits) != 1:
            failures.append(_fail("zero-level-unique", f"{t}: hits at {hits}"))
    return failures


# ------------------------------------------------------------------ order


def check_order_brute_force(grid: int = 4, cap: int = 12) -> list[dict]:
    """is_subtree agrees with scanning rule-built levels for the witness node."""
    failures = []
    trees = [FibTree(a, b) for a in range(-grid, grid + 1) for b in range(-grid, grid + 1)]
    for parent in trees:
        levels = build_levels(parent, cap, max_level=max(cap, 30))
        # (label, parent label) of every u-node, per level
        found: list[set[tuple[int, int]]] = [set()]
        for n in range(1, cap + 1):
            above = levels[n - 1]
            found.append(
                {
                    (label, above[ppos - 1][0])
                    for label, letter, ppos in levels[n]
                    if letter == U
                }
            )
        for child in trees:
            witness = is_subtree(child, parent, level_cap=cap)
            brute = None
            if child == parent:
                brute = 0
            else:
                for n in range(1, cap + 1):
                    if (child.a, child.b - child.a) in found[n]:
                        brute = n
                        break
            got = witness.level if witness else None
            if got != brute:
                failures.append(
                    _fail("subtree-brute", f"{child} in {parent}: decided {got}, brute {brute}")
                )
    return failures


def check_order_antisymmetry(grid: int = 6, cap: int = 15) -> list[dict]:
    failures = []
    trees = [FibTree(a, b) for a in range(-grid, grid + 1) for b in range(-grid, grid + 1)]
    contains = {}
    for x in trees:
        for y in trees:
            if x != y:
                contains[(x, y)] = is_subtree(y, x, level_cap=cap) is not None
    for x in trees:
        for y in trees:
            if x != y and contains[(x, y)] and contains[(y, x)]:
                failures.append(_fail("antisymmetry", f"{x} and {y} mutually contained"))
    return failures


def check_self_containment(grid: int = 6, depth: int = 10) -> list[dict]:
    failures = []
    for a in range(-grid, grid + 1):
        for b in range(-grid, grid + 1):
            words = self_containment(FibTree(a, b), depth)
            if (a, b) == (1, 2):
                want = [MapWord((Atom.L,) * k) for k in range(1, depth + 1)]
                if words != want:
                    failures.append(_fail("self-containment", f"F[1,2]: {len(words)} words"))
            elif (a, b) == (0, 0):
                want = [MapWord((Atom.R,) * k) for k in range(1, depth + 1)]
                if words != want:
                    failures.append(_fail("self-containment", f"F[0,0]: {len(words)} words"))
            elif words:
                failures.append(_fail("self-containment", f"F[{a},{b}] fixed by {words[0]}"))
    return failures


def check_order_map_consistency(depth: int = 6) -> list[dict]:
    """Every forward word lands on an actual subtree of its source tree."""
    failures = []
    from itertools import product

    for t in (FibTree(0, 1), FibTree(1, 0), FibTree(-1, 2), FibTree(2, -1)):
        for length in range(1, depth + 1):
            for atoms in product((Atom.L, Atom.R), repeat=length):
                w = MapWord(atoms)
                child = subtree_at(t, w)
                if is_subtree(child, t, level_cap=2 * depth + 2) is None:
                    failures.append(_fail("map-consistency", f"{t} via {w} -> {child}"))
    return failures


def check_lub(depth: int = 4) -> list[dict]:
    failures = []
    got = least_upper_bound(FibTree(-1, 2), FibTree(-3, 5), depth)
    if got != [FibTree(18, -10)]:
        failures.append(_fail("lub", f"join of F[-1,2], F[-3,5]: {[str(t) for t in got]}"))
    got = least_upper_bound(FibTree(0, 0), FibTree(1, 2), 2)
    if got != [FibTree(0, 1)]:
        failures.append(_fail("lub", f"join of F[0,0], F[1,2]: {[str(t) for t in got]}"))
    t = FibTree(4, -3)
    if least_upper_bound(t, t, depth) != [t]:
        failures.append(_fail("lub-reflexive", f"{t}"))
    return failures


def check_commutator(p_max: int = 6, q_max: int = 6, samples: int = 100, seed: int = 5) -> list[dict]:
    """L^p R^q - R^q L^p is the constant phi^3 (phi^p - 1)(phi^2q - 1)."""
    failures = []
    rng = random.Random(seed)
    points = [GoldInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)) for _ in range(samples)]
    one = GoldInt(1, 0)
    for p in range(p_max + 1):
        for q in range(q_max + 1):
            lr = MapWord((Atom.L,) * p + (Atom.R,) * q)
            rl = MapWord((Atom.R,) * q + (Atom.L,) * p)
            want = GoldInt(1, 2) * (phi_pow(p) - one) * (phi_pow(2 * q) - one)
            for z in points:
                if apply_map(lr, z) - apply_map(rl, z) != want:
                    failures.append(_fail("commutator", f"p={p} q={q} z={z}"))
                    break
    return failures


def check_order_sum_incompatibility() -> list[dict]:
    """Containment does not survive tree addition: the standard counterexample."""
    failures = []
    if is_subtree(FibTree(0, 0), FibTree(0, 1)) is None:
        failures.append(_fail("sum-incompat", "F[0,0] not inside F[0,1]"))
    if is_subtree(FibTree(0, 0), FibTree(1, 1)) is None:
        failures.append(_fail("sum-incompat", "F[0,0] not inside F[1,1]"))
    if is_subtree(FibTree(0, 0), FibTree(1, 2), level_cap=40) is not None:
        failures.append(_fail("sum-incompat", "F[0,0] inside F[1,2]"))
    return failures


# ------------------------------------------------------------------ array


def check_hofstadter(levels: int = 10, g_max: int = 10**4) -> list[dict]:
    failures = []
    flat = []
    for lo, hi in hofstadter_levels(levels):
        flat.extend(range(lo, hi + 1))
    if flat != list(range(1, fib(levels + 2) + 1)):
        failures.append(_fail("hofstadter-concat", f"levels 0..{levels} misread"))
    t = FibTree(1, 2)
    for n in range(1, g_max + 1):
        g = hofstadter_g(n)
        m = 1
        while t.width(m) < n:
            m += 1
        for level in (m, m + 1):
            if parent_label(t, NodeRef(level, n)) != g:
                failures.append(
                    _fail("g-parent", f"n={n} level={level}: {parent_label(t, NodeRef(level, n))} vs g={g}")
                )
                break
    return failures


def check_wythoff_array(
    rows: int = 40, cols: int = 10, cover: int = 100, locate_rows: int = 10, locate_cap: int = 30
) -> list[dict]:
    failures = []
    arr = wythoff_array(rows, cols)
    if arr.rows[0][:6] != (1, 2, 3, 5, 8, 13):
        failures.append(_fail("array-row1", f"{arr.rows[0][:6]}"))
    if arr.rows[1][:5] != (4, 7, 11, 18, 29):
        failures.append(_fail("array-row2", f"{arr.rows[1][:5]}"))
    flat = [x for row in arr.rows for x in row]
    if len(set(flat)) != len(flat):
        failures.append(_fail("array-distinct", "duplicate entries"))
    for row in arr.rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            failures.append(_fail("array-monotone", f"row {row[:3]}.."))
    starts = [row[0] for row in arr.rows]
    if any(starts[i] >= starts[i + 1] for i in range(len(starts) - 1)):
        failures.append(_fail("array-row-starts", "row starts not increasing"))
    missing = set(range(1, cover + 1)) - set(flat)
    if missing:
        failures.append(_fail("array-cover", f"missing {sorted(missing)[:5]}"))
    t = FibTree(1, 2)
    for j in range(locate_rows):
        s = FibSeq(arr.rows[j][0], arr.rows[j][1])
        try:
            occ = find_sequence(t, s, level_cap=locate_cap)
        except (ValueError, RuntimeError) as exc:
            failures.append(_fail("array-as-branches", f"row {j + 1}: {exc}"))
            continue
        if occ.pair != (arr.rows[j][0], arr.rows[j][1]):
            failures.append(_fail("array-as-branches", f"row {j + 1}: pair {occ.pair}"))
    return failures


def check_gold_sign_oracle(bound: int = 1000) -> list[dict]:
    failures = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            z = GoldInt(a, b)
            if gold_sign(z) != gold_sign_oracle(z):
                failures.append(_fail("gold-sign-oracle", f"{z}"))
                return failures
    return failures


# ------------------------------------------------------------------ suites

SUITES = {
    "labels": (check_consecutive_labels, check_worked_example),
    "wythoff": (
        check_table_fixture,
        check_wythoff_identities,
        check_complementarity,
        check_gold_sign_oracle,
    ),
    "group": (check_group_laws, check_superposition),
    "represent": (
        check_classification,
        check_interval_levels,
        check_find_sequence,
        check_zero_occurrences,
        check_lemma_witnesses,
    ),
    "order": (
        check_order_brute_force,
        check_order_antisymmetry,
        check_self_containment,
        check_order_map_consistency,
        check_lub,
        check_commutator,
        check_order_sum_incompatibility,
    ),
    "array": (check_hofstadter, check_wythoff_array),
}


def run_suite(name: str, max_level: int | None = None) -> tuple[int, list[dict]]:
    """Run one named suite; returns (checks run, failures)."""
    failures = []
    checks = SUITES[name]
    for check in checks:
        if check is check_consecutive_labels and max_level is not None:
            got = check(max_level=max_level)
        else:
            got = check()
        for f in got:
            f["suite"] = name
        failures.extend(got)
    return len(checks), failures


def run_suites(names: list[str], max_level: int | None = None) -> tuple[int, list[dict]]:
    total = 0
    failures = []
    for name in names:
        n, f = run_suite(name, max_level=max_level)
        total += n
        failures.extend(f)
    return total, failures
