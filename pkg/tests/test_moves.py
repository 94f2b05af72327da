"""Reidemeister moves, mirroring, crossing changes, and simplification."""

import random

from gordian.braid import BraidWord, braid_closure
from gordian.diagram import validate_pd
from gordian.invariants import (
    alexander,
    determinant,
    fingerprint,
    jones,
    signature,
)
from gordian.moves import (
    apply_move,
    backtrack_randomize,
    connected_sum,
    crossing_change,
    deconnect_sum,
    find_moves,
    find_reducing_moves,
    mirror,
    sample_increasing_move,
    simplify_global,
    simplify_greedy,
)
from tests.conftest import random_knot_diagram


def trefoil():
    return braid_closure(BraidWord.from_letters((1, 1, 1), 2))


def figure_eight():
    return braid_closure(BraidWord.from_letters((1, -2, 1, -2), 3))


def _random_move(d, rng):
    grouped = find_moves(d)
    kinds = [k for k, ms in grouped.items() if ms]
    if kinds and rng.random() < 0.6:
        kind = rng.choice(kinds)
        return rng.choice(grouped[kind])
    return sample_increasing_move(d, rng)


def test_moves_preserve_fingerprint(rng):
    # Walk each diagram through a handful of random moves of every kind and
    # require the fingerprint to be bit-identical throughout.
    for _ in range(40):
        d = random_knot_diagram(rng, max_crossings=9)
        fp = fingerprint(d)
        for _ in range(6):
            move = _random_move(d, rng)
            if move is None:
                break
            nxt = apply_move(d, move)
            if nxt.n > 14:
                continue
            d = nxt
            assert validate_pd(d) == []
            assert fingerprint(d) == fp


def test_crossing_change_involution(rng):
    for _ in range(10):
        d = random_knot_diagram(rng, max_crossings=10)
        i = rng.randrange(d.n)
        twice = crossing_change(crossing_change(d, i), i)
        assert twice.crossings == d.crossings


def test_crossing_change_flips_writhe():
    d = trefoil()
    assert crossing_change(d, 0).writhe == d.writhe - 2


def test_mirror_laws(rng):
    for _ in range(15):
        d = random_knot_diagram(rng, max_crossings=10)
        m = mirror(d)
        assert m.writhe == -d.writhe
        assert signature(m) == -signature(d)
        assert jones(m) == jones(d).reverse()
        assert alexander(m) == alexander(d)
        assert determinant(m) == determinant(d)


def test_mirror_is_involution():
    d = figure_eight()
    assert mirror(mirror(d)).crossings == d.crossings


def test_simplify_unknot_to_zero():
    # Each generator appears exactly once, so the closure is the unknot; a
    # backtracking scramble hides that before the solver runs.
    d = braid_closure(BraidWord.from_letters((1, -2, 3), 4))
    scrambled = backtrack_randomize(d, steps=10, seed=5)
    assert scrambled.n > 0
    s = simplify_global(scrambled, budget=4000)
    assert s.n == 0
    assert s.component_count == 1


def test_simplify_trefoil_reaches_minimum(rng):
    for _ in range(10):
        big = backtrack_randomize(trefoil(), steps=12, seed=rng.randrange(10**6))
        assert fingerprint(big) == fingerprint(trefoil())
        s = simplify_global(big, budget=4000)
        assert s.n == 3


def test_simplify_greedy_never_increases(rng):
    for _ in range(20):
        d = random_knot_diagram(rng, max_crossings=10)
        assert simplify_greedy(d).n <= d.n


def test_backtrack_is_deterministic():
    d = figure_eight()
    a = backtrack_randomize(d, steps=15, seed=9)
    b = backtrack_randomize(d, steps=15, seed=9)
    assert a.crossings == b.crossings
    c = backtrack_randomize(d, steps=15, seed=10)
    assert fingerprint(c) == fingerprint(d)


def test_connected_sum_invariants(rng):
    for _ in range(8):
        a = random_knot_diagram(rng, max_crossings=7)
        b = random_knot_diagram(rng, max_crossings=7)
        s = connected_sum(a, b)
        assert s.component_count == 1
        assert alexander(s) == alexander(a) * alexander(b)
        assert jones(s) == jones(a) * jones(b)
        assert signature(s) == signature(a) + signature(b)
        assert determinant(s) == determinant(a) * determinant(b)


def test_deconnect_sum_recovers_factors():
    s = connected_sum(trefoil(), figure_eight())
    parts = deconnect_sum(s)
    assert sorted(p.n for p in parts) == [3, 4]
    fps = {fingerprint(p) for p in parts}
    assert fps == {fingerprint(trefoil()), fingerprint(figure_eight())}


def test_deconnect_sum_prime_diagram_is_single_factor():
    parts = deconnect_sum(trefoil())
    assert len(parts) == 1
    assert parts[0].n == 3


def test_reducing_moves_reduce(rng):
    for _ in range(20):
        d = random_knot_diagram(rng, max_crossings=10)
        for move in find_reducing_moves(d):
            out = apply_move(d, move)
            assert out.n < d.n
            assert validate_pd(out) == []
