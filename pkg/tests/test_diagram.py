"""Planar-diagram structure: validation, text format, editing, components."""

import pytest

from gordian.braid import braid_closure, BraidWord
from gordian.diagram import (
    Crossing,
    Editor,
    PDDiagram,
    pd_from_text,
    pd_to_text,
    validate_pd,
)
from gordian.errors import InputError
from gordian.moves import apply_move, find_reducing_moves
from tests.conftest import random_knot_diagram


def trefoil() -> PDDiagram:
    return braid_closure(BraidWord.from_letters((1, 1, 1), 2))


def test_validate_accepts_trefoil():
    assert validate_pd(trefoil()) == []


def test_validate_reports_dangling_edge():
    d = trefoil()
    bad = PDDiagram(
        crossings=d.crossings[:-1] + (Crossing((90, 91, 92, 93), 1),),
        free_loops=d.free_loops,
    )
    problems = validate_pd(bad)
    assert problems, "expected violations for edges used once"
    assert any("edge" in p for p in problems)


def test_validate_rejects_nonplanar_rotation_system():
    # Two crossings joined so that the rotation system forces genus > 0:
    # connect the four ports of each crossing to the other one with a twist
    # that cannot be drawn in the sphere.
    c0 = Crossing((0, 1, 2, 3), 1)
    c1 = Crossing((2, 3, 0, 1), 1)
    d = PDDiagram(crossings=(c0, c1), free_loops=0)
    problems = validate_pd(d)
    assert any("V-E+F" in p for p in problems)


def test_component_counts():
    assert trefoil().component_count == 1
    assert trefoil().is_knot
    hopf = braid_closure(BraidWord.from_letters((1, 1), 2))
    assert hopf.component_count == 2
    assert not hopf.is_knot
    empty = braid_closure(BraidWord((), 1))
    assert empty.n == 0
    assert empty.component_count == 1


def test_writhe():
    assert trefoil().writhe == 3
    neg = braid_closure(BraidWord.from_letters((-1, -1, -1), 2))
    assert neg.writhe == -3


def test_faces_satisfy_euler_formula():
    d = trefoil()
    v = d.n
    e = 2 * d.n
    f = len(d.faces)
    assert v - e + f == 2


def test_pd_text_round_trip():
    d = trefoil()
    text = pd_to_text(d)
    assert "sign=+1" in text
    back = pd_from_text(text)
    assert back.crossings == d.crossings
    assert back.free_loops == d.free_loops


def test_pd_text_free_loops():
    d = PDDiagram(crossings=(), free_loops=2)
    text = pd_to_text(d)
    assert text.count("O") == 2
    assert pd_from_text(text).free_loops == 2


def test_pd_text_rejects_garbage():
    with pytest.raises(InputError):
        pd_from_text("X[1,2,3] sign=+1\n")
    with pytest.raises(InputError):
        pd_from_text("Y[1,2,3,4] sign=+1\n")


def test_pd_text_rejects_invalid_diagram():
    # Structurally parseable but the edges do not knit together.
    with pytest.raises(InputError):
        pd_from_text("X[0,1,2,3] sign=+1\n")


# ---------------------------------------------------------------------------
# Editor.smooth_out component accounting
# ---------------------------------------------------------------------------


def test_smooth_out_single_kink_leaves_free_loop():
    # A one-crossing kink diagram is the unknot; removing the crossing must
    # leave one free loop, not zero and not two.
    d = braid_closure(BraidWord.from_letters((1,), 2))
    assert d.n == 1 and d.component_count == 1
    ed = Editor.from_diagram(d)
    ed.smooth_out({0})
    out = ed.to_diagram()
    assert out.n == 0
    assert out.free_loops == 1


def test_smooth_out_hopf_pair_leaves_two_loops():
    d = braid_closure(BraidWord.from_letters((1, 1), 2))
    ed = Editor.from_diagram(d)
    ed.smooth_out({0, 1})
    out = ed.to_diagram()
    assert out.free_loops == 2


def test_reducing_moves_preserve_component_count(rng):
    # Regression guard: strands that pass through the removed region used to
    # be miscounted as trapped loops in one order of traversal.
    for _ in range(60):
        d = random_knot_diagram(rng, max_crossings=10)
        total = d.component_count
        while True:
            moves = find_reducing_moves(d)
            if not moves:
                break
            d = apply_move(d, moves[0])
            assert d.component_count == total
            assert validate_pd(d) == []
