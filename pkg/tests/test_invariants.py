"""Exact invariants, checked against an independent oracle and frozen values.

The Alexander polynomial has two fully independent routes here: the
package computes it from Seifert matrices of braided diagrams, while the
test oracle (``burau_alexander`` in conftest) multiplies Burau matrices.
Determinants likewise cross two routes: Seifert/Alexander on one side and
the Kauffman bracket (Jones at -1) on the other.
"""

import pytest

from gordian.braid import BraidWord, braid_closure
from gordian.codes import parse_dt, realize_dt
from gordian.errors import InputError, ResourceError
from gordian.invariants import (
    alexander,
    determinant,
    fingerprint,
    jones,
    kauffman_bracket,
    murasugi_bound,
    seifert_matrix,
    signature,
    torus_diagram,
    torus_unknotting,
    wirtinger,
)
from gordian.laurent import LaurentPoly
from gordian.moves import backtrack_randomize, crossing_change, simplify_global
from tests.conftest import burau_alexander, random_knot_diagram, random_knot_word

TREFOIL = BraidWord.from_letters((1, 1, 1), 2)
FIGURE_EIGHT = BraidWord.from_letters((1, -2, 1, -2), 3)
T27 = BraidWord.from_letters((1,) * 7, 2)
T34 = BraidWord.from_letters((1, 2) * 4, 3)


def poly(*terms):
    return LaurentPoly(list(terms))


# ---------------------------------------------------------------------------
# the independent oracle first: Burau agrees with the Seifert route
# ---------------------------------------------------------------------------


def test_burau_oracle_matches_published_values():
    # The oracle itself is pinned before it is trusted.
    assert burau_alexander(TREFOIL) == poly((-1, 1), (0, -1), (1, 1))
    assert burau_alexander(FIGURE_EIGHT) == poly((-1, -1), (0, 3), (1, -1))
    assert burau_alexander(T27) == poly(
        (-3, 1), (-2, -1), (-1, 1), (0, -1), (1, 1), (2, -1), (3, 1)
    )


def test_alexander_agrees_with_burau_oracle(rng):
    for _ in range(40):
        word = random_knot_word(rng, max_strands=4, max_letters=8)
        assert alexander(word) == burau_alexander(word), word.letters


# ---------------------------------------------------------------------------
# frozen anchors
# ---------------------------------------------------------------------------


def test_alexander_anchors():
    assert alexander(TREFOIL) == poly((-1, 1), (0, -1), (1, 1))
    assert alexander(FIGURE_EIGHT) == poly((-1, -1), (0, 3), (1, -1))
    assert alexander(T27) == poly(
        (-3, 1), (-2, -1), (-1, 1), (0, -1), (1, 1), (2, -1), (3, 1)
    )
    assert alexander(T34) == poly((-3, 1), (-2, -1), (0, 1), (2, -1), (3, 1))
    assert alexander(braid_closure(BraidWord((), 1))) == LaurentPoly.one()


def test_alexander_of_10_139_matches_published_table():
    d = realize_dt(parse_dt("DT:[12, 14, -10, -20, -16, 18, 2, -8, 4, -6]"))
    assert alexander(d) == poly(
        (-4, 1), (-3, -1), (-1, 2), (0, -3), (1, 2), (3, -1), (4, 1)
    )
    assert determinant(d) == 3
    assert abs(signature(d)) == 6


def test_signature_anchors():
    assert signature(braid_closure(TREFOIL)) == 2
    assert signature(FIGURE_EIGHT) == 0
    assert signature(T27) == 6
    assert signature(T34) == 6
    assert signature(braid_closure(BraidWord((), 1))) == 0


def test_determinant_anchors():
    assert determinant(TREFOIL) == 3
    assert determinant(FIGURE_EIGHT) == 5
    assert determinant(T27) == 7
    assert determinant(T34) == 3
    assert determinant(braid_closure(BraidWord((), 1))) == 1


def test_jones_anchors():
    assert jones(braid_closure(TREFOIL)) == poly((1, 1), (3, 1), (4, -1))
    assert jones(braid_closure(FIGURE_EIGHT)) == poly(
        (-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)
    )
    assert jones(braid_closure(T27)) == poly(
        (3, 1), (5, 1), (6, -1), (7, 1), (8, -1), (9, 1), (10, -1)
    )


def test_jones_of_unknot_diagrams_is_one(rng):
    assert jones(braid_closure(BraidWord((), 1))) == LaurentPoly.one()
    unknot = braid_closure(BraidWord.from_letters((1, -2, 3), 4))
    for seed in range(5):
        inflated = backtrack_randomize(unknot, steps=6, seed=seed)
        if inflated.n <= 20:
            assert jones(inflated) == LaurentPoly.one()


# ---------------------------------------------------------------------------
# bracket
# ---------------------------------------------------------------------------


def test_bracket_base_cases():
    from gordian.diagram import PDDiagram

    assert kauffman_bracket(PDDiagram((), 1)) == LaurentPoly.one()
    assert kauffman_bracket(PDDiagram((), 3)) == LaurentPoly({2: -1, -2: -1}) ** 2
    with pytest.raises(InputError):
        kauffman_bracket(PDDiagram((), 0))
    # single positive kink: bracket -A^3
    kink = braid_closure(BraidWord.from_letters((1,), 2))
    assert kauffman_bracket(kink) == poly((3, -1))
    neg_kink = braid_closure(BraidWord.from_letters((-1,), 2))
    assert kauffman_bracket(neg_kink) == poly((-3, -1))


def test_bracket_cap_is_enforced():
    big = braid_closure(BraidWord.from_letters((1,) * 23, 2))
    with pytest.raises(ResourceError):
        kauffman_bracket(big)


def test_bracket_backends_agree(rng):
    from gordian import _kernels

    if not _kernels.HAS_NUMBA:
        pytest.skip("numba backend not installed")
    for _ in range(10):
        d = random_knot_diagram(rng, max_crossings=12)
        assert kauffman_bracket(d, backend="numpy") == kauffman_bracket(
            d, backend="numba"
        )


def test_bracket_backend_argument_is_validated():
    with pytest.raises(InputError):
        kauffman_bracket(braid_closure(TREFOIL), backend="fortran")


# ---------------------------------------------------------------------------
# cross-route consistency
# ---------------------------------------------------------------------------


def test_determinant_consistency_across_routes(rng):
    # Seifert route (alexander at -1) against bracket route (jones at -1).
    for _ in range(25):
        d = random_knot_diagram(rng, max_crossings=10)
        det = determinant(d)
        assert det == abs(alexander(d)(-1))
        assert det == abs(jones(d)(-1))
        assert det % 2 == 1  # knot determinants are odd


def test_signature_determinant_parity(rng):
    # Murasugi: sigma = 0 mod 4 exactly when det = 1 mod 4.
    for _ in range(25):
        d = random_knot_diagram(rng, max_crossings=10)
        assert (signature(d) % 4 == 0) == (determinant(d) % 4 == 1)


def test_alexander_is_symmetric_and_normalized(rng):
    for _ in range(15):
        d = random_knot_diagram(rng, max_crossings=10)
        a = alexander(d)
        assert a.reverse() == a
        assert a(1) == 1


# ---------------------------------------------------------------------------
# Seifert matrices
# ---------------------------------------------------------------------------


def test_seifert_matrix_shapes():
    assert seifert_matrix(BraidWord((), 1)) == []
    v = seifert_matrix(T27)
    assert len(v) == 6 and all(len(row) == 6 for row in v)


def test_seifert_pairing_is_unimodular(rng):
    # det(V - V^T) = +-1 for any knot; this pins the off-diagonal linking
    # entries far more tightly than any single example.
    from fractions import Fraction

    for _ in range(30):
        word = random_knot_word(rng, max_strands=4, max_letters=9)
        v = seifert_matrix(word)
        m = [
            [Fraction(v[i][j] - v[j][i]) for j in range(len(v))]
            for i in range(len(v))
        ]
        det = Fraction(1)
        for col in range(len(m)):
            pivot = next(
                (r for r in range(col, len(m)) if m[r][col] != 0), None
            )
            assert pivot is not None, "singular V - V^T"
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det *= m[col][col]
            for r in range(col + 1, len(m)):
                f = m[r][col] / m[col][col]
                for j in range(col, len(m)):
                    m[r][j] -= f * m[col][j]
        assert abs(det) == 1


# ---------------------------------------------------------------------------
# bounds, torus knots, Wirtinger
# ---------------------------------------------------------------------------


def test_murasugi_bound():
    assert murasugi_bound(T27) == 3
    assert murasugi_bound(braid_closure(BraidWord((), 1))) == 0
    assert murasugi_bound(5) == 3
    assert murasugi_bound(-6) == 3


def test_torus_unknotting_formula():
    assert torus_unknotting(2, 7) == 3
    assert torus_unknotting(2, 3) == 1
    for k in range(3, 7):
        assert torus_unknotting(2, 2 * k + 1) == k
    with pytest.raises(InputError):
        torus_unknotting(1, 5)
    with pytest.raises(InputError):
        torus_unknotting(2, 4)


def test_torus_diagram():
    d7 = torus_diagram(7)
    assert d7.n == 7
    assert signature(d7) == 6
    assert determinant(d7) == 7
    f3 = fingerprint(torus_diagram(3))
    ftr = fingerprint(realize_dt(parse_dt("DT:[4, 6, 2]")))
    assert f3 == ftr or f3 == ftr.mirrored()
    with pytest.raises(InputError):
        torus_diagram(4)
    with pytest.raises(InputError):
        torus_diagram(1)


def test_torus_cascade_step():
    # One crossing change on T(2,9) plus simplification gives T(2,7).
    d9 = torus_diagram(9)
    dropped = simplify_global(crossing_change(d9, 0), budget=2000)
    assert fingerprint(dropped) == fingerprint(torus_diagram(7))


def test_wirtinger_presentations():
    from gordian.diagram import PDDiagram

    w0 = wirtinger(PDDiagram((), 1))
    assert w0.generators == ("a",)
    assert w0.relators == ()
    assert w0.abelianized_rank() == 1
    wt = wirtinger(braid_closure(TREFOIL))
    assert len(wt.generators) == 3
    assert len(wt.relators) == 3
    assert wt.abelianized_rank() == 1


def test_wirtinger_rank_is_one_for_knots(rng):
    for _ in range(10):
        d = random_knot_diagram(rng, max_crossings=10)
        assert wirtinger(d).abelianized_rank() == 1


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------


def test_fingerprint_unknot():
    unknot = backtrack_randomize(
        braid_closure(BraidWord.from_letters((1, -2, 3), 4)), steps=6, seed=1
    )
    fp = fingerprint(unknot)
    assert fp.alexander == LaurentPoly.one()
    assert fp.jones == LaurentPoly.one()
    assert fp.signature == 0
    assert fp.determinant == 1
    assert fp.min_crossings_seen == 0


def test_fingerprint_equality_ignores_crossing_count():
    base = braid_closure(TREFOIL)
    other = backtrack_randomize(base, steps=8, seed=3)
    fa, fb = fingerprint(base), fingerprint(other)
    assert fa == fb
    assert hash(fa) == hash(fb)


def test_fingerprint_mirrored_laws(rng):
    for _ in range(10):
        d = random_knot_diagram(rng, max_crossings=9)
        fp = fingerprint(d)
        m = fp.mirrored()
        assert m.signature == -fp.signature
        assert m.jones == fp.jones.reverse()
        assert m.alexander == fp.alexander
        assert m.determinant == fp.determinant
        assert m.mirrored() == fp


def test_fingerprint_render_is_one_token():
    fp = fingerprint(braid_closure(TREFOIL))
    token = fp.render()
    assert " " not in token
    assert "alexander=" in token and "determinant=3" in token
