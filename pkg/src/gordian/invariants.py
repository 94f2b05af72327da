"""Exact knot invariants: bracket, Jones, Seifert form, and derived data.

Two independent computation routes are kept deliberately separate.  The
Kauffman bracket route is a state sum over all smoothings (kernel in
``_kernels``); the Seifert route builds an explicit Seifert matrix from a
braid presentation and derives the Alexander polynomial, signature, and
determinant from it.  ``V(-1)`` versus ``Alexander(-1)`` gives a cheap
cross-check between the two, which the test suite exercises.

Chirality bookkeeping: a ``+1`` internal crossing is the closure of the
one-letter braid ``[+1]``, and ``signature(torus_diagram(7)) == +6``.
Under this convention the mirror image negates the signature and reverses
the Jones variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from . import braid as braid_mod
from ._kernels import loop_histogram
from .braid import BraidWord, braid_closure, vogel_braid
from .diagram import PDDiagram, in_slots
from .errors import InputError, InternalError, ResourceError
from .laurent import LaurentPoly
from .moves import simplify_global

BRACKET_CAP = 22  # crossings; the state sum is 2**n


# ---------------------------------------------------------------------------
# bracket / Jones route
# ---------------------------------------------------------------------------


def _smoothing_arrays(d: PDDiagram) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = d.n
    match = np.empty(4 * n, np.int32)
    pa = np.empty(4 * n, np.int32)
    pb = np.empty(4 * n, np.int32)
    for tail, head in d.edge_ends.values():
        ti = 4 * tail[0] + tail[1]
        hi = 4 * head[0] + head[1]
        match[ti] = hi
        match[hi] = ti
    for ci in range(n):
        # The A-smoothing joins the corners swept by rotating the over-strand
        # counterclockwise onto the under-strand.  With slot 0 pinned to the
        # incoming under-end this is the same slot pairing for both signs.
        a_pairs = ((1, 2), (3, 0))
        b_pairs = ((0, 1), (2, 3))
        for x, y in a_pairs:
            pa[4 * ci + x] = 4 * ci + y
            pa[4 * ci + y] = 4 * ci + x
        for x, y in b_pairs:
            pb[4 * ci + x] = 4 * ci + y
            pb[4 * ci + y] = 4 * ci + x
    return match, pa, pb


def kauffman_bracket(
    d: PDDiagram, *, cap: int = BRACKET_CAP, backend: str | None = None
) -> LaurentPoly:
    """The bracket polynomial in the smoothing variable ``A``.

    Normalised so a single free loop has bracket 1 and a positive kink
    multiplies by ``-A**3``.
    """
    delta = LaurentPoly({2: -1, -2: -1})
    if d.n == 0:
        if d.free_loops == 0:
            raise InputError("empty diagram has no bracket")
        return delta ** (d.free_loops - 1)
    if d.n > cap:
        raise ResourceError(
            f"bracket state sum over {d.n} crossings exceeds the cap of {cap}"
        )
    hist = loop_histogram(*_smoothing_arrays(d), d.n, backend)
    max_loops = hist.shape[1] - 1
    delta_pow = [LaurentPoly.one()]
    for _ in range(max_loops + d.free_loops):
        delta_pow.append(delta_pow[-1] * delta)
    total = LaurentPoly.zero()
    for a in range(hist.shape[0]):
        for loops in range(1, hist.shape[1]):
            count = int(hist[a, loops])
            if count:
                mono = LaurentPoly({2 * a - d.n: count})
                total = total + mono * delta_pow[loops - 1 + d.free_loops]
    return total


def jones(
    d: PDDiagram | BraidWord, *, cap: int = BRACKET_CAP, backend: str | None = None
) -> LaurentPoly:
    """Jones polynomial of a knot diagram, in ``t``."""
    if isinstance(d, BraidWord):
        d = braid_closure(d)
    if not d.is_knot:
        raise InputError("jones expects a one-component diagram")
    bracket = kauffman_bracket(d, cap=cap, backend=backend)
    w = d.writhe
    f = bracket.shift(-3 * w)
    if w % 2:
        f = -f
    terms = {}
    for e, c in f.terms:
        if e % 4:
            raise InternalError("writhe-normalised bracket is not a power of t")
        terms[-e // 4] = c
    return LaurentPoly(terms)


# ---------------------------------------------------------------------------
# Seifert route
# ---------------------------------------------------------------------------

# Off-diagonal entries (V[a][b], V[b][a]) for a band pair ``a`` preceding a
# pair ``b``.  These are pinned (up to reversal/basis symmetries that leave
# every derived invariant unchanged) by the calibration suite: torus-knot
# signatures and Alexander polynomials, unimodularity of V - V^T, and
# agreement with the Burau-minor route to the Alexander polynomial on
# random braid words.
_CHAIN_PLUS = (0, -1)  # same generator, shared letter positive
_CHAIN_MINUS = (1, 0)  # same generator, shared letter negative
_INTERLEAVE_UP = (0, 1)  # adjacent generators, p < r < q < s
_INTERLEAVE_DOWN = (0, -1)  # adjacent generators, r < p < s < q


def seifert_matrix(word: BraidWord) -> list[list[int]]:
    """Seifert matrix of the closure, from the braided Seifert surface.

    The basis consists of one loop per consecutive pair of occurrences of
    each braid generator.  Every generator must occur (otherwise the
    surface is disconnected and the closure is a split link).
    """
    letters = word.letters
    used = {abs(x) for x in letters}
    missing = set(range(1, word.strands)) - used
    if missing:
        raise InputError(
            f"braid word never uses generator(s) {sorted(missing)}; "
            "its closure is split"
        )
    pairs: list[tuple[int, int, int]] = []  # (generator, position p, position q)
    for gen in sorted(used):
        positions = [i for i, x in enumerate(letters) if abs(x) == gen]
        pairs.extend((gen, p, q) for p, q in zip(positions, positions[1:]))
    sign = [1 if x > 0 else -1 for x in letters]
    m = len(pairs)
    V = [[0] * m for _ in range(m)]
    for a, (gen, p, q) in enumerate(pairs):
        V[a][a] = (sign[p] + sign[q]) // 2
    for a in range(m):
        ga, pa_, qa = pairs[a]
        for b in range(a + 1, m):
            gb, pb_, qb = pairs[b]
            if ga == gb and qa == pb_:
                vab, vba = _CHAIN_PLUS if sign[qa] > 0 else _CHAIN_MINUS
            elif gb - ga == 1:
                # Pairs are listed generator by generator, so gb >= ga here.
                if pa_ < pb_ < qa < qb:
                    vab, vba = _INTERLEAVE_UP
                elif pb_ < pa_ < qb < qa:
                    vab, vba = _INTERLEAVE_DOWN
                else:
                    continue
            else:
                continue
            V[a][b] = vab
            V[b][a] = vba
    return V


def _as_braid(x: PDDiagram | BraidWord) -> BraidWord:
    if isinstance(x, BraidWord):
        if braid_mod.closure_component_count(x) != 1:
            raise InputError("braid closure is not a knot")
        return x
    if not x.is_knot:
        raise InputError("expected a one-component diagram")
    return vogel_braid(x)


def _int_det(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    a = [row[:] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    denom = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // denom
            a[i][k] = 0
        denom = pivot
    return sign * a[n - 1][n - 1]


def _det_poly(V: list[list[int]]) -> LaurentPoly:
    """``det(V - t*V^T)`` by evaluation and exact interpolation."""
    m = len(V)
    if m == 0:
        return LaurentPoly.one()
    xs = list(range(m + 1))
    ys = []
    for x in xs:
        mat = [[V[i][j] - x * V[j][i] for j in range(m)] for i in range(m)]
        ys.append(_int_det(mat))
    # Newton's divided differences, exactly.
    coeffs = [Fraction(y) for y in ys]
    for level in range(1, m + 1):
        for i in range(m, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    poly = LaurentPoly.zero()
    acc = LaurentPoly.one()
    for i, c in enumerate(coeffs):
        if c.denominator != 1:
            raise InternalError("determinant interpolation left fractions")
        poly = poly + acc * int(c)
        acc = acc * LaurentPoly({1: 1, 0: -xs[i]})
    return poly


def alexander(x: PDDiagram | BraidWord) -> LaurentPoly:
    """Alexander polynomial, symmetric and normalised to ``value(1) == 1``."""
    V = seifert_matrix(_as_braid(x))
    raw = _det_poly(V)
    if raw.is_zero():
        raise InternalError("Alexander determinant vanished on a knot")
    span = raw.max_exp() - raw.min_exp()
    if span % 2:
        raise InternalError("Alexander determinant has odd span")
    centered = raw.shift(-(raw.min_exp() + raw.max_exp()) // 2)
    at_one = centered(1)
    if at_one == 1:
        return centered
    if at_one == -1:
        return -centered
    raise InternalError(f"Alexander value at 1 is {at_one}, not a unit")


def _symmetric_signature(rows: list[list[Fraction]]) -> int:
    """Signature of a symmetric rational matrix by congruent elimination."""
    n = len(rows)
    a = [row[:] for row in rows]
    pos = neg = 0
    for i in range(n):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][r] != 0), None)
            if swap is not None:
                a[i], a[swap] = a[swap], a[i]
                for row in a:
                    row[i], row[swap] = row[swap], row[i]
            else:
                pair = next(
                    (
                        (r, s)
                        for r in range(i, n)
                        for s in range(r + 1, n)
                        if a[r][s] != 0
                    ),
                    None,
                )
                if pair is None:
                    break  # the remaining block is zero
                r, s = pair
                for j in range(n):
                    a[r][j] += a[s][j]
                for row in a:
                    row[r] += row[s]
                if r != i:
                    a[i], a[r] = a[r], a[i]
                    for row in a:
                        row[i], row[r] = row[r], row[i]
        pivot = a[i][i]
        if pivot == 0:
            continue
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            if a[r][i] == 0:
                continue
            f = a[r][i] / pivot
            for j in range(i, n):
                a[r][j] -= f * a[i][j]
        for r in range(i + 1, n):
            a[i][r] = Fraction(0)
            a[r][i] = Fraction(0)
    return pos - neg


def signature(x: PDDiagram | BraidWord) -> int:
    """Knot signature, the signature of ``V + V^T``."""
    V = seifert_matrix(_as_braid(x))
    m = len(V)
    sym = [
        [Fraction(V[i][j] + V[j][i]) for j in range(m)] for i in range(m)
    ]
    return _symmetric_signature(sym)


def determinant(x: PDDiagram | BraidWord) -> int:
    """Knot determinant ``|Alexander(-1)|``."""
    value = alexander(x)(-1)
    if value.denominator != 1:
        raise InternalError("Alexander(-1) is not an integer")
    return abs(int(value))


def murasugi_bound(x: PDDiagram | BraidWord | int) -> int:
    """Lower bound for the unknotting number: ``ceil(|signature| / 2)``."""
    s = x if isinstance(x, int) else signature(x)
    return (abs(s) + 1) // 2


# ---------------------------------------------------------------------------
# Wirtinger presentation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WirtingerPresentation:
    """Arc generators and one conjugation relator per crossing."""

    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[int, int], ...], ...]

    def abelianized_rank(self) -> int:
        """Rank of the abelianisation (1 for a knot group)."""
        rows = []
        for rel in self.relators:
            row = [0] * len(self.generators)
            for gen, exp in rel:
                row[gen] += exp
            rows.append(row)
        mat = [[Fraction(x) for x in row] for row in rows]
        rank = 0
        cols = len(self.generators)
        for col in range(cols):
            pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
            if pivot is None:
                continue
            mat[rank], mat[pivot] = mat[pivot], mat[rank]
            for r in range(len(mat)):
                if r != rank and mat[r][col] != 0:
                    f = mat[r][col] / mat[rank][col]
                    for j in range(col, cols):
                        mat[r][j] -= f * mat[rank][j]
            rank += 1
        return cols - rank


def _arc_name(i: int) -> str:
    if i < 26:
        return chr(ord("a") + i)
    return f"g{i}"


def wirtinger(d: PDDiagram) -> WirtingerPresentation:
    """Wirtinger presentation of the knot group from the diagram."""
    if not d.is_knot:
        raise InputError("wirtinger expects a one-component diagram")
    if d.n == 0:
        return WirtingerPresentation(("a",), ())
    walk = list(d.components[0])
    under_in = {
        c.edges[0] for c in d.crossings
    }  # edges that end by passing under
    # Start the walk right after an undercrossing so arcs do not wrap.
    for i, e in enumerate(walk):
        if e in under_in:
            walk = walk[i + 1:] + walk[: i + 1]
            break
    arc_of: dict[int, int] = {}
    arc = 0
    for e in walk:
        arc_of[e] = arc
        if e in under_in:
            arc += 1
    arcs = arc
    if arcs != d.n:
        raise InternalError("arc count does not match crossing count")
    relators = []
    for c in d.crossings:
        over = arc_of[c.edges[in_slots(c.sign)[1]]]
        into = arc_of[c.edges[0]]
        out = arc_of[c.edges[2]]
        relators.append(
            ((out, -1), (over, c.sign), (into, 1), (over, -c.sign))
        )
    return WirtingerPresentation(
        tuple(_arc_name(i) for i in range(arcs)), tuple(relators)
    )


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

FINGERPRINT_BUDGET = 2000


@dataclass(frozen=True, eq=False)
class Fingerprint:
    """Bundle of exact invariants used for identification.

    Equality ignores ``min_crossings_seen``, which only records how small a
    presentation the simplifier reached.
    """

    alexander: LaurentPoly
    jones: LaurentPoly
    signature: int
    determinant: int
    min_crossings_seen: int

    def key(self) -> tuple:
        return (
            self.alexander.terms,
            self.jones.terms,
            self.signature,
            self.determinant,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def render(self) -> str:
        """One-token canonical form, safe for space-separated log lines."""
        return (
            f"alexander={self.alexander.render().replace(' ', '')};"
            f"jones={self.jones.render().replace(' ', '')};"
            f"signature={self.signature:+d};"
            f"determinant={self.determinant}"
        )

    def mirrored(self) -> "Fingerprint":
        return Fingerprint(
            self.alexander,
            self.jones.reverse(),
            -self.signature,
            self.determinant,
            self.min_crossings_seen,
        )


def fingerprint(
    d: PDDiagram | BraidWord,
    *,
    seed: int = 0,
    budget: int = FINGERPRINT_BUDGET,
) -> Fingerprint:
    """Invariant fingerprint of a knot, computed on a simplified diagram."""
    if isinstance(d, BraidWord):
        d = braid_closure(d)
    if not d.is_knot:
        raise InputError("fingerprint expects a one-component diagram")
    small = simplify_global(d, budget=budget, seed=seed)
    if small.n > BRACKET_CAP:
        raise ResourceError(
            f"diagram still has {small.n} crossings after simplification"
        )
    return Fingerprint(
        alexander=alexander(small) if small.n else LaurentPoly.one(),
        jones=jones(small),
        signature=signature(small) if small.n else 0,
        determinant=determinant(small) if small.n else 1,
        min_crossings_seen=small.n,
    )


# ---------------------------------------------------------------------------
# torus knot references
# ---------------------------------------------------------------------------


def torus_diagram(n: int) -> PDDiagram:
    """Standard ``n``-crossing closed 2-braid diagram of ``T(2, n)``."""
    if n < 3 or n % 2 == 0:
        raise InputError("torus_diagram needs an odd crossing count >= 3")
    return braid_closure(BraidWord((1,) * n, 2))


def torus_unknotting(p: int, q: int) -> int:
    """Unknotting number ``(p-1)(q-1)/2`` of the torus knot ``T(p, q)``."""
    if p < 2 or q < 2:
        raise InputError("torus knot parameters must be at least 2")
    if gcd(p, q) != 1:
        raise InputError(f"T({p},{q}) is a link, not a knot")
    return (p - 1) * (q - 1) // 2
