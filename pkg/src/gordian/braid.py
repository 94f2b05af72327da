"""Braid words, their closures, and braiding of arbitrary diagrams.

Letters follow the usual convention: letter ``+i`` crosses strand ``i`` over
strand ``i+1`` and contributes a ``+1`` crossing to the closure, so the
writhe of the closure equals the exponent sum of the word.

``vogel_braid`` converts any knot diagram into a braid word whose closure is
the same knot, by repeatedly pushing one arc over another inside a face
whose boundary carries two co-oriented arcs of different Seifert circles.
Once every face is coherent the Seifert circles are nested and the braid can
be read off directly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .diagram import Dart, Editor, PDDiagram
from .errors import InputError, InternalError
from .moves import push_arc_over


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands."""

    letters: tuple[int, ...]
    strands: int

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise InputError(f"braid needs at least one strand, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise InputError(
                    f"letter {x} is not a generator on {self.strands} strands"
                )

    @classmethod
    def from_letters(cls, letters, strands: int | None = None) -> "BraidWord":
        letters = tuple(int(x) for x in letters)
        if strands is None:
            strands = max((abs(x) for x in letters), default=0) + 1
        return cls(letters, strands)

    def __len__(self) -> int:
        return len(self.letters)


def writhe(word: BraidWord) -> int:
    """Exponent sum of the word, which is the writhe of its closure."""
    return sum(1 if x > 0 else -1 for x in word.letters)


def permutation(word: BraidWord) -> tuple[int, ...]:
    """Image of each strand (0-based) under the word, read left to right."""
    perm = list(range(word.strands))
    for x in word.letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def closure_component_count(word: BraidWord) -> int:
    """Number of link components of the closure (cycles of the permutation)."""
    perm = permutation(word)
    seen = [False] * word.strands
    count = 0
    for i in range(word.strands):
        if seen[i]:
            continue
        count += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return count


def flip_letters(word: BraidWord, positions) -> BraidWord:
    """Invert the letters at the given positions (crossing changes)."""
    pos = set(positions)
    bad = [p for p in pos if not 0 <= p < len(word.letters)]
    if bad:
        raise InputError(f"letter positions out of range: {sorted(bad)}")
    letters = tuple(
        -x if i in pos else x for i, x in enumerate(word.letters)
    )
    return BraidWord(letters, word.strands)


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for x in word.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(tuple(stack), word.strands)


def braid_closure(word: BraidWord) -> PDDiagram:
    """The standard closure of the word as a planar diagram.

    Strand heights that the word never touches close into free loops.
    """
    ed = Editor()
    pending: dict[int, Dart] = {}
    start: dict[int, Dart] = {}
    for x in word.letters:
        i = abs(x)
        c = ed.new_crossing(1 if x > 0 else -1)
        if x > 0:
            ins = {i: (c, 1), i + 1: (c, 0)}
            outs = {i: (c, 2), i + 1: (c, 3)}
        else:
            ins = {i: (c, 0), i + 1: (c, 3)}
            outs = {i: (c, 1), i + 1: (c, 2)}
        for h in (i, i + 1):
            if h in pending:
                ed.connect(pending[h], ins[h])
            else:
                start[h] = ins[h]
            pending[h] = outs[h]
    for h in range(1, word.strands + 1):
        if h in pending:
            ed.connect(pending[h], start[h])
        else:
            ed.free_loops += 1
    return ed.to_diagram()


def parse_braid(text: str) -> BraidWord:
    """Parse ``BRAID:[1, -4, 2]`` or a bare bracketed list of letters."""
    s = text.strip()
    if s.startswith("BRAID:"):
        s = s[len("BRAID:"):].strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InputError(f"braid text must be a bracketed list, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return BraidWord((), 1)
    try:
        letters = tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError as exc:
        raise InputError(f"bad braid letter in {text!r}") from exc
    return BraidWord.from_letters(letters)


def render_braid(word: BraidWord) -> str:
    return "[" + ", ".join(str(x) for x in word.letters) + "]"


# ---------------------------------------------------------------------------
# Vogel braiding
# ---------------------------------------------------------------------------

_VOGEL_LIMIT = 4000  # safeguard; the move count is quadratically bounded


def _circle_map(d: PDDiagram) -> tuple[tuple[tuple[int, ...], ...], dict[int, int]]:
    circles = d.seifert_circles()
    of_edge = {e: i for i, cyc in enumerate(circles) for e in cyc}
    return circles, of_edge


def _incoherent_pair(d: PDDiagram) -> tuple[Dart, Dart] | None:
    """First face pair of co-oriented arcs on different Seifert circles."""
    _, of_edge = _circle_map(d)
    for face in d.faces:
        if len(face) < 2:
            continue
        seen: list[tuple[int, bool, Dart]] = []
        for ci, s in face:
            edge = d.crossings[ci].edges[s]
            out = s in (2, 3) if d.crossings[ci].sign > 0 else s in (2, 1)
            for circ, out2, dart in seen:
                if circ != of_edge[edge] and out2 == out:
                    return dart, (ci, s)
            seen.append((of_edge[edge], out, (ci, s)))
    return None


def vogel_braid(d: PDDiagram) -> BraidWord:
    """A braid word whose closure is the given knot.

    The number of Seifert circles is preserved, so the result uses exactly
    as many strands as the diagram has circles.
    """
    if d.component_count != 1:
        raise InputError("vogel_braid expects a one-component diagram")
    if d.n == 0:
        return BraidWord((), 1)

    for _ in range(_VOGEL_LIMIT):
        pair = _incoherent_pair(d)
        if pair is None:
            break
        d = push_arc_over(d, pair[0], pair[1])
    else:
        raise InternalError("braiding did not terminate")

    return _read_braid(d)


def _read_braid(d: PDDiagram) -> BraidWord:
    """Read a braid word off a coherent (nested-circle) diagram."""
    circles, of_edge = _circle_map(d)
    k = len(circles)

    # Each crossing joins two circles; the multigraph must be a path.
    joins: dict[int, tuple[int, int]] = {}
    nbrs: dict[int, set[int]] = {i: set() for i in range(k)}
    for ci, c in enumerate(d.crossings):
        over_in = 1 if c.sign > 0 else 3
        g1 = of_edge[c.edges[0]]
        g2 = of_edge[c.edges[over_in]]
        if g1 == g2:
            raise InternalError("crossing joins a Seifert circle to itself")
        joins[ci] = (g1, g2)
        nbrs[g1].add(g2)
        nbrs[g2].add(g1)
    ends = [i for i in range(k) if len(nbrs[i]) == 1]
    if k > 1 and (len(ends) != 2 or any(len(v) > 2 for v in nbrs.values())):
        raise InternalError("Seifert circles do not form a chain")
    if k == 1:
        raise InternalError("coherent diagram with crossings on one circle")

    # Order the circles along the chain, starting from the end that owns
    # the smallest edge label (a deterministic choice).
    first = min(ends, key=lambda i: min(circles[i]))
    order = [first]
    prev = -1
    while len(order) < k:
        step = [g for g in nbrs[order[-1]] if g != prev]
        if len(step) != 1:
            raise InternalError("Seifert circles do not form a chain")
        prev = order[-1]
        order.append(step[0])
    strand = {g: i + 1 for i, g in enumerate(order)}  # circle -> strand index

    # Pick a cut arc on each circle by walking dual to the nesting: start in
    # a face bounded only by the first circle and cross one circle at a time.
    cut: dict[int, int] = {}
    face = None
    for f in d.faces:
        if {of_edge[e] for e in d.face_edges(f)} == {order[0]}:
            face = f
            break
    if face is None:
        raise InternalError("no face inside the innermost circle")
    dart_face = {dart: f for f in d.faces for dart in f}
    for g in order:
        chosen = None
        for dart in face:
            ci, s = dart
            if of_edge[d.crossings[ci].edges[s]] == g:
                chosen = dart
                break
        if chosen is None:
            raise InternalError("cut walk lost the next circle")
        edge = d.crossings[chosen[0]].edges[chosen[1]]
        cut[g] = edge
        face = dart_face[d.dart_partner[chosen]]

    # Linearise each circle's crossing sequence starting after its cut arc,
    # then merge the chains into a word, lowest strand first on ties.
    succ: dict[int, list[int]] = {ci: [] for ci in joins}
    indeg = {ci: 0 for ci in joins}
    heads: list[tuple[int, int]] = []
    for g, cyc in enumerate(circles):
        start_pos = cyc.index(cut[g])
        seq = []
        for j in range(len(cyc)):
            e = cyc[(start_pos + j) % len(cyc)]
            seq.append(d.edge_ends[e][1][0])
        for a, b in zip(seq, seq[1:]):
            succ[a].append(b)
            indeg[b] += 1
    for ci in joins:
        if indeg[ci] == 0:
            g1, g2 = joins[ci]
            heapq.heappush(heads, (min(strand[g1], strand[g2]), ci))
    letters: list[int] = []
    while heads:
        _, ci = heapq.heappop(heads)
        g1, g2 = joins[ci]
        gen = min(strand[g1], strand[g2])
        if abs(strand[g1] - strand[g2]) != 1:
            raise InternalError("crossing joins non-adjacent strands")
        letters.append(gen * d.crossings[ci].sign)
        for b in succ[ci]:
            indeg[b] -= 1
            if indeg[b] == 0:
                h1, h2 = joins[b]
                heapq.heappush(heads, (min(strand[h1], strand[h2]), b))
    if len(letters) != d.n:
        raise InternalError("braid reading dropped crossings")
    return BraidWord(tuple(letters), k)
