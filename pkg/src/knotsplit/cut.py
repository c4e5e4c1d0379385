"""Alternate-cut presentations: tangles, surgeries, and restricted brackets.

A cut presentation is a link split by a Jordan curve into two tangles with
2n boundary points, labeled a1, b1, ..., an, bn in cyclic order.  Strands
enter tangle 1 at a-points and leave at b-points; on tangle 2 the roles
reverse.  Closures cap a tangle with the noncrossing arc family of a set
partition; the closure arcs of a block i1 < ... < ik run b_{i1} -> a_{i2},
..., b_{ik} -> a_{i1}.

Closures are performed combinatorially, by identifying arc ends.  The
bracket depends only on circle counts, and a noncrossing partition always
admits a planar realization of its arc family, so no embedding data is
kept.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .diagram import Crossing, PlanarDiagram, StateMismatch, _slot_is_head
from .partitions import (
    CrossingPartition,
    GroundSetMismatch,
    SetPartition,
    require_noncrossing,
)
from .polyring import LaurentPolynomial, delta_power


class BoundaryMismatch(ValueError):
    """Tangle boundaries cannot be glued as requested."""


def _point_is_tail(side: int, kind: str) -> bool:
    """True when a boundary point is the tail of its arc (the strand runs
    from the point into the tangle)."""
    if side == 1:
        return kind == "a"
    return kind == "b"


class Tangle:
    """One side of a cut presentation: a diagram fragment with 2n open
    arc ends attached to the boundary points a1, b1, ..., an, bn."""

    __slots__ = ("n", "side", "crossings", "unknots", "a_arcs", "b_arcs", "_arcs")

    def __init__(self, n, side, crossings, a_arcs, b_arcs, unknots=0):
        if n < 1:
            raise ValueError("a nontrivial cut needs n >= 1")
        if side not in (1, 2):
            raise ValueError("side must be 1 or 2")
        a_arcs = tuple(a_arcs)
        b_arcs = tuple(b_arcs)
        if len(a_arcs) != n or len(b_arcs) != n:
            raise BoundaryMismatch(f"expected {n} a-points and {n} b-points")
        crs = tuple(cr if isinstance(cr, Crossing) else Crossing(*cr) for cr in crossings)
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for cr in crs:
            if cr.sign not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {cr.sign}")
            for arc, is_head in cr.endpoint_statuses():
                bucket = heads if is_head else tails
                bucket[arc] = bucket.get(arc, 0) + 1
        for kind, arcs in (("a", a_arcs), ("b", b_arcs)):
            for arc in arcs:
                bucket = tails if _point_is_tail(side, kind) else heads
                bucket[arc] = bucket.get(arc, 0) + 1
        for arc in set(heads) | set(tails):
            h, t = heads.get(arc, 0), tails.get(arc, 0)
            if h + t != 2:
                raise ValueError(f"arc {arc} has {h + t} endpoints, expected 2")
            if h != 1 or t != 1:
                raise ValueError(f"arc {arc} orientation is inconsistent")
        if unknots < 0:
            raise ValueError("negative unknot count")
        self.n = n
        self.side = side
        self.crossings = crs
        self.unknots = unknots
        self.a_arcs = a_arcs
        self.b_arcs = b_arcs
        self._arcs = frozenset(heads)

    @property
    def arcs(self) -> frozenset:
        return self._arcs

    def arc_at(self, kind: str, index: int) -> int:
        return (self.a_arcs if kind == "a" else self.b_arcs)[index - 1]

    def writhe(self) -> int:
        return sum(cr.sign for cr in self.crossings)

    def states(self) -> Iterator[tuple[int, ...]]:
        return product((0, 1), repeat=len(self.crossings))

    def __eq__(self, other):
        if not isinstance(other, Tangle):
            return NotImplemented
        return (
            self.n == other.n
            and self.side == other.side
            and self.crossings == other.crossings
            and self.unknots == other.unknots
            and self.a_arcs == other.a_arcs
            and self.b_arcs == other.b_arcs
        )

    def __repr__(self):
        return f"Tangle(side {self.side}, n={self.n}, {len(self.crossings)} crossings)"


class CutPresentation(NamedTuple):
    n: int
    tangle1: Tangle
    tangle2: Tangle

    @staticmethod
    def of(tangle1: Tangle, tangle2: Tangle) -> "CutPresentation":
        if tangle1.side != 1 or tangle2.side != 2:
            raise BoundaryMismatch("tangles must be given as sides 1 and 2")
        if tangle1.n != tangle2.n:
            raise BoundaryMismatch(
                f"boundary sizes differ: {tangle1.n} vs {tangle2.n}"
            )
        return CutPresentation(tangle1.n, tangle1, tangle2)

    def tangle(self, side: int) -> Tangle:
        if side == 1:
            return self.tangle1
        if side == 2:
            return self.tangle2
        raise ValueError("side must be 1 or 2")


def strand_tangle(side: int) -> Tangle:
    """The trivial n=1 tangle: a single crossing-free strand a1 to b1."""
    return Tangle(1, side, [], (1,), (1,))


# -- closure machinery --------------------------------------------------


def closure_arcs(p: SetPartition, reverse: bool = False) -> tuple[tuple[str, str], ...]:
    """Directed closure arcs of a noncrossing partition, as (tail, head)
    label pairs.  Each block i1 < ... < ik contributes b_{i1} -> a_{i2},
    ..., b_{ik} -> a_{i1}; ``reverse`` flips every arrow."""
    require_noncrossing(p)
    arcs = []
    for block in p.blocks:
        k = len(block)
        for idx, i in enumerate(block):
            j = block[(idx + 1) % k]
            tail, head = f"b{i}", f"a{j}"
            arcs.append((head, tail) if reverse else (tail, head))
    return tuple(sorted(arcs))


def _merge_pieces(crossing_groups, joins):
    """Identify arcs across pieces and renumber.

    ``crossing_groups``: per piece, its crossings (may be empty).
    ``joins``: pairs of (piece, arc) nodes to identify.
    Returns (crossings, closed_circles): the relabeled crossing list in
    group order, plus the number of identification cycles that touch no
    crossing (these became crossing-free circles).
    """
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def add(node):
        if node not in parent:
            parent[node] = node

    slot_nodes = []
    for pi, crossings in enumerate(crossing_groups):
        for cr in crossings:
            for arc in cr.slots:
                add((pi, arc))
                slot_nodes.append((pi, arc))
    for x, y in joins:
        add(x)
        add(y)
        parent[find(x)] = find(y)

    roots = sorted({find(node) for node in parent})
    number = {root: i + 1 for i, root in enumerate(roots)}
    crossing_bearing = {find(node) for node in slot_nodes}
    closed_circles = sum(1 for root in roots if root not in crossing_bearing)

    relabeled = []
    for pi, crossings in enumerate(crossing_groups):
        for cr in crossings:
            relabeled.append(
                Crossing(*(number[find((pi, arc))] for arc in cr.slots), cr.sign)
            )
    return relabeled, closed_circles


def glue(cut: CutPresentation) -> PlanarDiagram:
    """Reassemble the closed diagram from its two tangles.  The result's
    crossings are tangle 1's followed by tangle 2's, realizing the state
    factorization across the cut by index arithmetic."""
    t1, t2 = cut.tangle1, cut.tangle2
    if t1.n != t2.n:
        raise BoundaryMismatch("boundary sizes differ")
    joins = []
    for i in range(1, cut.n + 1):
        for kind in ("a", "b"):
            joins.append(((0, t1.arc_at(kind, i)), (1, t2.arc_at(kind, i))))
    crossings, circles = _merge_pieces([t1.crossings, t2.crossings], joins)
    return PlanarDiagram(crossings, t1.unknots + t2.unknots + circles)


def surgery(cut: CutPresentation, side: int, p: SetPartition) -> PlanarDiagram:
    """Close one tangle with the arc family of a noncrossing partition.

    Side 1 closes with the partition's arcs; side 2 with the reversed
    arcs.  The closure adds no crossings, so all surgeries on a side share
    the tangle's crossing set and writhe."""
    tangle = cut.tangle(side)
    if p.n != tangle.n:
        raise GroundSetMismatch(f"partition of {p.n} against a cut of size {tangle.n}")
    arcs = closure_arcs(p, reverse=(side == 2))
    joins = []
    for k, (tail, head) in enumerate(arcs):
        for label in (tail, head):
            kind, index = label[0], int(label[1:])
            joins.append(((1, k), (0, tangle.arc_at(kind, index))))
    crossings, circles = _merge_pieces([tangle.crossings, []], joins)
    return PlanarDiagram(crossings, tangle.unknots + circles)


class CircleCount(NamedTuple):
    total: int
    loops: int


def nc_link_circles(a: SetPartition, b: SetPartition) -> CircleCount:
    """Circles of the closed curve family built from partition a's arcs on
    one side of the cut and partition b's reversed arcs on the other.

    ``loops`` counts circles through exactly two boundary points; those
    correspond one to one with arcs common to both families."""
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets {a.n} and {b.n} differ")
    parent: dict[str, str] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, a.n + 1):
        parent[f"a{i}"] = f"a{i}"
        parent[f"b{i}"] = f"b{i}"
    for part in (a, b):
        for tail, head in closure_arcs(part):
            parent[find(tail)] = find(head)
    sizes: dict[str, int] = {}
    for node in list(parent):
        root = find(node)
        sizes[root] = sizes.get(root, 0) + 1
    return CircleCount(len(sizes), sum(1 for s in sizes.values() if s == 2))


# -- state classification and restricted brackets -----------------------


def _full_closure_components(tangle: Tangle, state) -> tuple[int, SetPartition]:
    """Circle count and boundary-point partition for one smoothing of the
    tangle's full surgery (closure arcs b_i -> a_i)."""
    state = tuple(state)
    if len(state) != len(tangle.crossings) or any(bit not in (0, 1) for bit in state):
        raise StateMismatch(
            f"state {state} does not match {len(tangle.crossings)} crossings"
        )
    parent: dict = {arc: arc for arc in tangle.arcs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for i in range(1, tangle.n + 1):
        parent[("a", i)] = ("a", i)
        parent[("b", i)] = ("b", i)
    for cr, bit in zip(tangle.crossings, state):
        for x, y in cr.smoothing_pairs(bit):
            union(x, y)
    for i in range(1, tangle.n + 1):
        union(tangle.arc_at("a", i), ("a", i))
        union(tangle.arc_at("b", i), ("b", i))
        union(("a", i), ("b", i))
    circles = len({find(arc) for arc in tangle.arcs}) + tangle.unknots
    groups: dict = {}
    for i in range(1, tangle.n + 1):
        groups.setdefault(find(("a", i)), []).append(i)
    return circles, SetPartition(tangle.n, groups.values())


def state_partition(cut: CutPresentation, side: int, state) -> SetPartition:
    """Partition of {1..n} induced by one smoothing of a side's full
    surgery: i ~ j when a_i and a_j lie on the same circle.  For planar
    tangles the result is always noncrossing."""
    _, part = _full_closure_components(cut.tangle(side), state)
    if not part.is_noncrossing():
        raise CrossingPartition(
            f"smoothing induced the crossing partition {part}; "
            "the tangle is not planar"
        )
    return part


def restricted_bracket(cut: CutPresentation, side: int, p: SetPartition) -> LaurentPolynomial:
    """Partial bracket of a side's full surgery: the state sum restricted
    to smoothings whose boundary partition is p, with circle exponent
    offset by the block count of p."""
    require_noncrossing(p)
    tangle = cut.tangle(side)
    if p.n != tangle.n:
        raise GroundSetMismatch(f"partition of {p.n} against a cut of size {tangle.n}")
    blocks = p.block_count()
    ncross = len(tangle.crossings)
    total = LaurentPolynomial.zero()
    for state in tangle.states():
        circles, part = _full_closure_components(tangle, state)
        if part == p:
            zeros = state.count(0)
            total = total + LaurentPolynomial.monomial(2 * zeros - ncross) * delta_power(
                circles - blocks
            )
    return total


# -- constructions -------------------------------------------------------


def partition_tangle(p: SetPartition, side: int, unknots: int = 0) -> Tangle:
    """Crossing-free tangle whose strands realize the closure wiring of a
    noncrossing partition (block i1 < ... < ik pairs b_{il} with a_{il+1}).
    Its full surgery induces exactly the partition p."""
    require_noncrossing(p)
    a_arcs = [0] * p.n
    b_arcs = [0] * p.n
    arc = 0
    for block in p.blocks:
        k = len(block)
        for idx, i in enumerate(block):
            j = block[(idx + 1) % k]
            arc += 1
            b_arcs[i - 1] = arc
            a_arcs[j - 1] = arc
    return Tangle(p.n, side, [], a_arcs, b_arcs, unknots)


def open_arc(diagram: PlanarDiagram, arc: int, side: int) -> Tangle:
    """Cut one arc of a closed diagram, producing an n=1 tangle.

    Gluing two such tangles (sides 1 and 2) forms the connected sum of the
    two diagrams along the opened arcs."""
    if arc not in diagram.arcs:
        raise ValueError(f"no arc {arc} in diagram")
    fresh = max(diagram.arcs) + 1
    tail_piece, head_piece = fresh, fresh + 1
    crossings = []
    for cr in diagram.crossings:
        slots = list(cr.slots)
        for idx in range(4):
            if slots[idx] == arc:
                slots[idx] = head_piece if _slot_is_head(cr, idx) else tail_piece
        crossings.append(Crossing(*slots, cr.sign))
    # The strand leaves the diagram along the tail piece and returns along
    # the head piece; boundary roles depend on the side.
    if side == 1:
        a_arcs, b_arcs = (head_piece,), (tail_piece,)
    else:
        a_arcs, b_arcs = (tail_piece,), (head_piece,)
    return Tangle(1, side, crossings, a_arcs, b_arcs, diagram.unknots)


def connected_sum_cut(d1: PlanarDiagram, d2: PlanarDiagram, arc1: int, arc2: int) -> CutPresentation:
    return CutPresentation.of(open_arc(d1, arc1, 1), open_arc(d2, arc2, 2))


# -- random generation ----------------------------------------------------
#
# Tangles are grown upward from the boundary edge as a sequence of planar
# events on a row of loose strand tips: crossings of adjacent tips, cups
# opening a new strand, caps joining adjacent opposite tips.  Every event
# preserves planarity, so all generated data is honestly realizable.


def _as_rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def _random_assembly(rng: random.Random, ends, max_crossings: int, max_width: int):
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    next_arc = len(ends) + 1
    for arc, _ in ends:
        parent[arc] = arc
    ends = list(ends)
    crossings: list[Crossing] = []
    unknots = 0

    while ends or len(crossings) < max_crossings:
        budget = len(crossings) < max_crossings
        cap_spots = [i for i in range(len(ends) - 1) if ends[i][1] != ends[i + 1][1]]
        moves = []
        if budget and len(ends) >= 2:
            moves += ["cross"] * 6
        if budget and len(ends) < max_width:
            moves += ["cup"] * 2
        if cap_spots:
            moves += ["cap"] * (3 if budget else 10)
        if not moves:
            moves = ["cup"]
        move = rng.choice(moves)

        if move == "cross":
            i = rng.randrange(len(ends) - 1)
            (x, dx), (y, dy) = ends[i], ends[i + 1]
            x, y = find(x), find(y)
            xo, yo = next_arc, next_arc + 1
            next_arc += 2
            parent[xo] = xo
            parent[yo] = yo
            if rng.random() < 0.5:  # strand from position i goes under
                if dx:
                    cr = Crossing(x, y, xo, yo, -1 if dy else 1)
                else:
                    cr = Crossing(xo, yo, x, y, 1 if dy else -1)
            else:  # strand from position i+1 goes under
                if dy:
                    cr = Crossing(y, xo, yo, x, 1 if dx else -1)
                else:
                    cr = Crossing(yo, x, y, xo, -1 if dx else 1)
            crossings.append(cr)
            ends[i], ends[i + 1] = (yo, dy), (xo, dx)
        elif move == "cap":
            i = rng.choice(cap_spots)
            x, y = find(ends[i][0]), find(ends[i + 1][0])
            if x == y:
                unknots += 1
            else:
                parent[x] = y
            del ends[i : i + 2]
        else:  # cup
            i = rng.randrange(len(ends) + 1)
            arc = next_arc
            next_arc += 1
            parent[arc] = arc
            up = rng.random() < 0.5
            ends[i:i] = [(arc, up), (arc, not up)]

    return crossings, unknots, find


def random_tangle(seed_or_rng, n: int, side: int, max_crossings: int) -> Tangle:
    """A random planar tangle with the alternating boundary of a cut side."""
    rng = _as_rng(seed_or_rng)
    starts = []
    for i in range(n):
        a_up = side == 1
        starts.append((2 * i + 1, a_up))
        starts.append((2 * i + 2, not a_up))
    crossings, unknots, find = _random_assembly(
        rng, starts, max_crossings, max_width=2 * n + 6
    )
    number: dict[int, int] = {}

    def resolve(arc):
        root = find(arc)
        if root not in number:
            number[root] = len(number) + 1
        return number[root]

    relabeled = [Crossing(*(resolve(s) for s in cr.slots), cr.sign) for cr in crossings]
    a_arcs = [resolve(2 * i + 1) for i in range(n)]
    b_arcs = [resolve(2 * i + 2) for i in range(n)]
    return Tangle(n, side, relabeled, a_arcs, b_arcs, unknots)


def random_cut_presentation(seed_or_rng, n: int, max_crossings_per_side: int) -> CutPresentation:
    rng = _as_rng(seed_or_rng)
    t1 = random_tangle(rng, n, 1, rng.randint(0, max_crossings_per_side))
    t2 = random_tangle(rng, n, 2, rng.randint(0, max_crossings_per_side))
    return CutPresentation.of(t1, t2)


def random_diagram(seed_or_rng, max_crossings: int) -> PlanarDiagram:
    """A random closed planar diagram with at most ``max_crossings``."""
    rng = _as_rng(seed_or_rng)
    crossings, unknots, find = _random_assembly(rng, [], max_crossings, max_width=10)
    number: dict[int, int] = {}

    def resolve(arc):
        root = find(arc)
        if root not in number:
            number[root] = len(number) + 1
        return number[root]

    relabeled = [Crossing(*(resolve(s) for s in cr.slots), cr.sign) for cr in crossings]
    if not relabeled and unknots == 0:
        unknots = 1
    return PlanarDiagram(relabeled, unknots)


# -- text format ----------------------------------------------------------
#
#   cut <n>
#   tangle 1
#   pd <n_arcs>
#   X <a> <b> <c> <d> <sign>
#   unknots <k>                 (optional)
#   boundary a1 <arc> b1 <arc> ... an <arc> bn <arc>
#   tangle 2
#   ...
#
# The boundary line lists the cut points in cyclic order from the marked
# point.  If the labeling is consistently phase-shifted (every a-point
# carries a b-orientation and vice versa), the loader rotates the labels
# by one point so that a1 is positively oriented.


class CutFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_cut(text: str) -> CutPresentation:
    n: int | None = None
    sections: list[dict] = []
    current: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "cut":
            if n is not None:
                raise CutFormatError("duplicate cut header", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise CutFormatError("expected 'cut <n>' with n >= 1", lineno)
            n = int(tokens[1])
        elif kind == "tangle":
            if n is None:
                raise CutFormatError("tangle before cut header", lineno)
            if len(tokens) != 2 or tokens[1] not in ("1", "2"):
                raise CutFormatError("expected 'tangle 1' or 'tangle 2'", lineno)
            current = {
                "side": int(tokens[1]),
                "crossings": [],
                "unknots": 0,
                "boundary": None,
                "declared": None,
                "line": lineno,
            }
            sections.append(current)
        elif current is None:
            raise CutFormatError(f"directive {kind!r} outside a tangle section", lineno)
        elif kind == "pd":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise CutFormatError("expected 'pd <n_arcs>'", lineno)
            current["declared"] = int(tokens[1])
        elif kind == "X":
            if len(tokens) != 6:
                raise CutFormatError("expected 'X a b c d sign'", lineno)
            try:
                a, b, c, d = (int(t) for t in tokens[1:5])
                sign = int(tokens[5])
            except ValueError:
                raise CutFormatError("non-integer crossing field", lineno) from None
            if sign not in (1, -1):
                raise CutFormatError("sign must be +1 or -1", lineno)
            current["crossings"].append(Crossing(a, b, c, d, sign))
        elif kind == "unknots":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise CutFormatError("expected 'unknots <k>'", lineno)
            current["unknots"] = int(tokens[1])
        elif kind == "boundary":
            if len(tokens) != 1 + 4 * n:
                raise CutFormatError(
                    f"boundary needs {2 * n} labeled points", lineno
                )
            pairs = tokens[1:]
            arcs = []
            for i in range(2 * n):
                label, arc_text = pairs[2 * i], pairs[2 * i + 1]
                want = f"a{i // 2 + 1}" if i % 2 == 0 else f"b{i // 2 + 1}"
                if label != want:
                    raise CutFormatError(
                        f"boundary point {i + 1} should be labeled {want}", lineno
                    )
                try:
                    arcs.append(int(arc_text))
                except ValueError:
                    raise CutFormatError("non-integer boundary arc", lineno) from None
            current["boundary"] = arcs
        else:
            raise CutFormatError(f"unknown directive {kind!r}", lineno)

    if n is None:
        raise CutFormatError("missing cut header")
    if len(sections) != 2 or sections[0]["side"] != 1 or sections[1]["side"] != 2:
        raise CutFormatError("expected tangle 1 followed by tangle 2")
    for sec in sections:
        if sec["boundary"] is None:
            raise CutFormatError("tangle without boundary line", sec["line"])

    def build(rotated: bool) -> CutPresentation:
        tangles = []
        for sec in sections:
            arcs = sec["boundary"]
            if rotated:
                arcs = arcs[1:] + arcs[:1]
            a_arcs = arcs[0::2]
            b_arcs = arcs[1::2]
            tangle = Tangle(
                n, sec["side"], sec["crossings"], a_arcs, b_arcs, sec["unknots"]
            )
            if sec["declared"] is not None and sec["declared"] != len(tangle.arcs):
                raise CutFormatError(
                    f"pd header declares {sec['declared']} arcs, found {len(tangle.arcs)}",
                    sec["line"],
                )
            tangles.append(tangle)
        return CutPresentation.of(*tangles)

    try:
        return build(rotated=False)
    except ValueError as first_error:
        try:
            return build(rotated=True)
        except ValueError:
            raise CutFormatError(str(first_error)) from None


def format_cut(cut: CutPresentation) -> str:
    lines = [f"cut {cut.n}"]
    for tangle in (cut.tangle1, cut.tangle2):
        lines.append(f"tangle {tangle.side}")
        lines.append(f"pd {len(tangle.arcs)}")
        for cr in tangle.crossings:
            lines.append(f"X {cr.a} {cr.b} {cr.c} {cr.d} {cr.sign:+d}")
        if tangle.unknots:
            lines.append(f"unknots {tangle.unknots}")
        parts = []
        for i in range(1, tangle.n + 1):
            parts.append(f"a{i} {tangle.arc_at('a', i)}")
            parts.append(f"b{i} {tangle.arc_at('b', i)}")
        lines.append("boundary " + " ".join(parts))
    return "\n".join(lines) + "\n"
