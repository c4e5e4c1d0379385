"""Combinatorial link diagrams and exact Kauffman bracket evaluation.

A diagram is a list of crossings plus a count of crossing-free circles.
Each crossing stores its four arc labels counterclockwise starting at the
incoming under-strand, together with its sign.  Slot conventions:

  slot 0  incoming under-strand
  slot 1  over-strand (outgoing if sign +1, incoming if sign -1)
  slot 2  outgoing under-strand
  slot 3  over-strand (incoming if sign +1, outgoing if sign -1)

The 0-smoothing joins slots (0,1) and (2,3); the 1-smoothing joins (0,3)
and (1,2).  With these conventions a positive kink has bracket -A^3 and
the right-handed trefoil has writhe +3 and Jones polynomial -t^4+t^3+t.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .polyring import (
    LaurentPolynomial,
    delta_power,
    substitute_jones,
)


class StateMismatch(ValueError):
    """State vector does not cover the diagram's crossings."""


class DiagramFormatError(ValueError):
    """Malformed diagram text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def slots(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def smoothing_pairs(self, bit: int) -> tuple[tuple[int, int], tuple[int, int]]:
        if bit == 0:
            return ((self.a, self.b), (self.c, self.d))
        return ((self.a, self.d), (self.b, self.c))

    def endpoint_statuses(self) -> Iterable[tuple[int, bool]]:
        """Yield (arc, is_head) for the four slots; an arc's head is where
        it flows into a crossing."""
        yield (self.a, True)
        yield (self.c, False)
        if self.sign > 0:
            yield (self.d, True)
            yield (self.b, False)
        else:
            yield (self.b, True)
            yield (self.d, False)


class PlanarDiagram:
    """A closed oriented link diagram.

    ``unknots`` counts closed components that meet no crossing; these do
    not appear in the arc set.  The constructor checks that every arc label
    occurs exactly twice, that orientations are globally consistent, and
    that the diagram has at least one component.
    """

    __slots__ = ("crossings", "unknots", "_arcs")

    def __init__(self, crossings: Iterable, unknots: int = 0):
        crs = []
        for cr in crossings:
            if not isinstance(cr, Crossing):
                cr = Crossing(*cr)
            if cr.sign not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {cr.sign}")
            crs.append(cr)
        if unknots < 0:
            raise ValueError("negative unknot count")
        if not crs and unknots == 0:
            raise ValueError("diagram must have at least one component")
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for cr in crs:
            for arc, is_head in cr.endpoint_statuses():
                bucket = heads if is_head else tails
                bucket[arc] = bucket.get(arc, 0) + 1
        for arc in set(heads) | set(tails):
            h, t = heads.get(arc, 0), tails.get(arc, 0)
            if h + t != 2:
                raise ValueError(f"arc {arc} has {h + t} endpoints, expected 2")
            if h != 1 or t != 1:
                raise ValueError(f"arc {arc} orientation is inconsistent")
        self.crossings = tuple(crs)
        self.unknots = unknots
        self._arcs = frozenset(heads)

    @property
    def arcs(self) -> frozenset:
        return self._arcs

    def writhe(self) -> int:
        return sum(cr.sign for cr in self.crossings)

    def states(self) -> Iterator[tuple[int, ...]]:
        """All 0/1 assignments over the crossings, in binary counting order."""
        return product((0, 1), repeat=len(self.crossings))

    def _check_state(self, state) -> tuple[int, ...]:
        state = tuple(state)
        if len(state) != len(self.crossings) or any(b not in (0, 1) for b in state):
            raise StateMismatch(
                f"state {state} does not match {len(self.crossings)} crossings"
            )
        return state

    def circle_count(self, state) -> int:
        """Number of circles in the smoothing selected by ``state``."""
        state = self._check_state(state)
        parent = {arc: arc for arc in self._arcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for cr, bit in zip(self.crossings, state):
            for x, y in cr.smoothing_pairs(bit):
                parent[find(x)] = find(y)
        return len({find(a) for a in self._arcs}) + self.unknots

    def reversed(self) -> "PlanarDiagram":
        """Reverse the orientation of every component; signs are unchanged."""
        return PlanarDiagram(
            [Crossing(cr.c, cr.d, cr.a, cr.b, cr.sign) for cr in self.crossings],
            self.unknots,
        )

    def with_extra_unknots(self, k: int) -> "PlanarDiagram":
        return PlanarDiagram(self.crossings, self.unknots + k)

    def __eq__(self, other):
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return self.crossings == other.crossings and self.unknots == other.unknots

    def __hash__(self):
        return hash((self.crossings, self.unknots))

    def __repr__(self):
        return f"PlanarDiagram({len(self.crossings)} crossings, {self.unknots} unknots)"


def writhe(diagram: PlanarDiagram) -> int:
    return diagram.writhe()


def bracket_state_sum(diagram: PlanarDiagram) -> LaurentPolynomial:
    """Kauffman bracket as the full state sum
    sum over states of A^(#0 - #1) * delta^(circles - 1)."""
    total = LaurentPolynomial.zero()
    ncross = len(diagram.crossings)
    for state in diagram.states():
        zeros = state.count(0)
        k = diagram.circle_count(state)
        total = total + LaurentPolynomial.monomial(2 * zeros - ncross) * delta_power(k - 1)
    return total


def bracket_skein(diagram: PlanarDiagram) -> LaurentPolynomial:
    """Kauffman bracket by recursive smoothing of one crossing at a time.

    Independent of :func:`bracket_state_sum`; the two serve as oracles for
    each other.  Base case: k free circles contribute delta^(k-1).
    """
    a_pos = LaurentPolynomial.monomial(1)
    a_neg = LaurentPolynomial.monomial(-1)

    def smooth(rest: list[tuple[int, int, int, int]], cr, bit: int, unknots: int):
        pairs = (
            ((cr[0], cr[1]), (cr[2], cr[3])) if bit == 0 else ((cr[0], cr[3]), (cr[1], cr[2]))
        )
        (p, q), second = pairs
        if p == q:
            unknots += 1
            r, s = second
        else:
            rest = [
                tuple(p if x == q else x for x in quad) for quad in rest
            ]
            r, s = (p if x == q else x for x in second)
        if r == s:
            unknots += 1
        else:
            rest = [
                tuple(r if x == s else x for x in quad) for quad in rest
            ]
        return rest, unknots

    def rec(crossings: list[tuple[int, int, int, int]], unknots: int) -> LaurentPolynomial:
        if not crossings:
            return delta_power(unknots - 1)
        head, rest = crossings[0], crossings[1:]
        rest0, unk0 = smooth(rest, head, 0, unknots)
        rest1, unk1 = smooth(rest, head, 1, unknots)
        return a_pos * rec(rest0, unk0) + a_neg * rec(rest1, unk1)

    return rec([cr.slots for cr in diagram.crossings], diagram.unknots)


def kauffman_function(diagram: PlanarDiagram) -> LaurentPolynomial:
    """(-A)^(-3w) times the bracket: invariant under all Reidemeister moves."""
    w = diagram.writhe()
    sign = 1 if w % 2 == 0 else -1
    factor = LaurentPolynomial.monomial(-3 * w, sign)
    return factor * bracket_state_sum(diagram)


def jones(diagram: PlanarDiagram) -> LaurentPolynomial:
    """Jones polynomial; exponents are read in quarter powers of t."""
    return substitute_jones(kauffman_function(diagram))


# -- text format --------------------------------------------------------
#
#   pd <n_arcs>
#   X <a> <b> <c> <d> <sign>        (one line per crossing)
#   unknots <k>                     (optional)
#   dir <arc> <cr>.<slot> <cr>.<slot>   (optional: tail then head, 0-based)


def parse_diagram(text: str) -> PlanarDiagram:
    crossings: list[Crossing] = []
    unknots = 0
    declared_arcs: int | None = None
    dir_claims: list[tuple[int, int, tuple, tuple]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "pd":
            if declared_arcs is not None:
                raise DiagramFormatError("duplicate pd header", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise DiagramFormatError("expected 'pd <n_arcs>'", lineno)
            declared_arcs = int(tokens[1])
        elif kind == "X":
            if declared_arcs is None:
                raise DiagramFormatError("crossing before pd header", lineno)
            if len(tokens) != 6:
                raise DiagramFormatError("expected 'X a b c d sign'", lineno)
            try:
                a, b, c, d = (int(t) for t in tokens[1:5])
                sign = int(tokens[5])
            except ValueError:
                raise DiagramFormatError("non-integer crossing field", lineno) from None
            if sign not in (1, -1):
                raise DiagramFormatError("sign must be +1 or -1", lineno)
            crossings.append(Crossing(a, b, c, d, sign))
        elif kind == "unknots":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise DiagramFormatError("expected 'unknots <k>'", lineno)
            unknots = int(tokens[1])
        elif kind == "dir":
            if len(tokens) != 4:
                raise DiagramFormatError("expected 'dir <arc> <tail> <head>'", lineno)
            try:
                arc = int(tokens[1])
                tail = _parse_endpoint(tokens[2])
                head = _parse_endpoint(tokens[3])
            except ValueError:
                raise DiagramFormatError("bad dir endpoint", lineno) from None
            dir_claims.append((lineno, arc, tail, head))
        else:
            raise DiagramFormatError(f"unknown directive {kind!r}", lineno)
    if declared_arcs is None:
        raise DiagramFormatError("missing pd header")
    try:
        diagram = PlanarDiagram(crossings, unknots)
    except ValueError as exc:
        raise DiagramFormatError(str(exc)) from None
    if len(diagram.arcs) != declared_arcs:
        raise DiagramFormatError(
            f"pd header declares {declared_arcs} arcs, found {len(diagram.arcs)}"
        )
    for lineno, arc, tail, head in dir_claims:
        _check_dir_claim(diagram, arc, tail, head, lineno)
    return diagram


def _parse_endpoint(token: str) -> tuple[int, int]:
    cr_text, slot_text = token.split(".", 1)
    cr, slot = int(cr_text), int(slot_text)
    if slot not in (0, 1, 2, 3):
        raise ValueError("slot out of range")
    return cr, slot


def _check_dir_claim(diagram, arc, tail, head, lineno):
    for label, (cr_idx, slot), want_head in (("tail", tail, False), ("head", head, True)):
        if not (0 <= cr_idx < len(diagram.crossings)):
            raise DiagramFormatError(f"dir {label} crossing index out of range", lineno)
        cr = diagram.crossings[cr_idx]
        if cr.slots[slot] != arc:
            raise DiagramFormatError(
                f"arc {arc} is not at crossing {cr_idx} slot {slot}", lineno
            )
        is_head = _slot_is_head(cr, slot)
        if is_head != want_head:
            raise DiagramFormatError(
                f"dir contradicts derived orientation of arc {arc}", lineno
            )


def _slot_is_head(cr: Crossing, slot: int) -> bool:
    if slot == 0:
        return True
    if slot == 2:
        return False
    if cr.sign > 0:
        return slot == 3
    return slot == 1


def format_diagram(diagram: PlanarDiagram) -> str:
    lines = [f"pd {len(diagram.arcs)}"]
    for cr in diagram.crossings:
        lines.append(f"X {cr.a} {cr.b} {cr.c} {cr.d} {cr.sign:+d}")
    if diagram.unknots:
        lines.append(f"unknots {diagram.unknots}")
    return "\n".join(lines) + "\n"
