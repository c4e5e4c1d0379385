"""Shared fixture diagrams and cut presentations.

Expected polynomial values used in tests were derived by hand from the
bracket rules (state sums small enough to expand on paper) and frozen
here; the skein-recursion oracle cross-checks them in the test modules.
"""

from __future__ import annotations

from knotsplit import (
    Crossing,
    CutPresentation,
    PlanarDiagram,
    SetPartition,
    Tangle,
    connected_sum_cut,
    open_arc,
    partition_tangle,
    strand_tangle,
)
from knotsplit.diagram import _slot_is_head
from knotsplit.polyring import LaurentPolynomial


def unknot() -> PlanarDiagram:
    return PlanarDiagram([], 1)


def unlink(k: int) -> PlanarDiagram:
    return PlanarDiagram([], k)


def positive_kink() -> PlanarDiagram:
    return PlanarDiagram([(1, 1, 2, 2, 1)])


def negative_kink() -> PlanarDiagram:
    return PlanarDiagram([(1, 2, 2, 1, -1)])


def hopf_positive() -> PlanarDiagram:
    return PlanarDiagram([(1, 4, 2, 3, 1), (4, 1, 3, 2, 1)])


def trefoil_right() -> PlanarDiagram:
    return PlanarDiagram([(1, 5, 2, 4, 1), (5, 3, 6, 2, 1), (3, 1, 4, 6, 1)])


def braid_closure(word, strands: int) -> PlanarDiagram:
    """Close a braid word into a diagram.  Strands run downward; a positive
    letter i crosses the strand at position i+1 over the one at position i,
    giving a crossing of sign +1."""
    current = list(range(1, strands + 1))
    initial = list(current)
    next_arc = strands + 1
    crossings = []
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise ValueError(f"bad braid letter {letter} for {strands} strands")
        i = abs(letter) - 1
        x, y = current[i], current[i + 1]
        xo, yo = next_arc, next_arc + 1
        next_arc += 2
        if letter > 0:
            crossings.append(Crossing(x, yo, xo, y, 1))
        else:
            crossings.append(Crossing(y, x, yo, xo, -1))
        current[i], current[i + 1] = yo, xo
    alias: dict[int, int] = {}

    def find(a: int) -> int:
        while a in alias:
            a = alias[a]
        return a

    unknots = 0
    for top, bottom in zip(initial, current):
        t, b = find(top), find(bottom)
        if t == b:
            unknots += 1
        else:
            alias[b] = t
    resolved = [
        Crossing(find(c.a), find(c.b), find(c.c), find(c.d), c.sign) for c in crossings
    ]
    return PlanarDiagram(resolved, unknots)


def figure_eight() -> PlanarDiagram:
    return braid_closure([1, -2, 1, -2], 3)


def with_kink(diagram: PlanarDiagram, arc: int, sign: int) -> PlanarDiagram:
    """Insert a Reidemeister-I kink of the given sign on an arc."""
    fresh = max(diagram.arcs) + 1
    tail_piece, head_piece, loop = fresh, fresh + 1, fresh + 2
    crossings = []
    for cr in diagram.crossings:
        slots = list(cr.slots)
        for idx in range(4):
            if slots[idx] == arc:
                slots[idx] = tail_piece if _slot_is_head(cr, idx) else head_piece
        crossings.append(Crossing(*slots, cr.sign))
    # head_piece leaves the old tail crossing and runs into the kink; the
    # strand continues along tail_piece into the old head crossing.
    if sign > 0:
        crossings.append(Crossing(head_piece, tail_piece, loop, loop, 1))
    else:
        crossings.append(Crossing(head_piece, loop, loop, tail_piece, -1))
    return PlanarDiagram(crossings, diagram.unknots)


# -- cut presentations ---------------------------------------------------


def cut_unknot_n1() -> CutPresentation:
    return CutPresentation.of(strand_tangle(1), strand_tangle(2))


def cut_trefoil_n2() -> CutPresentation:
    """Alternate cut of the right trefoil with two boundary strands on one
    side (beads on two arcs sharing a face, joined through that face)."""
    t1 = partition_tangle(SetPartition.finest(2), 1)
    t2 = Tangle(
        2,
        2,
        [(12, 5, 2, 4, 1), (5, 13, 6, 2, 1), (14, 11, 4, 6, 1)],
        a_arcs=(11, 13),
        b_arcs=(12, 14),
    )
    return CutPresentation.of(t1, t2)


def cut_hopf_n2() -> CutPresentation:
    """Same construction on the positive Hopf link (its antiparallel face)."""
    t1 = partition_tangle(SetPartition.finest(2), 1)
    t2 = Tangle(
        2,
        2,
        [(12, 13, 2, 3, 1), (14, 11, 3, 2, 1)],
        a_arcs=(11, 13),
        b_arcs=(12, 14),
    )
    return CutPresentation.of(t1, t2)


def cut_hopf_n1() -> CutPresentation:
    return CutPresentation.of(open_arc(hopf_positive(), 1, 1), strand_tangle(2))


def cut_kinked_trefoil_n1() -> CutPresentation:
    """Kink tangle against an opened trefoil: a 1|3 crossing split."""
    kink = Tangle(1, 1, [(1, 3, 2, 2, 1)], a_arcs=(1,), b_arcs=(3,))
    return CutPresentation.of(kink, open_arc(trefoil_right(), 6, 2))


def clasp_tangle(side: int) -> Tangle:
    """Two boundary strands crossing each other twice (both positive)."""
    if side == 1:
        crossings = [(5, 6, 2, 3, 1), (6, 5, 4, 1, 1)]
    else:
        crossings = [(2, 3, 5, 6, 1), (4, 1, 6, 5, 1)]
    return Tangle(2, side, crossings, a_arcs=(1, 3), b_arcs=(2, 4))


def cut_clasp_n2() -> CutPresentation:
    return CutPresentation.of(clasp_tangle(1), clasp_tangle(2))


def cut_wirings(p: SetPartition, q: SetPartition) -> CutPresentation:
    return CutPresentation.of(partition_tangle(p, 1), partition_tangle(q, 2))


def corpus_diagrams() -> list[PlanarDiagram]:
    """Closed diagrams with at most 8 crossings."""
    tref = trefoil_right()
    return [
        unknot(),
        unlink(2),
        positive_kink(),
        negative_kink(),
        hopf_positive(),
        tref,
        tref.reversed(),
        figure_eight(),
        with_kink(tref, 2, 1),
        with_kink(hopf_positive(), 1, -1),
        braid_closure([1, 1, 1, 1], 2),
        braid_closure([1, -1], 2),
        braid_closure([1, 2, 1], 3),
        braid_closure([1, -2, 1, -2, 1], 3),
        braid_closure([1, 1, 2, 2], 3),
    ]


def corpus_cuts() -> list[CutPresentation]:
    """Fixed cut presentations, all with n <= 3."""
    tref = trefoil_right()
    fig8 = figure_eight()
    cuts = [
        cut_unknot_n1(),
        cut_hopf_n1(),
        cut_kinked_trefoil_n1(),
        cut_trefoil_n2(),
        cut_hopf_n2(),
        cut_clasp_n2(),
        connected_sum_cut(tref, tref, 1, 1),
        connected_sum_cut(tref, hopf_positive(), 2, 1),
        connected_sum_cut(fig8, tref, 1, 3),
    ]
    for p_text, q_text in (
        ("{{1},{2}}", "{{1,2}}"),
        ("{{1,2}}", "{{1,2}}"),
        ("{{1,2,3}}", "{{1},{2,3}}"),
        ("{{1,3},{2}}", "{{1},{2},{3}}"),
    ):
        cuts.append(cut_wirings(SetPartition.parse(p_text), SetPartition.parse(q_text)))
    return cuts


# Frozen expected values (hand-derived, oracle-confirmed in tests).
TREFOIL_BRACKET = LaurentPolynomial({-7: 1, -3: -1, 5: -1})
TREFOIL_JONES = LaurentPolynomial({4: 1, 12: 1, 16: -1})
HOPF_BRACKET = LaurentPolynomial({-4: -1, 4: -1})
HOPF_KAUFFMAN = LaurentPolynomial({-2: -1, -10: -1})
HOPF_JONES = LaurentPolynomial({2: -1, 10: -1})
FIGURE_EIGHT_JONES = LaurentPolynomial({-8: 1, -4: -1, 0: 1, 4: -1, 8: 1})
