"""Set partitions of {1..n}: lattice operations and noncrossing enumeration."""

from __future__ import annotations

import math
from itertools import combinations


class GroundSetMismatch(ValueError):
    """Lattice operation on partitions of different ground sets."""


class EmptyGroundSet(ValueError):
    """Partitions of the empty set are not supported."""


class CrossingPartition(ValueError):
    """A noncrossing partition was required."""


class SetPartition:
    """A partition of {1..n} in canonical form.

    Blocks are sorted internally and ordered by their minimum element, so
    equal partitions compare equal structurally.  Instances are immutable.
    """

    __slots__ = ("n", "blocks", "_block_index")

    def __init__(self, n: int, blocks):
        if n < 1:
            raise EmptyGroundSet("ground set must be {1..n} with n >= 1")
        canonical = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0] if b else 0))
        seen: dict[int, int] = {}
        for idx, block in enumerate(canonical):
            if not block:
                raise ValueError("empty block")
            for x in block:
                if not (1 <= x <= n):
                    raise ValueError(f"element {x} outside ground set {{1..{n}}}")
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen[x] = idx
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - set(seen))
            raise ValueError(f"elements {missing} not covered")
        self.n = n
        self.blocks = canonical
        self._block_index = seen

    @classmethod
    def finest(cls, n: int) -> "SetPartition":
        """All singletons: the bottom of the refinement order."""
        return cls(n, [[i] for i in range(1, n + 1)])

    @classmethod
    def coarsest(cls, n: int) -> "SetPartition":
        """The single block {1..n}: the top of the refinement order."""
        return cls(n, [range(1, n + 1)])

    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, element: int) -> int:
        """Index of the block containing ``element`` (canonical order)."""
        return self._block_index[element]

    def restricted_growth_string(self) -> tuple[int, ...]:
        return tuple(self._block_index[i] for i in range(1, self.n + 1))

    def is_noncrossing(self) -> bool:
        """True iff no i < j < k < l has i,k in one block and j,l in another."""
        for bx, by in combinations(self.blocks, 2):
            # Interleaved blocks show up as an alternation x..y..x..y in the
            # merged sorted sequence.
            merged = sorted(((v, 0) for v in bx), key=lambda t: t[0])
            merged = sorted(merged + [(v, 1) for v in by])
            switches = 0
            last = None
            for _, tag in merged:
                if tag != last:
                    switches += 1
                    last = tag
            if switches > 3:
                return False
        return True

    def refines(self, other: "SetPartition") -> bool:
        if self.n != other.n:
            raise GroundSetMismatch(f"ground sets {self.n} and {other.n} differ")
        return all(
            len({other._block_index[x] for x in block}) == 1 for block in self.blocks
        )

    def meet(self, other: "SetPartition") -> "SetPartition":
        """Common refinement: all nonempty pairwise block intersections."""
        if self.n != other.n:
            raise GroundSetMismatch(f"ground sets {self.n} and {other.n} differ")
        buckets: dict[tuple[int, int], list[int]] = {}
        for x in range(1, self.n + 1):
            key = (self._block_index[x], other._block_index[x])
            buckets.setdefault(key, []).append(x)
        return SetPartition(self.n, buckets.values())

    def join(self, other: "SetPartition") -> "SetPartition":
        """Finest common coarsening, computed in the full partition lattice:
        connected components of the union of both block graphs."""
        if self.n != other.n:
            raise GroundSetMismatch(f"ground sets {self.n} and {other.n} differ")
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (self, other):
            for block in part.blocks:
                root = find(block[0])
                for x in block[1:]:
                    parent[find(x)] = root
        groups: dict[int, list[int]] = {}
        for x in range(1, self.n + 1):
            groups.setdefault(find(x), []).append(x)
        return SetPartition(self.n, groups.values())

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        inner = ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return "{" + inner + "}"

    def __repr__(self):
        return f"SetPartition({self.n}, {self})"

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse ``{{1,3},{2},{4}}``; arbitrary whitespace is accepted."""
        stripped = "".join(text.split())
        if not (stripped.startswith("{") and stripped.endswith("}")):
            raise ValueError(f"bad partition text {text!r}")
        body = stripped[1:-1]
        blocks: list[list[int]] = []
        i = 0
        while i < len(body):
            if body[i] == ",":
                i += 1
                continue
            if body[i] != "{":
                raise ValueError(f"bad partition text {text!r}")
            end = body.find("}", i)
            if end < 0:
                raise ValueError(f"unbalanced braces in {text!r}")
            chunk = body[i + 1 : end]
            if not chunk:
                raise ValueError("empty block")
            blocks.append([int(tok) for tok in chunk.split(",")])
            i = end + 1
        if not blocks:
            raise ValueError("no blocks")
        n = max(max(b) for b in blocks)
        return cls(n, blocks)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def enumerate_all(n: int) -> list[SetPartition]:
    """Every partition of {1..n}, ordered lexicographically by restricted
    growth string."""
    if n < 1:
        raise EmptyGroundSet("ground set must be {1..n} with n >= 1")
    out = []

    def rec(rgs: list[int], mx: int):
        if len(rgs) == n:
            blocks: dict[int, list[int]] = {}
            for i, v in enumerate(rgs, start=1):
                blocks.setdefault(v, []).append(i)
            out.append(SetPartition(n, blocks.values()))
            return
        for v in range(mx + 2):
            rgs.append(v)
            rec(rgs, max(mx, v))
            rgs.pop()

    rec([0], 0)
    return out


def enumerate_noncrossing(n: int) -> list[SetPartition]:
    """All noncrossing partitions of {1..n} in the canonical order
    (lexicographic on restricted growth strings); there are catalan(n).

    Generation is by direct recursion on the block of the minimum element:
    the chosen block splits the remaining elements into independent gaps,
    each partitioned noncrossingly on its own.
    """
    if n < 1:
        raise EmptyGroundSet("ground set must be {1..n} with n >= 1")

    def gen(elements: tuple[int, ...]):
        if not elements:
            yield ()
            return
        first, rest = elements[0], elements[1:]
        for size in range(len(rest) + 1):
            for chosen in combinations(rest, size):
                block = (first,) + chosen
                # Elements strictly between consecutive block members (and
                # after the last) must stay within their own gap.
                bounds = list(block[1:]) + [None]
                gaps: list[tuple[int, ...]] = []
                lo = first
                for hi in bounds:
                    gap = tuple(
                        x for x in rest if x > lo and (hi is None or x < hi) and x not in chosen
                    )
                    gaps.append(gap)
                    lo = hi if hi is not None else lo
                for combo in _product_of_partitions(gaps, gen):
                    yield (block,) + combo

    result = [SetPartition(n, blocks) for blocks in gen(tuple(range(1, n + 1)))]
    result.sort(key=SetPartition.restricted_growth_string)
    return result


def _product_of_partitions(gaps, gen):
    if not gaps:
        yield ()
        return
    head, tail = gaps[0], gaps[1:]
    for head_blocks in gen(head):
        for tail_blocks in _product_of_partitions(tail, gen):
            yield head_blocks + tail_blocks


def require_noncrossing(p: SetPartition) -> SetPartition:
    if not p.is_noncrossing():
        raise CrossingPartition(f"{p} is a crossing partition")
    return p
