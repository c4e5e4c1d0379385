import random

import pytest

from knotsplit.partitions import (
    CrossingPartition,
    EmptyGroundSet,
    GroundSetMismatch,
    SetPartition,
    catalan,
    enumerate_all,
    enumerate_noncrossing,
    require_noncrossing,
)

P = SetPartition.parse


class TestConstruction:
    def test_canonical_block_order(self):
        p = SetPartition(4, [[4, 2], [3, 1]])
        assert p.blocks == ((1, 3), (2, 4))
        assert str(p) == "{{1,3},{2,4}}"

    def test_validation(self):
        with pytest.raises(ValueError):
            SetPartition(3, [[1, 2]])  # 3 uncovered
        with pytest.raises(ValueError):
            SetPartition(3, [[1, 2], [2, 3]])  # overlap
        with pytest.raises(ValueError):
            SetPartition(2, [[1, 2, 3]])  # out of range
        with pytest.raises(EmptyGroundSet):
            SetPartition(0, [])

    def test_parse_round_trip(self):
        for text in ("{{1,3},{2},{4}}", "{{1,2,3}}", "{{1},{2}}"):
            assert str(P(text)) == text
        assert P(" { {2, 1} , {3} } ") == SetPartition(3, [[1, 2], [3]])
        with pytest.raises(ValueError):
            P("{{1,3},{2}")

    def test_bounds(self):
        assert SetPartition.finest(3).blocks == ((1,), (2,), (3,))
        assert SetPartition.coarsest(3).blocks == ((1, 2, 3),)


class TestNoncrossing:
    def test_canonical_crossing_pattern(self):
        assert not P("{{1,3},{2,4}}").is_noncrossing()

    def test_nested_blocks(self):
        assert P("{{1,4},{2,3}}").is_noncrossing()

    def test_interval_blocks(self):
        assert P("{{1,2,3},{4,5,6,7}}").is_noncrossing()

    def test_require_noncrossing(self):
        with pytest.raises(CrossingPartition):
            require_noncrossing(P("{{1,3},{2,4}}"))


class TestLattice:
    def test_meet_with_finest(self):
        for text in ("{{1,2,3}}", "{{1,3},{2}}"):
            p = P(text)
            assert p.meet(SetPartition.finest(3)) == SetPartition.finest(3)

    def test_join_with_coarsest(self):
        for text in ("{{1},{2},{3}}", "{{1,2},{3}}"):
            p = P(text)
            assert p.join(SetPartition.coarsest(3)) == SetPartition.coarsest(3)

    def test_meet_by_block_intersections(self):
        a = P("{{1,2,3},{4,5,6,7}}")
        b = P("{{1},{2,3,4},{5,6,7}}")
        assert a.meet(b) == P("{{1},{2,3},{4},{5,6,7}}")
        assert a.meet(b).block_count() == 4

    def test_join_connects_chains(self):
        a = P("{{1,2,3},{4,5,6,7}}")
        b = P("{{1},{2,3,4},{5,6,7}}")
        assert a.join(b) == SetPartition.coarsest(7)

    def test_join_of_noncrossing_can_cross(self):
        a = P("{{1,3},{2},{4}}")
        b = P("{{2,4},{1},{3}}")
        assert a.is_noncrossing() and b.is_noncrossing()
        j = a.join(b)
        assert j == P("{{1,3},{2,4}}")
        assert not j.is_noncrossing()

    def test_idempotence(self):
        p = P("{{1,4},{2,3}}")
        assert p.meet(p) == p
        assert p.join(p) == p

    def test_ground_set_mismatch(self):
        with pytest.raises(GroundSetMismatch):
            SetPartition.finest(2).meet(SetPartition.finest(3))
        with pytest.raises(GroundSetMismatch):
            SetPartition.finest(2).join(SetPartition.finest(3))

    def test_lattice_laws_exhaustive_small(self):
        for n in (2, 3, 4):
            parts = enumerate_all(n)
            for a in parts:
                for b in parts:
                    assert a.meet(b) == b.meet(a)
                    assert a.join(b) == b.join(a)
                    assert a.join(a.meet(b)) == a
                    assert a.meet(a.join(b)) == a

    def test_lattice_laws_randomized(self):
        rng = random.Random(11)
        parts = enumerate_all(7)
        for _ in range(150):
            a, b, c = (rng.choice(parts) for _ in range(3))
            assert a.meet(b.meet(c)) == a.meet(b).meet(c)
            assert a.join(b.join(c)) == a.join(b).join(c)
            assert a.join(a.meet(b)) == a
            assert a.meet(a.join(b)) == a

    def test_refinement_characterizations(self):
        parts = enumerate_all(4)
        for a in parts:
            for b in parts:
                refines = a.refines(b)
                assert refines == (a.meet(b) == a)
                assert refines == (a.join(b) == b)

    def test_block_count_comparison(self):
        # |a meet b| >= |a join b| with equality exactly on the diagonal.
        for n in range(1, 6):
            for a in enumerate_all(n):
                for b in enumerate_all(n):
                    lo = a.join(b).block_count()
                    hi = a.meet(b).block_count()
                    assert hi >= lo
                    assert (hi == lo) == (a == b)

    def test_noncrossing_closed_under_meet(self):
        for n in range(1, 6):
            ncs = enumerate_noncrossing(n)
            for a in ncs:
                for b in ncs:
                    assert a.meet(b).is_noncrossing()

    def test_distributivity_fails_in_partition_lattice(self):
        # The compatibility relation meet(a, join(b,c)) == join(meet(a,b), meet(a,c))
        # does not hold in the full partition lattice; documented counterexample.
        a, b, c = P("{{1,2},{3}}"), P("{{1,3},{2}}"), P("{{2,3},{1}}")
        lhs = a.meet(b.join(c))
        rhs = a.meet(b).join(a.meet(c))
        assert lhs == a
        assert rhs == SetPartition.finest(3)
        assert lhs != rhs


class TestEnumeration:
    def test_singleton_ground_set(self):
        assert enumerate_noncrossing(1) == [SetPartition.coarsest(1)]

    def test_empty_ground_set_rejected(self):
        with pytest.raises(EmptyGroundSet):
            enumerate_noncrossing(0)
        with pytest.raises(EmptyGroundSet):
            enumerate_all(0)

    def test_counts_match_catalan_via_brute_force(self):
        # Independent oracle: filter the full enumeration by the crossing test.
        for n in range(1, 9):
            direct = enumerate_noncrossing(n)
            filtered = [p for p in enumerate_all(n) if p.is_noncrossing()]
            assert len(direct) == catalan(n)
            assert set(direct) == set(filtered)
            assert len(set(direct)) == len(direct)

    def test_all_partitions_counts(self):
        bell = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203}
        for n, count in bell.items():
            assert len(enumerate_all(n)) == count

    def test_canonical_order_frozen_n3(self):
        assert [str(p) for p in enumerate_noncrossing(3)] == [
            "{{1,2,3}}",
            "{{1,2},{3}}",
            "{{1,3},{2}}",
            "{{1},{2,3}}",
            "{{1},{2},{3}}",
        ]

    def test_order_is_restricted_growth_lexicographic(self):
        for n in (3, 4, 5):
            ncs = enumerate_noncrossing(n)
            strings = [p.restricted_growth_string() for p in ncs]
            assert strings == sorted(strings)
            alls = enumerate_all(n)
            all_strings = [p.restricted_growth_string() for p in alls]
            assert all_strings == sorted(all_strings)

    def test_four_elements(self):
        ncs = enumerate_noncrossing(4)
        assert len(ncs) == 14
        assert P("{{1,3},{2,4}}") not in ncs
