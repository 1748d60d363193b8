import itertools
import random

import pytest

from conftest import FIVE_TOURNAMENT, REMARK, THREE_LOOP
from redei_berge import (
    CapExceededError,
    CycleClass,
    Digraph,
    DigraphFormatError,
    enumerate_digraphs,
    enumerate_tournaments,
    format_digraph,
    parse_digraph,
    random_digraph,
    random_tournament,
)


class TestComplement:
    def test_three_vertex_example(self):
        comp = THREE_LOOP.complement()
        assert set(comp.arcs()) == {
            (0, 0),
            (0, 2),
            (1, 0),
            (1, 2),
            (2, 0),
            (2, 1),
        }

    def test_complete_becomes_arcless(self):
        complete = Digraph(3, [(u, v) for u in range(3) for v in range(3)])
        assert complete.complement().arc_count == 0

    def test_empty(self):
        assert Digraph(0).complement() == Digraph(0)

    def test_involution_random_sample(self):
        rng = random.Random(11)
        for _ in range(1000):
            n = rng.randint(0, 5)
            d = random_digraph(n, rng.random(), seed=rng.getrandbits(32))
            assert d.complement().complement() == d


class TestPredicates:
    def test_five_tournament(self):
        assert FIVE_TOURNAMENT.is_tournament()

    def test_example_digraphs_are_not_tournaments(self):
        assert not THREE_LOOP.is_tournament()
        assert not THREE_LOOP.complement().is_tournament()

    def test_tiny_tournaments(self):
        assert Digraph(0).is_tournament()
        assert Digraph(1).is_tournament()
        assert not Digraph(1, [(0, 0)]).is_tournament()

    def test_two_cycle_free(self):
        assert not REMARK.is_two_cycle_free()
        assert Digraph(3).is_two_cycle_free()
        assert Digraph(2, [(0, 0), (1, 1), (0, 1)]).is_two_cycle_free()

    def test_tournament_implies_two_cycle_free_exhaustive(self):
        for n in range(5):
            for d in enumerate_digraphs(n):
                if d.is_tournament():
                    assert d.is_two_cycle_free()
                    assert all(not d.has_arc(v, v) for v in range(n))

    def test_paths_in_example(self):
        assert not THREE_LOOP.is_path((0, 1, 2))  # (1, 2) is not an arc
        assert THREE_LOOP.complement().is_path((1, 2, 0))
        assert THREE_LOOP.is_path((0, 1))
        assert THREE_LOOP.is_path((2,))
        assert not THREE_LOOP.is_path((0, 1, 1))  # repeated vertex
        assert not THREE_LOOP.is_path(())

    def test_cycles_of_example_digraph(self):
        cycles = {
            gamma
            for k in range(1, 4)
            for verts in itertools.permutations(range(3), k)
            for gamma in [CycleClass(verts)]
            if THREE_LOOP.is_cycle(gamma)
        }
        assert cycles == {CycleClass((1,)), CycleClass((2,))}

    def test_cycles_of_example_complement(self):
        comp = THREE_LOOP.complement()
        cycles = {
            gamma
            for k in range(1, 4)
            for verts in itertools.permutations(range(3), k)
            for gamma in [CycleClass(verts)]
            if comp.is_cycle(gamma)
        }
        assert cycles == {
            CycleClass((0,)),
            CycleClass((0, 2)),
            CycleClass((1, 2)),
            CycleClass((1, 0, 2)),
        }

    def test_tournament_cycle_and_reversal_never_both(self):
        for n in range(5):
            for d in enumerate_tournaments(n):
                for k in range(2, n + 1):
                    for verts in itertools.permutations(range(n), k):
                        gamma = CycleClass(verts)
                        assert not (
                            d.is_cycle(gamma) and d.is_cycle(gamma.reversal())
                        )


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_tournaments(3)) == 8
        assert sum(1 for _ in enumerate_digraphs(2, loops=True)) == 16
        assert sum(1 for _ in enumerate_tournaments(5)) == 1024
        assert sum(1 for _ in enumerate_digraphs(2, loops=False)) == 4

    def test_duplicate_free(self):
        seen = set(enumerate_digraphs(2))
        assert len(seen) == 16
        assert len(set(enumerate_tournaments(4))) == 64

    def test_all_enumerated_tournaments_qualify(self):
        assert all(d.is_tournament() for d in enumerate_tournaments(4))

    def test_binary_counting_order(self):
        first, second = itertools.islice(enumerate_digraphs(2), 2)
        assert first.arc_count == 0
        assert set(second.arcs()) == {(0, 0)}

    def test_cap(self):
        with pytest.raises(CapExceededError):
            list(enumerate_digraphs(5, cap=100))
        with pytest.raises(CapExceededError):
            list(enumerate_digraphs(6))  # 2^36 instances


class TestRandomGeneration:
    def test_deterministic_per_seed(self):
        assert random_digraph(6, 0.5, seed=42) == random_digraph(6, 0.5, seed=42)
        assert random_tournament(7, seed=3) == random_tournament(7, seed=3)

    def test_random_tournament_is_tournament(self):
        for seed in range(20):
            assert random_tournament(6, seed=seed).is_tournament()

    def test_probability_extremes(self):
        assert random_digraph(4, 0.0, seed=1).arc_count == 0
        assert random_digraph(4, 1.0, seed=1).arc_count == 16
        with pytest.raises(ValueError):
            random_digraph(3, 1.5, seed=0)


class TestTextFormat:
    def test_parse_example(self):
        assert parse_digraph("3\n0 1\n1 1\n2 2\n") == THREE_LOOP

    def test_parse_empty_digraph(self):
        assert parse_digraph("0\n") == Digraph(0)

    def test_round_trip(self):
        text = "2\n0 1\n"
        assert format_digraph(parse_digraph(text)) == text

    def test_round_trip_canonical_on_examples(self):
        for d in (THREE_LOOP, REMARK, FIVE_TOURNAMENT):
            assert parse_digraph(format_digraph(d)) == d

    def test_comments_and_blank_lines(self):
        text = "# a digraph\n\n3  # header\n0 1\n # comment\n1 1\n2 2\n"
        assert parse_digraph(text) == THREE_LOOP

    def test_malformed_line(self):
        with pytest.raises(DigraphFormatError) as err:
            parse_digraph("2\n0 1 2\n")
        assert err.value.line == 2

    def test_non_integer(self):
        with pytest.raises(DigraphFormatError):
            parse_digraph("2\n0 x\n")

    def test_out_of_range(self):
        with pytest.raises(DigraphFormatError) as err:
            parse_digraph("2\n0 2\n")
        assert err.value.line == 2

    def test_duplicate_arc(self):
        with pytest.raises(DigraphFormatError) as err:
            parse_digraph("3\n0 1\n0 1\n")
        assert err.value.line == 3

    def test_duplicate_header(self):
        with pytest.raises(DigraphFormatError) as err:
            parse_digraph("3\n0 1\n3\n")
        assert err.value.line == 3

    def test_missing_header(self):
        with pytest.raises(DigraphFormatError):
            parse_digraph("# only comments\n")


class TestInduced:
    def test_relabels_in_sorted_order(self):
        sub = FIVE_TOURNAMENT.induced([1, 3, 4])
        # kept arcs: (3,1) -> (1,0), (3,4) -> (1,2), (1,4) -> (0,2)
        assert set(sub.arcs()) == {(1, 0), (1, 2), (0, 2)}

    def test_keeps_loops(self):
        sub = THREE_LOOP.induced([1, 2])
        assert set(sub.arcs()) == {(0, 0), (1, 1)}
