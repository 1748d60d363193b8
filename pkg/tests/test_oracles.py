import itertools
import math
import random

import pytest

from conftest import THREE_LOOP
from redei_berge import (
    ArcSet,
    CapExceededError,
    Digraph,
    Permutation,
    PowerSumPolynomial,
    count_friendly_listings,
    count_hamiltonian_paths,
    count_listings_containing,
    count_perms_containing,
    enumerate_digraphs,
    friendly_product,
    functional_graph,
    is_arc_set_of_path_cover,
    is_linear,
    level_subdigraph,
    path_cover_of,
    polya_sum,
    random_digraph,
    redei_berge_powersum,
    signed_linear_sum,
    signed_subset_sum,
    signed_sum_per_perm,
)

# the 8-vertex example: a 4-path cover {(0,3,2), (1,7), (4), (6,5)}
COVER_EXAMPLE = ArcSet.of(8, [(0, 3), (3, 2), (1, 7), (6, 5)])


def random_linear_set(rng: random.Random, n: int) -> ArcSet:
    verts = list(range(n))
    rng.shuffle(verts)
    arcs = []
    while verts:
        size = rng.randint(1, len(verts))
        block, verts = verts[:size], verts[size:]
        arcs.extend(zip(block, block[1:]))
    return ArcSet.of(n, arcs)


class TestLinearity:
    def test_cover_example_is_linear(self):
        assert is_linear(COVER_EXAMPLE)
        cover = path_cover_of(COVER_EXAMPLE)
        assert set(cover) == {(0, 3, 2), (1, 7), (4,), (6, 5)}

    def test_cycle_is_not_linear(self):
        assert not is_linear(ArcSet.of(3, [(0, 1), (1, 2), (2, 0)]))
        assert path_cover_of(ArcSet.of(1, [(0, 0)])) is None

    def test_empty_set_is_linear(self):
        assert path_cover_of(ArcSet.of(3)) == ((0,), (1,), (2,))

    def test_degree_violations(self):
        assert not is_linear(ArcSet.of(3, [(0, 1), (0, 2)]))
        assert not is_linear(ArcSet.of(3, [(0, 2), (1, 2)]))

    def test_criteria_agree_random(self):
        rng = random.Random(61)
        for _ in range(500):
            n = rng.randint(2, 6)
            size = rng.randint(0, min(8, n * n))
            pairs = rng.sample(
                [(u, v) for u in range(n) for v in range(n)], size
            )
            arc_set = ArcSet.of(n, pairs)
            assert is_linear(arc_set) == is_arc_set_of_path_cover(arc_set)

    def test_subsets_of_linear_sets_are_linear(self):
        rng = random.Random(67)
        for _ in range(200):
            n = rng.randint(1, 8)
            linear = random_linear_set(rng, n)
            assert is_linear(linear)
            subset = [a for a in linear.pairs if rng.random() < 0.5]
            assert is_linear(ArcSet.of(n, subset))


class TestFunctionalGraph:
    def test_example(self):
        sigma = Permutation([1, 2, 0, 4, 3, 5])  # cycles (0,1,2)(3,4)(5)
        assert functional_graph(sigma).pairs == frozenset(
            {(0, 1), (1, 2), (2, 0), (3, 4), (4, 3), (5, 5)}
        )

    def test_identity_gives_all_loops(self):
        assert functional_graph(Permutation.identity(3)).pairs == frozenset(
            {(0, 0), (1, 1), (2, 2)}
        )

    def test_transposition(self):
        assert functional_graph(Permutation([1, 0])).pairs == frozenset(
            {(0, 1), (1, 0)}
        )

    def test_union_of_cycle_arcs(self):
        for images in itertools.permutations(range(4)):
            sigma = Permutation(images)
            union = frozenset().union(*(c.carcs() for c in sigma.cycles))
            assert functional_graph(sigma).pairs == union


class TestContainmentCounts:
    def test_empty_set_counts_everything(self):
        for n in range(5):
            empty = ArcSet.of(n)
            assert count_listings_containing(empty) == math.factorial(n)
            assert count_perms_containing(empty) == math.factorial(n)

    def test_full_path_pins_one_listing(self):
        path = ArcSet.of(4, [(2, 0), (0, 3), (3, 1)])
        assert count_listings_containing(path) == 1
        assert count_perms_containing(path) == 1

    def test_cover_example_counts(self):
        assert count_listings_containing(COVER_EXAMPLE) == 24
        assert count_perms_containing(COVER_EXAMPLE) == 24

    def test_nonlinear_has_no_listings(self):
        cyc = ArcSet.of(3, [(0, 1), (1, 2), (2, 0)])
        assert count_listings_containing(cyc) == 0
        # ...but a permutation can still contain it: sigma is pinned to the
        # 3-cycle, and any leftover vertex is fixed
        assert count_perms_containing(cyc) == 1
        assert count_perms_containing(ArcSet.of(4, [(0, 1), (1, 2), (2, 0)])) == 1

    def test_factorial_of_cover_size_random(self):
        rng = random.Random(71)
        for _ in range(50):
            n = rng.randint(1, 6)
            linear = random_linear_set(rng, n)
            k = len(path_cover_of(linear))
            assert count_listings_containing(linear) == math.factorial(k)
            assert count_perms_containing(linear) == math.factorial(k)


class TestSignedLinearSum:
    def test_arcless_digraph(self):
        for n in range(6):
            assert signed_linear_sum(Digraph(n)) == math.factorial(n)

    def test_example_digraph(self):
        assert signed_linear_sum(THREE_LOOP) == 4

    def test_equals_complement_hamps_exhaustive_n3(self):
        for n in range(4):
            for d in enumerate_digraphs(n):
                assert (
                    signed_linear_sum(d)
                    == count_hamiltonian_paths(d.complement()).value
                )

    def test_equals_complement_hamps_random(self):
        rng = random.Random(73)
        for _ in range(100):
            n = rng.randint(4, 5)
            d = random_digraph(n, 0.5, seed=rng.getrandbits(32))
            assert (
                signed_linear_sum(d)
                == count_hamiltonian_paths(d.complement()).value
            )

    def test_against_fully_brute_evaluation(self):
        # same sum with the permutation count done by raw enumeration
        rng = random.Random(79)
        for _ in range(30):
            n = rng.randint(0, 3)
            d = random_digraph(n, 0.6, seed=rng.getrandbits(32))
            arcs = [a for a in d.arcs()]
            brute = 0
            for r in range(len(arcs) + 1):
                for subset in itertools.combinations(arcs, r):
                    arc_set = ArcSet.of(n, subset)
                    if is_linear(arc_set):
                        brute += (-1) ** r * count_perms_containing(arc_set)
            assert signed_linear_sum(d) == brute


class TestSignedSumPerPerm:
    def test_identity_on_loop_free(self):
        d = Digraph(4, [(0, 1), (1, 2)])
        assert signed_sum_per_perm(d, Permutation.identity(4)) == 1

    def test_single_cycle_of_the_digraph(self):
        for k in range(2, 6):
            d = Digraph(k, [(i, (i + 1) % k) for i in range(k)])
            sigma = Permutation.from_cycles(k, [tuple(range(k))])
            assert signed_sum_per_perm(d, sigma) == (-1) ** (k - 1)

    def test_cycle_neither_in_digraph_nor_complement(self):
        d = Digraph(3, [(0, 1)])
        sigma = Permutation.from_cycles(3, [(0, 1)])
        assert signed_sum_per_perm(d, sigma) == 0

    def test_case_formula_exhaustive_n3(self):
        from redei_berge import d_cycle_excess, mixed_cycle_permutations

        for n in range(4):
            for d in enumerate_digraphs(n):
                members = set(mixed_cycle_permutations(d))
                for images in itertools.permutations(range(n)):
                    sigma = Permutation(images)
                    expected = (
                        (-1) ** d_cycle_excess(d, sigma) if sigma in members else 0
                    )
                    assert signed_sum_per_perm(d, sigma) == expected

    def test_rebuilds_powersum_form_exhaustive_n3(self):
        for n in range(4):
            for d in enumerate_digraphs(n):
                terms: dict[tuple[int, ...], int] = {}
                for images in itertools.permutations(range(n)):
                    sigma = Permutation(images)
                    weight = signed_sum_per_perm(d, sigma)
                    if weight:
                        key = sigma.cycle_type
                        terms[key] = terms.get(key, 0) + weight
                assert PowerSumPolynomial(terms) == redei_berge_powersum(d)


class TestFriendlyListings:
    def test_constant_levels_count_complement_hamps(self):
        for d in (THREE_LOOP, Digraph(4, [(0, 1), (2, 3)])):
            assert (
                count_friendly_listings(d, [1] * d.n)
                == count_hamiltonian_paths(d.complement()).value
            )

    def test_injective_levels_pin_one_listing(self):
        rng = random.Random(83)
        for _ in range(20):
            n = rng.randint(1, 5)
            d = random_digraph(n, 0.5, seed=rng.getrandbits(32))
            levels = list(range(1, n + 1))
            rng.shuffle(levels)
            assert count_friendly_listings(d, levels) == 1

    def test_two_level_product_formula(self):
        rng = random.Random(89)
        for _ in range(20):
            d = random_digraph(5, 0.5, seed=rng.getrandbits(32))
            levels = [rng.randint(1, 2) for _ in range(5)]
            assert count_friendly_listings(d, levels) == friendly_product(d, levels)

    def test_product_formula_general_levels(self):
        rng = random.Random(97)
        for _ in range(20):
            n = rng.randint(0, 5)
            d = random_digraph(n, 0.5, seed=rng.getrandbits(32))
            levels = [rng.randint(1, 3) for _ in range(n)]
            assert count_friendly_listings(d, levels) == friendly_product(d, levels)

    def test_level_subdigraph(self):
        levels = [1, 2, 1]
        sub = level_subdigraph(THREE_LOOP, levels, 1)
        assert sub == Digraph(2, [(1, 1)])  # vertices 0, 2 relabelled
        assert level_subdigraph(THREE_LOOP, levels, 3) == Digraph(0)

    def test_rejects_bad_levels(self):
        with pytest.raises(ValueError):
            count_friendly_listings(THREE_LOOP, [1, 2])
        with pytest.raises(ValueError):
            count_friendly_listings(THREE_LOOP, [0, 1, 2])


class TestPolyaSum:
    def test_identity_gives_power_of_linear_form(self):
        e = Permutation.identity(3)
        expected = PowerSumPolynomial({(1, 1, 1): 1}).expand(2)
        assert polya_sum(e, 2) == expected

    def test_single_cycle_gives_power_sum(self):
        sigma = Permutation.from_cycles(4, [(0, 1, 2, 3)])
        assert polya_sum(sigma, 3) == PowerSumPolynomial({(4,): 1}).expand(3)

    def test_three_two_one_cycle_type(self):
        sigma = Permutation([1, 2, 0, 4, 3, 5])
        assert polya_sum(sigma, 3) == PowerSumPolynomial({(3, 2, 1): 1}).expand(3)

    def test_matches_expansion_for_all_of_s4(self):
        for images in itertools.permutations(range(4)):
            sigma = Permutation(images)
            for m in range(1, 5):
                assert polya_sum(sigma, m) == PowerSumPolynomial(
                    {sigma.cycle_type: 1}
                ).expand(m)


class TestSignedSubsetSum:
    def test_small_sizes(self):
        assert signed_subset_sum(0) == 1
        assert signed_subset_sum(1) == 0
        assert signed_subset_sum(5) == 0

    @pytest.mark.parametrize("size", range(13))
    def test_vanishes_except_empty(self, size):
        assert signed_subset_sum(size) == (1 if size == 0 else 0)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            signed_subset_sum(25)
        with pytest.raises(ValueError):
            signed_subset_sum(-1)


class TestArcSetValidation:
    def test_out_of_range_pair(self):
        with pytest.raises(ValueError):
            ArcSet.of(2, [(0, 2)])
