"""Counting machinery behind the power-sum formulas, exposed as
independently testable identities: linear arc sets and path covers, the
functional graph of a permutation, signed inclusion-exclusion sums,
level-respecting listings, and the cycle-type monomial sum.

The routines here deliberately favour direct enumeration over cleverness;
they are the oracles the rest of the package is checked against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .digraph import Digraph
from .hamilton import count_hamiltonian_paths
from .kernel import Permutation
from .limits import (
    ENUMERATION_CAP,
    FACTORIAL_CAP,
    SUBSET_CAP,
    CapExceededError,
)
from .polynomials import MonomialPolynomial


@dataclass(frozen=True)
class ArcSet:
    """A set of ordered vertex pairs on 0..n-1."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not isinstance(self.pairs, frozenset):
            object.__setattr__(self, "pairs", frozenset(self.pairs))
        for u, v in self.pairs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"pair ({u}, {v}) outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, pairs: Sequence[tuple[int, int]] = ()) -> "ArcSet":
        return cls(n, frozenset(pairs))


def path_cover_of(arc_set: ArcSet) -> tuple[tuple[int, ...], ...] | None:
    """The unique path cover whose arc set equals ``arc_set``, or None.

    A set of pairs is the arc set of a path cover iff every vertex has
    in-degree and out-degree at most 1 and no directed cycle is present.
    Vertices on no pair become singleton paths.  Paths come out ordered by
    their first vertex.
    """
    n = arc_set.n
    succ = [-1] * n
    pred = [-1] * n
    for u, v in arc_set.pairs:
        if succ[u] != -1 or pred[v] != -1:
            return None  # out- or in-degree above 1
        succ[u] = v
        pred[v] = u
    paths = []
    covered = 0
    for v in range(n):
        if pred[v] != -1:
            continue  # not the start of a chain
        chain = [v]
        while succ[chain[-1]] != -1:
            chain.append(succ[chain[-1]])
        covered += len(chain)
        paths.append(tuple(chain))
    if covered != n:
        return None  # leftover vertices sit on directed cycles
    return tuple(paths)


def is_linear(arc_set: ArcSet) -> bool:
    """True iff the pairs form the arc set of some path cover."""
    return path_cover_of(arc_set) is not None


def _path_covers(vertices: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    # every path cover once: the block containing the first vertex is chosen,
    # then the rest is covered recursively
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    for k in range(len(rest) + 1):
        for others in itertools.combinations(rest, k):
            chosen = set(others)
            remaining = tuple(v for v in rest if v not in chosen)
            for block in itertools.permutations((first, *others)):
                for tail in _path_covers(remaining):
                    yield (block, *tail)


def is_arc_set_of_path_cover(arc_set: ArcSet) -> bool:
    """Exhaustive-search form of :func:`is_linear`: scan all path covers of
    the vertex set and compare arc sets.  Only for small n."""
    if arc_set.n > FACTORIAL_CAP:
        raise CapExceededError(
            f"path-cover search on {arc_set.n} vertices exceeds the cap"
        )
    target = arc_set.pairs
    for cover in _path_covers(tuple(range(arc_set.n))):
        arcs = frozenset(
            (path[i], path[i + 1]) for path in cover for i in range(len(path) - 1)
        )
        if arcs == target:
            return True
    return False


def functional_graph(sigma: Permutation) -> ArcSet:
    """The n pairs (v, sigma(v)); equals the union of the cyclic arc sets
    of the cycles of sigma."""
    return ArcSet.of(sigma.n, [(v, sigma(v)) for v in range(sigma.n)])


def count_listings_containing(arc_set: ArcSet) -> int:
    """Number of listings of 0..n-1 whose consecutive-pair set contains
    every given pair, by direct enumeration.

    Equals (number of paths in the cover)! when the set is linear, and 0
    otherwise.
    """
    n = arc_set.n
    if n > FACTORIAL_CAP:
        raise CapExceededError(f"{n}! listings exceeds the enumeration cap")
    pairs = arc_set.pairs
    total = 0
    for listing in itertools.permutations(range(n)):
        position = {v: i for i, v in enumerate(listing)}
        if all(position[v] == position[u] + 1 for u, v in pairs):
            total += 1
    return total


def count_perms_containing(arc_set: ArcSet) -> int:
    """Number of permutations sigma with sigma(u) = v for every given pair
    (u, v), by direct enumeration."""
    n = arc_set.n
    if n > FACTORIAL_CAP:
        raise CapExceededError(f"{n}! permutations exceeds the enumeration cap")
    pairs = arc_set.pairs
    total = 0
    for images in itertools.permutations(range(n)):
        if all(images[u] == v for u, v in pairs):
            total += 1
    return total


def signed_linear_sum(d: Digraph) -> int:
    """Sum over the linear subsets F of the arc set of (-1)^|F| times the
    number of permutations whose functional graph contains F.

    The linear subsets are enumerated by backtracking (a linear subset
    contains no loops, keeps degrees at most 1 and closes no cycle); the
    permutation count for a linear F is (n - |F|)!, the factorial of its
    cover size.  The whole sum equals the number of Hamiltonian paths of
    the complement.
    """
    arcs = [(u, v) for u, v in d.arcs() if u != v]
    if len(arcs) > SUBSET_CAP:
        raise CapExceededError(
            f"{len(arcs)} arcs exceeds the subset-enumeration cap of {SUBSET_CAP}"
        )
    n = d.n
    factorial = [math.factorial(k) for k in range(n + 1)]
    succ = [-1] * n
    pred = [-1] * n
    other_end = list(range(n))
    total = factorial[n]  # the empty subset

    def extend(start: int, size: int, sign: int) -> None:
        nonlocal total
        for j in range(start, len(arcs)):
            u, v = arcs[j]
            if succ[u] != -1 or pred[v] != -1 or other_end[u] == v:
                continue  # degree violation or closes a cycle
            head, tail = other_end[u], other_end[v]
            succ[u] = v
            pred[v] = u
            other_end[head] = tail
            other_end[tail] = head
            total += -sign * factorial[n - size - 1]
            extend(j + 1, size + 1, -sign)
            succ[u] = -1
            pred[v] = -1
            other_end[head] = u
            other_end[tail] = v

    extend(0, 0, 1)
    return total


def signed_sum_per_perm(d: Digraph, sigma: Permutation) -> int:
    """Sum of (-1)^|F| over the linear subsets F of the intersection of the
    functional graph of sigma with the arc set, by direct enumeration of
    all subsets.

    Evaluates to (-1)^(excess of the digraph-cycles of sigma) when every
    cycle of sigma lies in the digraph or its complement, and to 0
    otherwise.
    """
    if sigma.n != d.n:
        raise ValueError(f"permutation on {sigma.n} vertices, digraph on {d.n}")
    common = [(u, sigma(u)) for u in range(d.n) if d.has_arc(u, sigma(u))]
    if len(common) > SUBSET_CAP:
        raise CapExceededError(f"{len(common)} arcs exceeds the subset cap")
    total = 0
    for r in range(len(common) + 1):
        for subset in itertools.combinations(common, r):
            if is_linear(ArcSet.of(d.n, subset)):
                total += (-1) ** r
    return total


def level_subdigraph(d: Digraph, levels: Sequence[int], level: int) -> Digraph:
    """Subdigraph induced on the vertices of the given level, relabelled to
    0..k-1 in increasing vertex order."""
    if len(levels) != d.n:
        raise ValueError(f"expected {d.n} levels, got {len(levels)}")
    return d.induced(v for v in range(d.n) if levels[v] == level)


def count_friendly_listings(d: Digraph, levels: Sequence[int]) -> int:
    """Number of listings whose levels are weakly increasing and which rise
    strictly in level across every arc, by direct enumeration.

    Equals the product, over the distinct levels, of the Hamiltonian-path
    counts of the complements of the level subdigraphs.
    """
    if len(levels) != d.n:
        raise ValueError(f"expected {d.n} levels, got {len(levels)}")
    if any(not isinstance(x, int) or x < 1 for x in levels):
        raise ValueError("levels must be positive integers")
    if d.n > FACTORIAL_CAP:
        raise CapExceededError(f"{d.n}! listings exceeds the enumeration cap")
    total = 0
    for listing in itertools.permutations(range(d.n)):
        ok = True
        for i in range(d.n - 1):
            a, b = levels[listing[i]], levels[listing[i + 1]]
            if a > b:
                ok = False
                break
            if a == b and d.has_arc(listing[i], listing[i + 1]):
                ok = False
                break
        if ok:
            total += 1
    return total


def friendly_product(d: Digraph, levels: Sequence[int]) -> int:
    """The product side of the level decomposition: over each occupied
    level, the Hamiltonian paths of the complemented level subdigraph."""
    product = 1
    for level in sorted(set(levels)):
        sub = level_subdigraph(d, levels, level)
        product *= count_hamiltonian_paths(sub.complement()).value
    return product


def polya_sum(sigma: Permutation, num_vars: int) -> MonomialPolynomial:
    """Sum of the monomials x_{f(0)} * ... * x_{f(n-1)} over the maps f
    into {1..m} that are constant on every cycle of sigma.

    Equals the monomial expansion of p_{type sigma} in m variables.
    """
    cycles = sigma.cycles
    if num_vars ** max(len(cycles), 1) > ENUMERATION_CAP:
        raise CapExceededError(
            f"{num_vars}^{len(cycles)} cycle colourings exceeds the cap"
        )
    terms: dict[tuple[int, ...], int] = {}
    for values in itertools.product(range(1, num_vars + 1), repeat=len(cycles)):
        expo = [0] * num_vars
        for cyc, value in zip(cycles, values):
            expo[value - 1] += len(cyc)
        key = tuple(expo)
        terms[key] = terms.get(key, 0) + 1
    return MonomialPolynomial(num_vars, terms)


def signed_subset_sum(size: int) -> int:
    """Sum of (-1)^|F| over all subsets F of a set of the given size,
    computed by enumeration; 1 for the empty set and 0 otherwise."""
    if size < 0:
        raise ValueError(f"size must be nonnegative, got {size}")
    if size > SUBSET_CAP:
        raise CapExceededError(f"2^{size} subsets exceeds the cap of 2^{SUBSET_CAP}")
    total = 0
    for index in range(1 << size):
        total += -1 if index.bit_count() & 1 else 1
    return total
