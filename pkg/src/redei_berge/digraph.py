"""Digraph model, predicates, generators and the edge-list text format.

A digraph is a vertex count n plus an n x n arc-presence matrix; loops are
allowed and survive complementation.  Arcs are stored as per-row bitmasks
so that predicates reduce to integer bit operations.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from .kernel import CycleClass
from .limits import ENUMERATION_CAP, CapExceededError


class DigraphFormatError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Digraph:
    """Immutable digraph on vertices 0..n-1.

    ``rows[u]`` has bit v set iff (u, v) is an arc.

    >>> d = Digraph(3, [(0, 1), (1, 1), (2, 2)])
    >>> d.has_arc(0, 1), d.has_arc(1, 0)
    (True, False)
    >>> sorted(d.complement().arcs())
    [(0, 0), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "Digraph":
        """Build directly from per-row out-neighbour bitmasks."""
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        mask = (1 << n) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row bitmask has bits outside 0..n-1")
        d = cls.__new__(cls)
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "rows", tuple(rows))
        return d

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Digraph is immutable")

    def __reduce__(self):
        return (Digraph.from_rows, (self.n, self.rows))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Arcs in row-major order."""
        for u in range(self.n):
            row = self.rows[u]
            while row:
                low = row & -row
                yield (u, low.bit_length() - 1)
                row ^= low

    @property
    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    @property
    def arc_mask(self) -> int:
        """All arcs packed into one n*n-bit integer, bit u*n+v for arc (u, v)."""
        mask = 0
        for u, row in enumerate(self.rows):
            mask |= row << (u * self.n)
        return mask

    def complement(self) -> "Digraph":
        """Digraph on the same vertices whose arcs are exactly the non-arcs."""
        full = (1 << self.n) - 1
        return Digraph.from_rows(self.n, tuple(r ^ full for r in self.rows))

    def without_loops(self) -> "Digraph":
        return Digraph.from_rows(
            self.n, tuple(r & ~(1 << u) for u, r in enumerate(self.rows))
        )

    def is_tournament(self) -> bool:
        """No loops, and each unordered pair carries exactly one arc."""
        for u in range(self.n):
            if self.has_arc(u, u):
                return False
            for v in range(u + 1, self.n):
                if self.has_arc(u, v) == self.has_arc(v, u):
                    return False
        return True

    def is_two_cycle_free(self) -> bool:
        """No distinct u, v with both (u, v) and (v, u) present; loops allowed."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.has_arc(u, v) and self.has_arc(v, u):
                    return False
        return True

    def is_path(self, verts: Sequence[int]) -> bool:
        """Nonempty tuple of distinct vertices whose consecutive pairs are arcs."""
        verts = tuple(verts)
        if not verts or len(set(verts)) != len(verts):
            return False
        if not all(0 <= v < self.n for v in verts):
            return False
        return all(self.has_arc(verts[i], verts[i + 1]) for i in range(len(verts) - 1))

    def is_cycle(self, cycle: CycleClass) -> bool:
        """True iff every cyclic arc of the class is an arc of this digraph."""
        return all(self.has_arc(u, v) for u, v in cycle.carcs())

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        """Subdigraph induced on ``vertices``, relabelled to 0..k-1 in sorted order."""
        order = sorted(set(vertices))
        if any(not 0 <= v < self.n for v in order):
            raise ValueError("vertex outside range")
        index = {v: i for i, v in enumerate(order)}
        arcs = [
            (index[u], index[v])
            for u in order
            for v in order
            if self.has_arc(u, v)
        ]
        return Digraph(len(order), arcs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash(("Digraph", self.n, self.rows))

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {sorted(self.arcs())!r})"


def enumerate_digraphs(
    n: int, loops: bool = True, cap: int = ENUMERATION_CAP
) -> Iterator[Digraph]:
    """All digraphs on n vertices, in binary counting order.

    The arc positions are ordered row-major; digraph number i contains the
    j-th position iff bit j of i is set.  Yields 2^(n^2) digraphs with
    loops allowed, 2^(n(n-1)) without.
    """
    positions = [
        (u, v) for u in range(n) for v in range(n) if loops or u != v
    ]
    total = 1 << len(positions)
    if total > cap:
        raise CapExceededError(
            f"{total} digraphs on {n} vertices exceeds the cap of {cap}"
        )
    for index in range(total):
        yield Digraph(
            n, (positions[j] for j in range(len(positions)) if index >> j & 1)
        )


def enumerate_tournaments(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Digraph]:
    """All 2^(n(n-1)/2) tournaments on n vertices, in binary counting order.

    Unordered pairs {u, v} with u < v are ordered lexicographically; bit j
    of the index set means the j-th pair is oriented u -> v, clear means
    v -> u.
    """
    pairs = list(itertools.combinations(range(n), 2))
    total = 1 << len(pairs)
    if total > cap:
        raise CapExceededError(
            f"{total} tournaments on {n} vertices exceeds the cap of {cap}"
        )
    for index in range(total):
        yield Digraph(
            n,
            (
                (u, v) if index >> j & 1 else (v, u)
                for j, (u, v) in enumerate(pairs)
            ),
        )


def random_digraph(
    n: int, arc_probability: float = 0.5, seed: int | None = None
) -> Digraph:
    """Digraph with each of the n^2 possible arcs (loops included) present
    independently with the given probability.  Deterministic per seed."""
    return _random_digraph(random.Random(seed), n, arc_probability)


def random_tournament(n: int, seed: int | None = None) -> Digraph:
    """Uniformly random tournament; deterministic per seed."""
    return _random_tournament(random.Random(seed), n)


def _random_digraph(rng: random.Random, n: int, arc_probability: float) -> Digraph:
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError(f"arc probability {arc_probability} outside [0, 1]")
    return Digraph(
        n,
        (
            (u, v)
            for u in range(n)
            for v in range(n)
            if rng.random() < arc_probability
        ),
    )


def _random_tournament(rng: random.Random, n: int) -> Digraph:
    return Digraph(
        n,
        (
            (u, v) if rng.random() < 0.5 else (v, u)
            for u, v in itertools.combinations(range(n), 2)
        ),
    )


def parse_digraph(text: str) -> Digraph:
    """Parse the edge-list format.

    The first non-comment line is the vertex count n; every following
    non-comment line is an arc ``u v`` with 0 <= u, v < n.  ``#`` starts a
    comment, blank lines are ignored, duplicate arcs and repeated headers
    are rejected.  Errors carry the offending line number.
    """
    n: int | None = None
    seen: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise DigraphFormatError(lineno, f"expected vertex count, got {raw!r}")
            try:
                n = int(tokens[0])
            except ValueError:
                raise DigraphFormatError(
                    lineno, f"vertex count is not an integer: {tokens[0]!r}"
                ) from None
            if n < 0:
                raise DigraphFormatError(lineno, f"vertex count {n} is negative")
            continue
        if len(tokens) == 1:
            raise DigraphFormatError(lineno, "duplicate header line")
        if len(tokens) != 2:
            raise DigraphFormatError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise DigraphFormatError(
                lineno, f"arc endpoints are not integers: {raw!r}"
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphFormatError(
                lineno, f"arc ({u}, {v}) outside vertex range 0..{n - 1}"
            )
        if (u, v) in seen:
            raise DigraphFormatError(lineno, f"duplicate arc ({u}, {v})")
        seen.add((u, v))
        arcs.append((u, v))
    if n is None:
        raise DigraphFormatError(1, "missing vertex-count header")
    return Digraph(n, arcs)


def format_digraph(d: Digraph) -> str:
    """Canonical edge-list text: header, then arcs in row-major order."""
    lines = [str(d.n)]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"
