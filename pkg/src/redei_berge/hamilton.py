"""Exact Hamiltonian-path and simple-cycle counting, plus the classical
congruence checks (parity of tournament path counts, the mod-4 refinement,
and the parity link between a digraph and its complement).

Loops never matter here: a path visits distinct vertices, so diagonal arcs
are dropped before counting.  The zero-vertex digraph has exactly one
Hamiltonian path (the empty list) by convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .limits import CYCLE_ENUM_CAP, DP_VERTEX_CAP, CapExceededError


@dataclass(frozen=True)
class HampCount:
    """An exact Hamiltonian-path count together with the method that
    produced it; the two methods agree wherever both run."""

    value: int
    method: str


def count_hamiltonian_paths(d: Digraph, method: str = "dp") -> HampCount:
    """Number of directed paths visiting every vertex exactly once.

    ``method`` is ``"dp"`` (bitmask dynamic programming over
    (visited-set, last-vertex) states) or ``"backtracking"`` (depth-first
    extension of partial paths).

    >>> count_hamiltonian_paths(Digraph(3, [(0, 1), (1, 1), (2, 2)])).value
    0
    >>> count_hamiltonian_paths(Digraph(3, [(0, 1), (1, 1), (2, 2)]).complement()).value
    4
    """
    if method not in ("dp", "backtracking"):
        raise ValueError(f"unknown method {method!r}")
    if d.n > DP_VERTEX_CAP:
        raise CapExceededError(
            f"{d.n} vertices exceeds the counting cap of {DP_VERTEX_CAP}"
        )
    value = _count_dp(d) if method == "dp" else _count_backtracking(d)
    return HampCount(value, method)


def _loopless_rows(d: Digraph) -> list[int]:
    return [d.rows[u] & ~(1 << u) for u in range(d.n)]


def _count_dp(d: Digraph) -> int:
    n = d.n
    if n == 0:
        return 1
    rows = _loopless_rows(d)
    full = (1 << n) - 1
    dp = [0] * ((full + 1) * n)
    for v in range(n):
        dp[(1 << v) * n + v] = 1
    for mask in range(1, full + 1):
        base = mask * n
        rem = mask
        while rem:
            low = rem & -rem
            last = low.bit_length() - 1
            rem ^= low
            count = dp[base + last]
            if not count:
                continue
            avail = rows[last] & ~mask
            while avail:
                bit = avail & -avail
                avail ^= bit
                dp[(mask | bit) * n + bit.bit_length() - 1] += count
    return sum(dp[full * n + v] for v in range(n))


def _count_backtracking(d: Digraph) -> int:
    n = d.n
    if n == 0:
        return 1
    rows = _loopless_rows(d)
    full = (1 << n) - 1
    total = 0

    def extend(last: int, visited: int) -> None:
        nonlocal total
        if visited == full:
            total += 1
            return
        nbrs = rows[last] & ~visited
        while nbrs:
            bit = nbrs & -nbrs
            nbrs ^= bit
            extend(bit.bit_length() - 1, visited | bit)

    for start in range(n):
        extend(start, 1 << start)
    return total


def count_nontrivial_odd_cycles(d: Digraph) -> int:
    """Number of rotation classes of odd length > 1 all of whose cyclic
    arcs are present.

    Each class is counted once: the search roots every cycle at its minimal
    vertex and only walks through larger vertices.
    """
    if d.n > CYCLE_ENUM_CAP:
        raise CapExceededError(
            f"{d.n} vertices exceeds the cycle-enumeration cap of {CYCLE_ENUM_CAP}"
        )
    rows = d.rows
    total = 0
    for s in range(d.n):
        larger = -(1 << (s + 1))

        def walk(u: int, visited: int, length: int) -> None:
            nonlocal total
            if length >= 3 and length % 2 == 1 and rows[u] >> s & 1:
                total += 1
            nbrs = rows[u] & larger & ~visited
            while nbrs:
                bit = nbrs & -nbrs
                nbrs ^= bit
                walk(bit.bit_length() - 1, visited | bit, length + 1)

        walk(s, 1 << s, 1)
    return total


def verify_redei(d: Digraph) -> dict:
    """Check that a tournament has an odd number of Hamiltonian paths."""
    if not d.is_tournament():
        raise ValueError("input digraph is not a tournament")
    hamps = count_hamiltonian_paths(d).value
    return {
        "theorem": "redei",
        "n": d.n,
        "hamps": str(hamps),
        "hamps_mod2": hamps % 2,
        "pass": hamps % 2 == 1,
    }


def verify_mod4(d: Digraph) -> dict:
    """Check that a tournament's Hamiltonian-path count is congruent to
    1 + 2 * (number of nontrivial odd cycles) modulo 4."""
    if not d.is_tournament():
        raise ValueError("input digraph is not a tournament")
    hamps = count_hamiltonian_paths(d).value
    odd_cycles = count_nontrivial_odd_cycles(d)
    lhs = hamps % 4
    rhs = (1 + 2 * odd_cycles) % 4
    return {
        "theorem": "mod4",
        "n": d.n,
        "hamps": str(hamps),
        "odd_cycles": odd_cycles,
        "lhs_mod4": lhs,
        "rhs_mod4": rhs,
        "pass": lhs == rhs,
    }


def verify_berge(d: Digraph) -> dict:
    """Check that a digraph and its complement have Hamiltonian-path counts
    of the same parity."""
    hamps = count_hamiltonian_paths(d).value
    hamps_complement = count_hamiltonian_paths(d.complement()).value
    return {
        "theorem": "berge",
        "n": d.n,
        "hamps": str(hamps),
        "hamps_complement": str(hamps_complement),
        "lhs_mod2": hamps % 2,
        "rhs_mod2": hamps_complement % 2,
        "pass": hamps % 2 == hamps_complement % 2,
    }
