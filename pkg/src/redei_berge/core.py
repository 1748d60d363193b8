"""The Redei--Berge symmetric function of a digraph, by independent routes.

Routes implemented here:

- ``redei_berge_by_definition``: the defining sum of fundamental
  quasisymmetric functions over all n! vertex listings, expanded into
  monomials.
- ``redei_berge_powersum``: the signed power-sum formula, summing
  (-1)^phi(sigma) * p_{type sigma} over the permutations whose every cycle
  lies in the digraph or in its complement.
- ``redei_berge_tournament``: the tournament form, 2^(number of nontrivial
  cycles) * p_{type sigma} over odd-cycle-type permutations whose
  nontrivial cycles all lie in the digraph.
- ``redei_berge_two_cycle_free``: the subtraction-free form for digraphs
  without 2-cycles, dropping permutations with a risky cycle.
- ``deformed_powersum`` / ``deformed_by_definition``: the multiparameter
  deformation driven by a rational weight per ordered vertex pair.

Permutation sweeps enumerate all n! permutations and filter by cycle
predicates; per-n tables of cycle data (as bitmasks) are cached so that
exhaustive sweeps over many digraphs stay fast.
"""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .digraph import Digraph
from .kernel import CycleClass, DescentSet, Permutation
from .limits import FACTORIAL_CAP, CapExceededError
from .polynomials import (
    FundamentalQSym,
    MonomialPolynomial,
    PowerSumPolynomial,
    Rational,
    _coeff,
)


def _check_listing(d: Digraph, listing: Sequence[int]) -> tuple[int, ...]:
    listing = tuple(listing)
    if sorted(listing) != list(range(d.n)):
        raise ValueError(f"not a listing of 0..{d.n - 1}: {listing!r}")
    return listing


def _check_factorial_cap(n: int) -> None:
    if n > FACTORIAL_CAP:
        raise CapExceededError(
            f"{n}! listings/permutations exceeds the cap of {FACTORIAL_CAP}!"
        )


def descent_set(d: Digraph, listing: Sequence[int]) -> DescentSet:
    """Positions i (1-based) where (listing[i-1], listing[i]) is an arc.

    >>> d = Digraph(3, [(0, 1), (1, 1), (2, 2)])
    >>> sorted(descent_set(d, (2, 0, 1)))
    [2]
    """
    listing = _check_listing(d, listing)
    return DescentSet(
        d.n,
        frozenset(
            i for i in range(1, d.n) if d.has_arc(listing[i - 1], listing[i])
        ),
    )


def major_index(d: Digraph, listing: Sequence[int]) -> int:
    """Sum of the descent positions of the listing."""
    return sum(descent_set(d, listing).members)


def descent_distribution(d: Digraph) -> FundamentalQSym:
    """The sum, over all n! listings, of the fundamental quasisymmetric
    function indexed by the listing's descent set.

    This is the Redei--Berge function written in the fundamental basis; the
    coefficient of a descent set counts the listings attaining it.
    """
    _check_factorial_cap(d.n)
    counts: dict[DescentSet, int] = {}
    for listing in itertools.permutations(range(d.n)):
        key = descent_set(d, listing)
        counts[key] = counts.get(key, 0) + 1
    return FundamentalQSym(d.n, counts)


def redei_berge_by_definition(d: Digraph, num_vars: int) -> MonomialPolynomial:
    """Monomial expansion (in the given number of variables) of the defining
    listing sum.  Homogeneous of degree n with nonnegative integer
    coefficients."""
    return descent_distribution(d).expand(num_vars)


class _CycleData(NamedTuple):
    length: int
    mask: int  # cyclic arcs packed as bits u*n+v
    rev_mask: int  # same for the reversed class
    pairs: tuple[tuple[int, int], ...]


class _PermData(NamedTuple):
    images: tuple[int, ...]
    ptype: tuple[int, ...]
    cycles: tuple[_CycleData, ...]


def _perm_data(images: tuple[int, ...], n: int) -> _PermData:
    perm = Permutation(images)
    cycles = []
    for cyc in perm.cycles:
        mask = 0
        for u, v in cyc.carcs():
            mask |= 1 << (u * n + v)
        rev_mask = 0
        for u, v in cyc.reversal().carcs():
            rev_mask |= 1 << (u * n + v)
        cycles.append(_CycleData(len(cyc), mask, rev_mask, tuple(cyc.carcs())))
    return _PermData(images, perm.cycle_type, tuple(cycles))


_PROFILE_CACHE_MAX = 7


@lru_cache(maxsize=None)
def _perm_table(n: int) -> tuple[_PermData, ...]:
    return tuple(
        _perm_data(images, n) for images in itertools.permutations(range(n))
    )


def _iter_perm_data(n: int) -> Iterator[_PermData]:
    _check_factorial_cap(n)
    if n <= _PROFILE_CACHE_MAX:
        yield from _perm_table(n)
    else:
        for images in itertools.permutations(range(n)):
            yield _perm_data(images, n)


def _mixed_phi(data: _PermData, arc_mask: int) -> int | None:
    """If every cycle is a cycle of the digraph or of its complement, the
    total of (length - 1) over the digraph's cycles; otherwise None."""
    phi = 0
    for length, mask, _rev, _pairs in data.cycles:
        inside = mask & arc_mask
        if inside == mask:
            phi += length - 1
        elif inside:
            return None
    return phi


def mixed_cycle_permutations(d: Digraph) -> list[Permutation]:
    """Permutations whose every cycle is a cycle of ``d`` or of its
    complement (a length-1 cycle always is one of the two)."""
    arc_mask = d.arc_mask
    return [
        Permutation(data.images)
        for data in _iter_perm_data(d.n)
        if _mixed_phi(data, arc_mask) is not None
    ]


def d_cycle_permutations(d: Digraph) -> list[Permutation]:
    """Permutations whose every nontrivial cycle is a cycle of ``d``."""
    arc_mask = d.arc_mask
    out = []
    for data in _iter_perm_data(d.n):
        if all(
            length == 1 or mask & arc_mask == mask
            for length, mask, _rev, _pairs in data.cycles
        ):
            out.append(Permutation(data.images))
    return out


def d_cycle_excess(d: Digraph, sigma: Permutation) -> int:
    """Sum of (length - 1) over the cycles of sigma that are cycles of d.

    This is the exponent of -1 attached to sigma in the signed power-sum
    formula.  Length-1 cycles contribute 0 whether or not the loop is
    present, so the value is insensitive to loops.
    """
    if sigma.n != d.n:
        raise ValueError(f"permutation on {sigma.n} vertices, digraph on {d.n}")
    return sum(len(c) - 1 for c in sigma.cycles if d.is_cycle(c))


def redei_berge_powersum(d: Digraph) -> PowerSumPolynomial:
    """The Redei--Berge function in the power-sum basis, via the signed
    formula over permutations whose cycles split between ``d`` and its
    complement.

    >>> redei_berge_powersum(Digraph(3, [(0, 1), (1, 1), (2, 2)])).to_text()
    'p[3] + 2*p[2,1] + p[1,1,1]'
    """
    arc_mask = d.arc_mask
    terms: dict[tuple[int, ...], int] = {}
    for data in _iter_perm_data(d.n):
        phi = _mixed_phi(data, arc_mask)
        if phi is None:
            continue
        terms[data.ptype] = terms.get(data.ptype, 0) + (-1) ** phi
    return PowerSumPolynomial(terms)


def redei_berge_tournament(d: Digraph) -> PowerSumPolynomial:
    """Tournament form: 2^(number of nontrivial cycles) * p_{type sigma}
    over permutations of all-odd cycle type whose nontrivial cycles all lie
    in the tournament."""
    if not d.is_tournament():
        raise ValueError("input digraph is not a tournament")
    arc_mask = d.arc_mask
    terms: dict[tuple[int, ...], int] = {}
    for data in _iter_perm_data(d.n):
        psi = 0
        ok = True
        for length, mask, _rev, _pairs in data.cycles:
            if length % 2 == 0:
                ok = False
                break
            if length > 1:
                if mask & arc_mask != mask:
                    ok = False
                    break
                psi += 1
        if ok:
            terms[data.ptype] = terms.get(data.ptype, 0) + (1 << psi)
    return PowerSumPolynomial(terms)


def is_risky(d: Digraph, cycle: CycleClass) -> bool:
    """Even length, and the class or its reversal is a cycle of ``d``."""
    if len(cycle) % 2 != 0:
        return False
    return d.is_cycle(cycle) or d.is_cycle(cycle.reversal())


def redei_berge_two_cycle_free(d: Digraph) -> PowerSumPolynomial:
    """Subtraction-free form for digraphs without 2-cycles: p_{type sigma}
    over permutations whose cycles split between ``d`` and its complement
    and none of which is risky."""
    if not d.is_two_cycle_free():
        raise ValueError("input digraph has a 2-cycle")
    arc_mask = d.arc_mask
    terms: dict[tuple[int, ...], int] = {}
    for data in _iter_perm_data(d.n):
        ok = True
        for length, mask, rev_mask, _pairs in data.cycles:
            inside = mask & arc_mask
            if inside not in (0, mask):
                ok = False
                break
            if length % 2 == 0 and (
                inside == mask or rev_mask & arc_mask == rev_mask
            ):
                ok = False  # risky cycle
                break
        if ok:
            terms[data.ptype] = terms.get(data.ptype, 0) + 1
    return PowerSumPolynomial(terms)


def in_doubled_odd_cone(f: PowerSumPolynomial) -> bool:
    """Membership in the set of nonnegative-integer polynomials in
    p_1, 2*p_3, 2*p_5, 2*p_7, ...

    Since the power sums are algebraically independent, this holds iff
    every partition carrying a nonzero coefficient has all parts odd, and
    the coefficient is a nonnegative integer divisible by 2^(number of
    parts exceeding 1)."""
    for parts, coeff in f.terms.items():
        if any(p % 2 == 0 for p in parts):
            return False
        if coeff.denominator != 1 or coeff < 0:
            return False
        doubled = sum(1 for p in parts if p > 1)
        if coeff.numerator % (1 << doubled):
            return False
    return True


class ArcWeights:
    """A rational weight t(u, v) for every ordered vertex pair; the shifted
    weight is s(u, v) = t(u, v) + 1.  Drives the deformed Redei--Berge
    function.  Unstated pairs weigh 0."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, weights: dict[tuple[int, int], Rational] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        table: dict[tuple[int, int], Fraction] = {}
        for (u, v), value in (weights or {}).items():
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"pair ({u}, {v}) outside 0..{n - 1}")
            coeff = _coeff(value)
            if coeff:
                table[(u, v)] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_t", table)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ArcWeights is immutable")

    def t(self, u: int, v: int) -> Fraction:
        return self._t.get((u, v), Fraction(0))

    def s(self, u: int, v: int) -> Fraction:
        return self.t(u, v) + 1

    def updated(self, u: int, v: int, value: Rational) -> "ArcWeights":
        """Copy with one weight replaced."""
        table = dict(self._t)
        table[(u, v)] = _coeff(value)
        return ArcWeights(self.n, table)

    @classmethod
    def from_digraph(cls, d: Digraph) -> "ArcWeights":
        """The specialization t = -1 on arcs and 0 on non-arcs, under which
        the deformed function becomes the Redei--Berge function of ``d``."""
        return cls(d.n, {arc: -1 for arc in d.arcs()})

    @classmethod
    def random(cls, n: int, seed: int | None = None) -> "ArcWeights":
        """Small random rationals for every pair; deterministic per seed."""
        rng = random.Random(seed)
        return cls(
            n,
            {
                (u, v): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for u in range(n)
                for v in range(n)
            },
        )

    @classmethod
    def from_json(cls, text: str) -> "ArcWeights":
        """Parse ``{"n": 2, "t": {"0,1": "-1", "1,0": "1/2"}}``; omitted
        pairs default to 0."""
        data = json.loads(text)
        if not isinstance(data, dict) or "n" not in data:
            raise ValueError("expected a JSON object with an 'n' field")
        n = data["n"]
        if not isinstance(n, int):
            raise ValueError("'n' must be an integer")
        table: dict[tuple[int, int], Fraction] = {}
        for key, value in data.get("t", {}).items():
            parts = key.split(",")
            if len(parts) != 2:
                raise ValueError(f"bad pair key {key!r}, expected 'u,v'")
            u, v = int(parts[0]), int(parts[1])
            table[(u, v)] = Fraction(str(value))
        return cls(n, table)

    def to_json(self) -> str:
        entries = {
            f"{u},{v}": str(coeff)
            for (u, v), coeff in sorted(self._t.items())
        }
        return json.dumps({"n": self.n, "t": entries})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ArcWeights)
            and self.n == other.n
            and self._t == other._t
        )

    def __repr__(self) -> str:
        return f"ArcWeights({self.n}, {dict(sorted(self._t.items()))!r})"


def deformed_by_definition(weights: ArcWeights, num_vars: int) -> MonomialPolynomial:
    """Defining sum of the deformation: over every listing w and every
    weakly increasing index sequence, the monomial weighted by the product
    of s(w_k, w_{k+1}) over the positions where the sequence stalls."""
    n = weights.n
    _check_factorial_cap(n)
    terms: dict[tuple[int, ...], Fraction] = {}
    sequences = []
    for seq in itertools.combinations_with_replacement(range(1, num_vars + 1), n):
        expo = [0] * num_vars
        for i in seq:
            expo[i - 1] += 1
        stalls = tuple(k for k in range(n - 1) if seq[k] == seq[k + 1])
        sequences.append((tuple(expo), stalls))
    for w in itertools.permutations(range(n)):
        for expo, stalls in sequences:
            weight = Fraction(1)
            for k in stalls:
                weight *= weights.s(w[k], w[k + 1])
            if weight:
                terms[expo] = terms.get(expo, Fraction(0)) + weight
    return MonomialPolynomial(num_vars, terms)


def deformed_powersum(weights: ArcWeights) -> PowerSumPolynomial:
    """Closed form of the deformation: over all permutations, the product
    over cycles of (product of s over the cyclic arcs minus product of t),
    attached to p_{type sigma}.

    >>> w = ArcWeights.from_digraph(Digraph(3, [(0, 1), (1, 1), (2, 2)]))
    >>> deformed_powersum(w) == redei_berge_powersum(Digraph(3, [(0, 1), (1, 1), (2, 2)]))
    True
    """
    n = weights.n
    terms: dict[tuple[int, ...], Fraction] = {}
    for data in _iter_perm_data(n):
        coeff = Fraction(1)
        for _length, _mask, _rev, pairs in data.cycles:
            s_product = Fraction(1)
            t_product = Fraction(1)
            for u, v in pairs:
                s_product *= weights.s(u, v)
                t_product *= weights.t(u, v)
            coeff *= s_product - t_product
            if not coeff:
                break
        if coeff:
            terms[data.ptype] = terms.get(data.ptype, Fraction(0)) + coeff
    return PowerSumPolynomial(terms)
