"""Exact sparse polynomials: monomial expansions, power-sum symmetric
functions, and fundamental quasisymmetric functions.

All coefficients are arbitrary-precision rationals (``fractions.Fraction``);
no floating point appears anywhere.  Zero coefficients are never stored, so
equality is plain dictionary equality on canonical keys.

Equality of two homogeneous degree-n (quasi)symmetric functions is decided
by expanding both in exactly n variables: a degree-n monomial involves at
most n distinct variables, and (quasi)symmetry makes the restriction to n
variables faithful.  The test suite cross-validates this at n+1 variables.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .kernel import DescentSet, is_partition
from .limits import MAX_VARIABLES

Rational = Fraction | int


def _coeff(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be exact (int or Fraction), got {type(value)}")


def _check_num_vars(m: int) -> None:
    if m < 1:
        raise ValueError(f"need at least one variable, got {m}")
    if m > MAX_VARIABLES:
        raise ValueError(f"{m} variables exceeds the dense-vector limit {MAX_VARIABLES}")


class MonomialPolynomial:
    """Polynomial in x_1..x_m with exact rational coefficients.

    Terms map dense exponent tuples of length m to nonzero coefficients.

    >>> p = MonomialPolynomial(2, {(1, 0): 1, (0, 1): 1})
    >>> (p * p).terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    True
    """

    __slots__ = ("num_vars", "terms")

    def __init__(
        self, num_vars: int, terms: Mapping[tuple[int, ...], Rational] = ()
    ):
        _check_num_vars(num_vars)
        clean: dict[tuple[int, ...], Fraction] = {}
        for expo, value in dict(terms).items():
            expo = tuple(expo)
            if len(expo) != num_vars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo!r} for {num_vars} variables")
            coeff = _coeff(value)
            if coeff:
                clean[expo] = coeff
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MonomialPolynomial is immutable")

    @classmethod
    def zero(cls, num_vars: int) -> "MonomialPolynomial":
        return cls(num_vars, {})

    @classmethod
    def one(cls, num_vars: int) -> "MonomialPolynomial":
        return cls(num_vars, {(0,) * num_vars: 1})

    def _require_same_vars(self, other: "MonomialPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable counts differ: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "MonomialPolynomial") -> "MonomialPolynomial":
        self._require_same_vars(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, Fraction(0)) + coeff
        return MonomialPolynomial(self.num_vars, terms)

    def __neg__(self) -> "MonomialPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "MonomialPolynomial") -> "MonomialPolynomial":
        return self + (-other)

    def scale(self, value: Rational) -> "MonomialPolynomial":
        c = _coeff(value)
        return MonomialPolynomial(
            self.num_vars, {e: c * v for e, v in self.terms.items()}
        )

    def __mul__(self, other: "MonomialPolynomial") -> "MonomialPolynomial":
        self._require_same_vars(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MonomialPolynomial(self.num_vars, terms)

    def coefficient(self, expo: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def evaluate(self, point: Iterable[Rational]) -> Fraction:
        values = [_coeff(x) for x in point]
        if len(values) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} values, got {len(values)}")
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for x, e in zip(values, expo):
                term *= x**e
            total += term
        return total

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialPolynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MonomialPolynomial({self.num_vars}, {self.terms!r})"


def _partition_sort_key(parts: tuple[int, ...]) -> tuple:
    # canonical term order: descending by size, then reverse-lexicographic
    return (-sum(parts), tuple(-p for p in parts))


class PowerSumPolynomial:
    """Element of the symmetric-function ring written in the power-sum basis.

    Terms map canonical partitions (weakly decreasing tuples of positive
    integers) to nonzero rational coefficients; the empty partition is the
    constant term.

    >>> f = PowerSumPolynomial({(1, 1, 1): 1, (2, 1): 2, (3,): 1})
    >>> f.to_text()
    'p[3] + 2*p[2,1] + p[1,1,1]'
    >>> f.zeta()
    Fraction(4, 1)
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Rational] = ()):
        clean: dict[tuple[int, ...], Fraction] = {}
        for parts, value in dict(terms).items():
            parts = tuple(parts)
            if not is_partition(parts):
                raise ValueError(f"not a canonical partition: {parts!r}")
            coeff = _coeff(value)
            if coeff:
                clean[parts] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PowerSumPolynomial is immutable")

    @classmethod
    def zero(cls) -> "PowerSumPolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "PowerSumPolynomial":
        return cls({(): 1})

    @classmethod
    def p(cls, k: int) -> "PowerSumPolynomial":
        """The power sum x_1^k + x_2^k + ... as a basis element."""
        return cls({(k,): 1})

    def __add__(self, other: "PowerSumPolynomial") -> "PowerSumPolynomial":
        terms = dict(self.terms)
        for parts, coeff in other.terms.items():
            terms[parts] = terms.get(parts, Fraction(0)) + coeff
        return PowerSumPolynomial(terms)

    def __neg__(self) -> "PowerSumPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "PowerSumPolynomial") -> "PowerSumPolynomial":
        return self + (-other)

    def scale(self, value: Rational) -> "PowerSumPolynomial":
        c = _coeff(value)
        return PowerSumPolynomial({p: c * v for p, v in self.terms.items()})

    def __mul__(self, other: "PowerSumPolynomial") -> "PowerSumPolynomial":
        terms: dict[tuple[int, ...], Fraction] = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                key = tuple(sorted(p1 + p2, reverse=True))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return PowerSumPolynomial(terms)

    def coefficient(self, parts: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(parts), Fraction(0))

    def is_homogeneous(self) -> bool:
        return len({sum(p) for p in self.terms}) <= 1

    @property
    def degree(self) -> int:
        """Common size of the partitions; 0 for the zero polynomial."""
        sizes = {sum(p) for p in self.terms}
        if len(sizes) > 1:
            raise ValueError("not homogeneous")
        return sizes.pop() if sizes else 0

    def omega(self) -> "PowerSumPolynomial":
        """The involution acting by (-1)^(k-1) on each power sum p_k."""
        return PowerSumPolynomial(
            {
                parts: coeff * (-1) ** (sum(parts) - len(parts))
                for parts, coeff in self.terms.items()
            }
        )

    def antipode(self) -> "PowerSumPolynomial":
        """The antipode, acting by -1 on each power sum p_k."""
        return PowerSumPolynomial(
            {
                parts: coeff * (-1) ** len(parts)
                for parts, coeff in self.terms.items()
            }
        )

    def zeta(self) -> Fraction:
        """Evaluation at x_1 = 1 and all other variables 0.

        Every p_k evaluates to 1 there, so this is the plain coefficient sum.
        """
        return sum(self.terms.values(), Fraction(0))

    def expand(self, num_vars: int) -> MonomialPolynomial:
        """Exact monomial expansion in x_1..x_m, replacing each p_k by
        x_1^k + ... + x_m^k."""
        _check_num_vars(num_vars)
        total = MonomialPolynomial.zero(num_vars)
        for parts, coeff in self.terms.items():
            total = total + _expand_partition(parts, num_vars).scale(coeff)
        return total

    def to_text(self) -> str:
        """Canonical rendering, e.g. ``p[3] + 2*p[2,1] + p[1,1,1]``."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for parts in sorted(self.terms, key=_partition_sort_key):
            coeff = self.terms[parts]
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            base = f"p[{','.join(str(p) for p in parts)}]" if parts else ""
            if not base:
                body = str(mag)
            elif mag == 1:
                body = base
            else:
                body = f"{mag}*{base}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> str:
        """JSON object mapping comma-joined parts to coefficient strings."""
        ordered = {
            ",".join(str(p) for p in parts): str(self.terms[parts])
            for parts in sorted(self.terms, key=_partition_sort_key)
        }
        return json.dumps(ordered)

    @classmethod
    def from_json(cls, text: str) -> "PowerSumPolynomial":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("expected a JSON object")
        terms: dict[tuple[int, ...], Fraction] = {}
        for key, value in data.items():
            parts = tuple(int(p) for p in key.split(",")) if key else ()
            terms[parts] = Fraction(value)
        return cls(terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PowerSumPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"PowerSumPolynomial({self.terms!r})"


@lru_cache(maxsize=None)
def _expand_power_sum(k: int, num_vars: int) -> MonomialPolynomial:
    terms = {}
    for i in range(num_vars):
        expo = [0] * num_vars
        expo[i] = k
        terms[tuple(expo)] = 1
    return MonomialPolynomial(num_vars, terms)


@lru_cache(maxsize=None)
def _expand_partition(parts: tuple[int, ...], num_vars: int) -> MonomialPolynomial:
    if not parts:
        return MonomialPolynomial.one(num_vars)
    return _expand_partition(parts[1:], num_vars) * _expand_power_sum(
        parts[0], num_vars
    )


def expand_fundamental(descents: DescentSet, num_vars: int) -> MonomialPolynomial:
    """Monomial expansion of the fundamental quasisymmetric function indexed
    by a descent set.

    Sums x_{i_1}...x_{i_n} over weakly increasing sequences
    1 <= i_1 <= ... <= i_n <= m with a strict rise i_p < i_{p+1} at every
    position p in the descent set.  Homogeneous of degree n.

    >>> L = expand_fundamental(DescentSet.of(3, {2}), 3)
    >>> L.coefficient((1, 1, 1)), L.coefficient((2, 1, 0)), L.coefficient((3, 0, 0))
    (Fraction(1, 1), Fraction(1, 1), Fraction(0, 1))
    """
    _check_num_vars(num_vars)
    return _expand_fundamental_cached(descents.n, descents.members, num_vars)


@lru_cache(maxsize=None)
def _expand_fundamental_cached(
    n: int, members: frozenset[int], num_vars: int
) -> MonomialPolynomial:
    terms: dict[tuple[int, ...], int] = {}
    for seq in itertools.combinations_with_replacement(range(1, num_vars + 1), n):
        if any(seq[p - 1] >= seq[p] for p in members):
            continue
        expo = [0] * num_vars
        for i in seq:
            expo[i - 1] += 1
        key = tuple(expo)
        terms[key] = terms.get(key, 0) + 1
    return MonomialPolynomial(num_vars, terms)


class FundamentalQSym:
    """Homogeneous degree-n quasisymmetric function written in the
    fundamental basis: a map from descent sets (all sharing the same n)
    to rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[DescentSet, Rational] = ()):
        if n < 0:
            raise ValueError(f"degree must be nonnegative, got {n}")
        clean: dict[DescentSet, Fraction] = {}
        for key, value in dict(terms).items():
            if not isinstance(key, DescentSet) or key.n != n:
                raise ValueError(f"key {key!r} does not index degree {n}")
            coeff = _coeff(value)
            if coeff:
                clean[key] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FundamentalQSym is immutable")

    @classmethod
    def zero(cls, n: int) -> "FundamentalQSym":
        return cls(n, {})

    def __add__(self, other: "FundamentalQSym") -> "FundamentalQSym":
        if self.n != other.n:
            raise ValueError(f"degrees differ: {self.n} vs {other.n}")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return FundamentalQSym(self.n, terms)

    def __neg__(self) -> "FundamentalQSym":
        return self.scale(-1)

    def __sub__(self, other: "FundamentalQSym") -> "FundamentalQSym":
        return self + (-other)

    def scale(self, value: Rational) -> "FundamentalQSym":
        c = _coeff(value)
        return FundamentalQSym(self.n, {k: c * v for k, v in self.terms.items()})

    def coefficient(self, key: DescentSet) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def zeta(self) -> Fraction:
        """Evaluation at x_1 = 1, rest 0: the coefficient of the empty
        descent set (every other fundamental vanishes there)."""
        return self.terms.get(DescentSet.of(self.n), Fraction(0))

    def expand(self, num_vars: int) -> MonomialPolynomial:
        _check_num_vars(num_vars)
        total = MonomialPolynomial.zero(num_vars)
        for key, coeff in self.terms.items():
            total = total + expand_fundamental(key, num_vars).scale(coeff)
        return total

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FundamentalQSym)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"FundamentalQSym({self.n}, {self.terms!r})"
