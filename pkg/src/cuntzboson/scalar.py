"""Exact arithmetic in the rational span of square roots of squarefree naturals.

Every coefficient produced by the ladder calculus is a finite sum
``q_1*sqrt(r_1) + ... + q_k*sqrt(r_k)`` with rational ``q_i`` and squarefree
radicands ``r_i >= 1``, where radicand 1 carries the rational part.  The span
is closed under addition and multiplication because

    sqrt(r) * sqrt(r') = g * sqrt((r/g) * (r'/g)),   g = gcd(r, r'),

and the product of two coprime squarefree numbers is squarefree.  All
identity checks in the package therefore run with exact equality; floats are
for display only and never decide anything.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

_SIEVE_BOUND = 10_000


def _sieve(bound: int) -> tuple[int, ...]:
    composite = bytearray(bound + 1)
    primes = []
    for p in range(2, bound + 1):
        if not composite[p]:
            primes.append(p)
            for q in range(p * p, bound + 1, p):
                composite[q] = 1
    return tuple(primes)


_PRIMES = _sieve(_SIEVE_BOUND)


def _trial_divisors() -> Iterator[int]:
    yield from _PRIMES
    d = _PRIMES[-1] + 2
    while True:
        yield d
        d += 2


def squarefree_split(n: int) -> tuple[int, int]:
    """Factor ``n = q*q*r`` with ``r`` squarefree; returns ``(q, r)``.

    Trial division with a precomputed prime table; intended inputs stay well
    below the table bound squared.
    """
    if n < 1:
        raise ValueError(f"radicand must be >= 1, got {n}")
    q, r, m = 1, 1, n
    for p in _trial_divisors():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            q *= p ** (e // 2)
            if e % 2:
                r *= p
    if m > 1:
        r *= m
    return q, r


Rational = Union[int, Fraction]
TermsLike = Union[Mapping[int, Rational], Iterable[tuple[int, Rational]]]


class RadicalScalar:
    """Immutable element of the rational span of {sqrt(r) : r squarefree}.

    Stored as a radicand -> nonzero Fraction map in canonical form; the
    constructor accepts arbitrary radicands and coefficients and reduces them
    (e.g. ``{8: 1}`` becomes ``2*sqrt(2)``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for radicand, coeff in items:
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                q, r = squarefree_split(radicand)
                total = clean.get(r, Fraction(0)) + coeff * q
                if total:
                    clean[r] = total
                else:
                    clean.pop(r, None)
        self._terms = clean

    @classmethod
    def rational(cls, value: Rational) -> "RadicalScalar":
        return cls({1: Fraction(value)})

    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Canonical (radicand, coefficient) pairs, sorted by radicand."""
        return tuple(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(r == 1 for r in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "RadicalScalar":
        out = RadicalScalar()
        out._terms = {r: -q for r, q in self._terms.items()}
        return out

    def __add__(self, other) -> "RadicalScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for r, q in other._terms.items():
            total = merged.get(r, Fraction(0)) + q
            if total:
                merged[r] = total
            else:
                merged.pop(r, None)
        out = RadicalScalar()
        out._terms = merged
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "RadicalScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RadicalScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RadicalScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged: dict[int, Fraction] = {}
        for r1, q1 in self._terms.items():
            for r2, q2 in other._terms.items():
                g = math.gcd(r1, r2)
                r = (r1 // g) * (r2 // g)
                total = merged.get(r, Fraction(0)) + q1 * q2 * g
                if total:
                    merged[r] = total
                else:
                    merged.pop(r, None)
        out = RadicalScalar()
        out._terms = merged
        return out

    __rmul__ = __mul__

    def inverse(self) -> "RadicalScalar":
        """Reciprocal of a single-term scalar q*sqrt(r); raises otherwise.

        General division is out of scope; single terms cover every reciprocal
        the operator formulas need (normalizers are 1/sqrt(integer)).
        """
        if len(self._terms) != 1:
            raise ValueError(f"only single-term scalars are invertible, got {self}")
        (r, q), = self._terms.items()
        return RadicalScalar({r: Fraction(1, 1) / (q * r)})

    def __truediv__(self, other) -> "RadicalScalar":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, RadicalScalar):
            return self * other.inverse()
        return NotImplemented

    def to_float(self) -> float:
        return math.fsum(float(q) * math.sqrt(r) for r, q in self._terms.items())

    __float__ = to_float

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for r, q in sorted(self._terms.items()):
            if r == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({r})")
            elif q == -1:
                parts.append(f"-sqrt({r})")
            else:
                parts.append(f"{q}*sqrt({r})")
        text = parts[0]
        for part in parts[1:]:
            text += " - " + part[1:] if part.startswith("-") else " + " + part
        return text

    __repr__ = __str__

    def to_json_terms(self) -> list[dict]:
        return [
            {"radicand": r, "numerator": q.numerator, "denominator": q.denominator}
            for r, q in self.terms()
        ]

    @classmethod
    def from_json_terms(cls, doc: Iterable[Mapping]) -> "RadicalScalar":
        return cls(
            (entry["radicand"], Fraction(entry["numerator"], entry["denominator"]))
            for entry in doc
        )


def _coerce(value) -> RadicalScalar:
    if isinstance(value, RadicalScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalScalar.rational(value)
    return NotImplemented


ZERO = RadicalScalar()
ONE = RadicalScalar.rational(1)


def sqrt_nat(n: int) -> RadicalScalar:
    """Exact sqrt(n) for a natural n >= 1, reduced to q*sqrt(r) with r squarefree."""
    if n < 1:
        raise ValueError(f"sqrt_nat requires n >= 1, got {n}")
    q, r = squarefree_split(n)
    return RadicalScalar({r: q})


def sqrt_factorial(k: int) -> RadicalScalar:
    """Exact sqrt(k!), built incrementally so radicands stay small."""
    if k < 0:
        raise ValueError(f"sqrt_factorial requires k >= 0, got {k}")
    out = ONE
    for i in range(2, k + 1):
        out = out * sqrt_nat(i)
    return out


def inv_sqrt_nat(n: int) -> RadicalScalar:
    """Exact 1/sqrt(n) = sqrt(n)/n."""
    return sqrt_nat(n) / n
