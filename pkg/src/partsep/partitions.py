"""Partition data model, multiset algebra and exhaustive generation.

A :class:`Partition` is a tuple of positive integers kept in nonincreasing
order.  Zeros may appear in inputs (they come from padding and from
componentwise differences) but are never stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator

from .errors import ForeignResidue, NegativeEntry, NegativePart

__all__ = [
    "Partition",
    "ResidueSplit",
    "make_partition",
    "parse_partition",
    "componentwise_sum",
    "componentwise_diff",
    "multiset_union",
    "decompose_by_residue",
    "staircase",
    "partitions_of",
]


class Partition(tuple):
    """Immutable nonincreasing tuple of positive integers.

    ``Partition([1, 3, 2])`` canonicalizes its argument; internal code that
    already holds a canonical tuple uses :meth:`_trusted` to skip the sort.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "Partition":
        parts = []
        for v in values:
            v = int(v)
            if v < 0:
                raise NegativePart(f"negative part {v}")
            if v:
                parts.append(v)
        parts.sort(reverse=True)
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})" if self else "Partition()"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def make_partition(values: Iterable[int]) -> Partition:
    """Return the canonical partition with the given parts (zeros dropped)."""
    return Partition(values)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated literal form, e.g. ``"5,3,3,1"``.

    Whitespace is ignored and an empty string is the empty partition.
    Raises ``ValueError`` on anything that is not an integer list.
    """
    cleaned = "".join(text.split()).strip("()")
    if not cleaned:
        return Partition()
    try:
        values = [int(tok) for tok in cleaned.split(",")]
    except ValueError:
        raise ValueError(f"not a partition literal: {text!r}") from None
    return Partition(values)


def componentwise_sum(a: Partition, b: Partition) -> Partition:
    # Aligned sums of nonincreasing sequences stay nonincreasing.
    return Partition._trusted(x + y for x, y in zip_longest(a, b, fillvalue=0))


def componentwise_diff(a: Partition, b: Partition) -> Partition:
    """Subtract ``b`` from ``a`` position by position, largest parts aligned.

    The shorter partition is padded with zeros; zero entries of the result
    are dropped and the result is canonicalized.
    """
    if len(b) > len(a):
        raise NegativeEntry(f"{b!r} is longer than {a!r}")
    entries = []
    for i, (x, y) in enumerate(zip_longest(a, b, fillvalue=0)):
        if x < y:
            raise NegativeEntry(f"entry {i}: {x} - {y} < 0")
        entries.append(x - y)
    return Partition(entries)


def multiset_union(*parts: Partition) -> Partition:
    merged: list[int] = []
    for p in parts:
        merged.extend(p)
    merged.sort(reverse=True)
    return Partition._trusted(merged)


@dataclass(frozen=True)
class ResidueSplit:
    """A partition cut into its r-residue and 0-residue subpartitions mod p."""

    p: int
    r: int
    r_part: Partition
    zero_part: Partition

    def union(self) -> Partition:
        return multiset_union(self.r_part, self.zero_part)


def _check_modulus(p: int, r: int) -> None:
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if not 1 <= r <= p - 1:
        raise ValueError(f"residue must lie in [1, {p - 1}], got {r}")


def decompose_by_residue(lam: Partition, p: int, r: int) -> ResidueSplit:
    _check_modulus(p, r)
    r_parts, zero_parts = [], []
    for x in lam:
        m = x % p
        if m == r:
            r_parts.append(x)
        elif m == 0:
            zero_parts.append(x)
        else:
            raise ForeignResidue(f"part {x} is {m} mod {p}, expected 0 or {r}")
    return ResidueSplit(p, r, Partition._trusted(r_parts), Partition._trusted(zero_parts))


def staircase(k: int, p: int, r: int) -> Partition:
    """The k-part progression ``(p(k-1)+r, ..., p+r, r)``."""
    _check_modulus(p, r)
    if k < 0:
        raise ValueError(f"staircase length must be >= 0, got {k}")
    return Partition._trusted(range(p * (k - 1) + r, r - 1, -p) if k else ())


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in descending lexicographic order.

    Uses the Zoghbi-Stojmenovic ZS1 successor rule, which touches only the
    tail of the current partition on each step.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield Partition._trusted(())
        return
    make = Partition._trusted
    x = [0] + [1] * n
    x[1] = n
    m = h = 1
    yield make((n,))
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield make(x[1 : m + 1])
