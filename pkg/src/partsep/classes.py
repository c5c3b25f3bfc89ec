"""Membership predicates and enumeration counts for the partition classes.

Every predicate takes a canonical (nonincreasing) partition and returns a
bool; out-of-universe inputs give ``False`` rather than an error so counts
can filter the unrestricted stream from :func:`partitions_of`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

from .partitions import Partition, partitions_of

__all__ = [
    "Kind",
    "ClassSpec",
    "BClass",
    "SignedCount",
    "is_in_D",
    "is_in_O",
    "is_in_A",
    "is_in_residue_parts_mod4",
    "classify_B",
    "is_in_B",
    "is_in_AP_class",
    "is_in_distinct_residue_class",
    "count_class",
    "count_classes",
    "signed_count_B",
    "tally",
]


class Kind(enum.Enum):
    D = "D"
    O = "O"
    A = "A"
    B = "B"
    AP_CLASS = "AP"
    DISTINCT_RESIDUE_CLASS = "DR"
    RESIDUE_PARTS_MOD4 = "MOD4"

    @classmethod
    def parse(cls, name: str) -> "Kind":
        for k in cls:
            if name.upper() in (k.name, k.value):
                return k
        raise ValueError(f"unknown class kind {name!r}")


_NEEDS_P = {Kind.D, Kind.O, Kind.AP_CLASS, Kind.DISTINCT_RESIDUE_CLASS}
_NEEDS_R = {Kind.D, Kind.O, Kind.A, Kind.RESIDUE_PARTS_MOD4}


@dataclass(frozen=True)
class ClassSpec:
    """Identifies one partition class together with its parameters."""

    kind: Kind
    p: Optional[int] = None
    r: Optional[int] = None

    def __post_init__(self):
        kind = self.kind
        if isinstance(kind, str):
            kind = Kind.parse(kind)
            object.__setattr__(self, "kind", kind)
        if kind in _NEEDS_P:
            if self.p is None or self.p < 2:
                raise ValueError(f"{kind.name} needs a modulus p >= 2, got {self.p}")
        elif self.p is not None:
            raise ValueError(f"{kind.name} takes no modulus")
        if kind in (Kind.D, Kind.O):
            if self.r is None or not 1 <= self.r <= self.p - 1:
                raise ValueError(f"{kind.name} needs 1 <= r <= {self.p - 1}, got {self.r}")
        elif kind in (Kind.A, Kind.RESIDUE_PARTS_MOD4):
            if self.r not in (1, 3):
                raise ValueError(f"{kind.name} needs r in {{1, 3}}, got {self.r}")
        elif self.r is not None:
            raise ValueError(f"{kind.name} takes no residue")

    def predicate(self) -> Callable[[Partition], bool]:
        k, p, r = self.kind, self.p, self.r
        if k is Kind.D:
            return lambda lam: is_in_D(lam, p, r)
        if k is Kind.O:
            return lambda lam: is_in_O(lam, p, r)
        if k is Kind.A:
            return lambda lam: is_in_A(lam, r)
        if k is Kind.B:
            return is_in_B
        if k is Kind.AP_CLASS:
            return lambda lam: is_in_AP_class(lam, p)
        if k is Kind.DISTINCT_RESIDUE_CLASS:
            return lambda lam: is_in_distinct_residue_class(lam, p)
        return lambda lam: is_in_residue_parts_mod4(lam, r)

    def __str__(self) -> str:
        args = [f"{name}={v}" for name, v in (("p", self.p), ("r", self.r)) if v is not None]
        return f"{self.kind.value}({', '.join(args)})" if args else self.kind.value


# Predicates walk the parts largest-first, so "every r-part exceeds every
# 0-part" becomes "no r-part after the first 0-part".


def is_in_D(lam: Partition, p: int, r: int) -> bool:
    seen_zero = False
    prev = 0
    for x in lam:
        m = x % p
        if m == 0:
            seen_zero = True
        elif m == r:
            if seen_zero or x == prev:
                return False
            prev = x
        else:
            return False
    return True


def is_in_O(lam: Partition, p: int, r: int) -> bool:
    """r-parts must be exactly ``r, r+p, ..., r+(k-1)p``, each once."""
    expected = None
    for x in lam:
        m = x % p
        if m == r:
            if expected is not None and x != expected:
                return False
            expected = x - p
        elif m != 0:
            return False
    return expected is None or expected == r - p


def is_in_A(lam: Partition, r: int) -> bool:
    """Even values 2..2m all present (2m the largest even), odd parts >= 2m + r."""
    largest_even = 0
    next_even = 0
    min_odd = None
    for x in lam:
        if x & 1:
            min_odd = x
        elif not largest_even:
            largest_even = next_even = x
        elif x != next_even:
            if x != next_even - 2:
                return False
            next_even = x
    if largest_even and next_even != 2:
        return False
    return min_odd is None or min_odd >= largest_even + r


def is_in_residue_parts_mod4(lam: Partition, r: int) -> bool:
    return all(x % 4 in (r, 2) for x in lam)


class BClass(NamedTuple):
    branch: str  # "a" or "b"
    even_part_count: int


def classify_B(lam: Partition) -> Optional[BClass]:
    """Return the branch of a B-partition, or ``None`` for non-members.

    Branch ``a``: all parts even and distinct.  Branch ``b``: the odd parts
    are exactly 1, 3, ..., 2k-1, each at least twice, and the even parts are
    distinct and at least 2k+2.
    """
    evens = [x for x in lam if not x & 1]
    if len(set(evens)) != len(evens):
        return None
    if len(evens) == len(lam):
        return BClass("a", len(evens))
    odds = [x for x in lam if x & 1]
    top = odds[0]
    counts: dict[int, int] = {}
    for x in odds:
        counts[x] = counts.get(x, 0) + 1
    if len(counts) != (top + 1) // 2 or counts.get(1, 0) < 2:
        return None
    if any(c < 2 for c in counts.values()):
        return None
    if evens and evens[-1] < top + 3:
        return None
    return BClass("b", len(evens))


def is_in_B(lam: Partition) -> bool:
    return classify_B(lam) is not None


def is_in_AP_class(lam: Partition, p: int) -> bool:
    """Non-multiples of p are ``s, s+p, ..., s+(k-1)p`` once each, with s < p."""
    expected = None
    for x in lam:
        if x % p:
            if expected is not None and x != expected:
                return False
            expected = x - p
    return expected is None or expected < 0


def is_in_distinct_residue_class(lam: Partition, p: int) -> bool:
    residue = None
    seen_multiple = False
    prev = 0
    for x in lam:
        m = x % p
        if m == 0:
            seen_multiple = True
            continue
        if seen_multiple or x == prev or (residue is not None and m != residue):
            return False
        residue = m
        prev = x
    return True


@dataclass(frozen=True)
class SignedCount:
    even_count: int
    odd_count: int

    @property
    def difference(self) -> int:
        return self.even_count - self.odd_count


def count_class(n: int, spec: ClassSpec) -> int:
    pred = spec.predicate()
    return sum(1 for lam in partitions_of(n) if pred(lam))


def count_classes(n: int, specs: Sequence[ClassSpec]) -> list[int]:
    """Count several classes in one pass over the partitions of ``n``."""
    return tally(n, specs).counts


def signed_count_B(n: int) -> SignedCount:
    even = odd = 0
    for lam in partitions_of(n):
        b = classify_B(lam)
        if b is None:
            continue
        if b.even_part_count & 1:
            odd += 1
        else:
            even += 1
    return SignedCount(even, odd)


class Tally(NamedTuple):
    n: int
    counts: list[int]
    signed_B: Optional[SignedCount]


def tally(n: int, specs: Sequence[ClassSpec], signed_b: bool = False) -> Tally:
    """Single enumeration pass computing ``count_class`` for each spec.

    With ``signed_b`` the B-class parity split is accumulated as well.
    Results are identical to calling the per-class functions separately.
    """
    preds = [s.predicate() for s in specs]
    counts = [0] * len(preds)
    even = odd = 0
    for lam in partitions_of(n):
        for i, pred in enumerate(preds):
            if pred(lam):
                counts[i] += 1
        if signed_b:
            b = classify_B(lam)
            if b is not None:
                if b.even_part_count & 1:
                    odd += 1
                else:
                    even += 1
    return Tally(n, counts, SignedCount(even, odd) if signed_b else None)
