"""The residue-separating bijection between the O-class and the D-class.

``phi`` adds the r-residue subpartition onto the 0-residue subpartition
position by position.  ``psi`` undoes it: the r-parts of a D-partition are
split into the staircase ``(p(k-1)+r, ..., p+r, r)`` plus a remainder whose
entries are multiples of p, and both pieces are merged with the 0-parts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .classes import is_in_D, is_in_O
from .errors import InternalConsistencyError, NotInClass
from .partitions import (
    Partition,
    componentwise_sum,
    decompose_by_residue,
    multiset_union,
    partitions_of,
    staircase,
)

__all__ = [
    "phi",
    "psi",
    "psi_trace",
    "InverseTrace",
    "BijectionReport",
    "verify_bijection",
    "check_roundtrip",
]


def phi(lam: Partition, p: int, r: int, *, check: bool = True) -> Partition:
    if check and not is_in_O(lam, p, r):
        raise NotInClass(f"{lam!r} is not in O(n, {p}, {r})")
    split = decompose_by_residue(lam, p, r)
    return componentwise_sum(split.r_part, split.zero_part)


@dataclass(frozen=True)
class InverseTrace:
    """Intermediate pieces of one ``psi`` evaluation."""

    r_part: Partition
    zero_part: Partition
    staircase: Partition
    difference: Partition
    image: Partition


def psi_trace(mu: Partition, p: int, r: int, *, check: bool = True) -> InverseTrace:
    if check and not is_in_D(mu, p, r):
        raise NotInClass(f"{mu!r} is not in D(n, {p}, {r})")
    split = decompose_by_residue(mu, p, r)
    stairs = staircase(len(split.r_part), p, r)
    # Distinct r-parts are >= p apart, so the aligned difference is already
    # nonincreasing and made of multiples of p; check rather than sort.
    diff = [x - y for x, y in zip(split.r_part, stairs)]
    for i, d in enumerate(diff):
        if d < 0 or d % p or (i and d > diff[i - 1]):
            raise InternalConsistencyError(
                f"r-part minus staircase {diff} is not a nonincreasing sequence "
                f"of nonnegative multiples of {p} (input {mu!r})"
            )
    difference = Partition._trusted(d for d in diff if d)
    image = multiset_union(split.zero_part, stairs, difference)
    return InverseTrace(split.r_part, split.zero_part, stairs, difference, image)


def psi(mu: Partition, p: int, r: int, *, check: bool = True) -> Partition:
    return psi_trace(mu, p, r, check=check).image


def check_roundtrip(lam: Partition, p: int, r: int) -> Optional[str]:
    """Return ``None`` if ``lam`` survives phi then psi intact, else a reason."""
    if not is_in_O(lam, p, r):
        return "not in O-class"
    mu = phi(lam, p, r, check=False)
    if mu.weight != lam.weight:
        return f"weight changed: {lam.weight} -> {mu.weight}"
    if not is_in_D(mu, p, r):
        return f"image {mu} not in D-class"
    back = psi(mu, p, r, check=False)
    if back != lam:
        return f"psi(phi(lam)) = {back}"
    return None


@dataclass
class BijectionReport:
    n: int
    p: int
    r: int
    class_size: int = 0
    d_class_size: int = 0
    roundtrip_ok: bool = True
    image_equals_D_class: bool = True
    weight_preserved: bool = True
    first_failure: Optional[tuple[Partition, str]] = field(default=None)

    @property
    def ok(self) -> bool:
        return self.roundtrip_ok and self.image_equals_D_class and self.weight_preserved

    def _fail(self, lam: Partition, reason: str) -> None:
        if self.first_failure is None:
            self.first_failure = (lam, reason)

    def to_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            failure = {"partition": str(self.first_failure[0]), "reason": self.first_failure[1]}
        return {
            "n": self.n,
            "p": self.p,
            "r": self.r,
            "class_size": self.class_size,
            "d_class_size": self.d_class_size,
            "roundtrip_ok": self.roundtrip_ok,
            "image_equals_D_class": self.image_equals_D_class,
            "weight_preserved": self.weight_preserved,
            "first_failure": failure,
        }


def verify_bijection(n: int, p: int, r: int) -> BijectionReport:
    """Exhaustively certify the bijection on all partitions of ``n``.

    Checks psi(phi(x)) == x on the O-class, phi(psi(y)) == y on the D-class,
    weight preservation in both directions, and that phi maps the O-class
    onto the D-class as sets.  Failures are recorded, never raised.
    """
    rep = BijectionReport(n, p, r)
    o_class, d_class = [], set()
    for lam in partitions_of(n):
        if is_in_O(lam, p, r):
            o_class.append(lam)
        if is_in_D(lam, p, r):
            d_class.add(lam)
    rep.class_size = len(o_class)
    rep.d_class_size = len(d_class)

    image = set()
    for lam in o_class:
        try:
            mu = phi(lam, p, r, check=False)
            back = psi(mu, p, r, check=False)
        except InternalConsistencyError as exc:
            rep.roundtrip_ok = False
            rep._fail(lam, f"psi failed on phi image: {exc}")
            continue
        image.add(mu)
        if mu.weight != n:
            rep.weight_preserved = False
            rep._fail(lam, f"phi changed weight to {mu.weight}")
        if back != lam:
            rep.roundtrip_ok = False
            rep._fail(lam, f"psi(phi) gave {back}")
    for mu in d_class:
        try:
            lam = psi(mu, p, r, check=False)
        except InternalConsistencyError as exc:
            rep.roundtrip_ok = False
            rep._fail(mu, str(exc))
            continue
        if lam.weight != n:
            rep.weight_preserved = False
            rep._fail(mu, f"psi changed weight to {lam.weight}")
        if phi(lam, p, r, check=False) != mu:
            rep.roundtrip_ok = False
            rep._fail(mu, "phi(psi) differs")
    if image != d_class or len(image) != len(o_class):
        rep.image_equals_D_class = False
        extra = sorted(image - d_class, reverse=True)
        if extra:
            rep._fail(extra[0], "image outside D-class")
        else:
            rep._fail(Partition(), "image misses part of the D-class or phi not injective")
    return rep
