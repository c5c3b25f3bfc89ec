"""Exact truncated power series in q and the identities checked with them.

A :class:`QSeries` stores integer coefficients ``c_0 .. c_T``.  Binary
operations on series of different order truncate to the smaller one.
Coefficients are Python integers, so arithmetic is always exact.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DivergentProduct, NonUnitConstantTerm

__all__ = [
    "DEFAULT_ORDER",
    "QSeries",
    "Monomial",
    "parse_monomial",
    "qs_add",
    "qs_sub",
    "qs_mul",
    "qs_inv",
    "first_mismatch",
    "poch",
    "poch_inf",
    "partition_gf",
    "lebesgue_lhs",
    "lebesgue_rhs",
    "SlaterResult",
    "slater_printed_lhs",
    "slater_corrected_lhs",
    "slater_rhs",
    "slater_check",
    "gen_A",
    "gen_A_product",
    "gen_B_signed",
    "theta_4nn",
    "is_pentagonal4",
    "class_gf_from_enumeration",
    "class_gfs_from_enumeration",
]

DEFAULT_ORDER = 64


class QSeries:
    """Power series ``c_0 + c_1 q + ... + c_T q^T`` with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        c = [int(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f"truncation order must be >= 0, got {order}")
            c = c[: order + 1] + [0] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self._c = tuple(c)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, coeff: int, exp: int, order: int) -> "QSeries":
        c = [0] * (order + 1)
        if exp <= order:
            c[exp] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, i: int) -> int:
        return self._c[i]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, QSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"QSeries({list(self._c)}, order={self.order})"

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self._c[: order + 1], order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k`` keeping the truncation order."""
        T = self.order
        return QSeries([0] * k + list(self._c[: max(T + 1 - k, 0)]), T)

    def __add__(self, other: "QSeries") -> "QSeries":
        return qs_add(self, other)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return qs_sub(self, other)

    def __mul__(self, other: "QSeries") -> "QSeries":
        return qs_mul(self, other)

    def __neg__(self) -> "QSeries":
        return QSeries(-x for x in self._c)

    def inverse(self) -> "QSeries":
        return qs_inv(self)


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return QSeries(x + y for x, y in zip(a.coeffs, b.coeffs))


def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    return QSeries(x - y for x, y in zip(a.coeffs, b.coeffs))


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    T = min(a.order, b.order)
    ca, cb = a.coeffs, b.coeffs
    out = [0] * (T + 1)
    for i in range(T + 1):
        x = ca[i]
        if x:
            for j in range(T + 1 - i):
                out[i + j] += x * cb[j]
    return QSeries(out)


def qs_inv(a: QSeries) -> QSeries:
    """Multiplicative inverse; the constant term must be +1 or -1."""
    c = a.coeffs
    c0 = c[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit over the integers")
    T = a.order
    inv = [0] * (T + 1)
    inv[0] = c0
    for n in range(1, T + 1):
        s = 0
        for k in range(1, n + 1):
            if c[k]:
                s += c[k] * inv[n - k]
        inv[n] = -s * c0
    return QSeries(inv)


def first_mismatch(a: QSeries, b: QSeries) -> Optional[int]:
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return i
    return None


@dataclass(frozen=True)
class Monomial:
    """The concrete parameter ``coeff * q**exp``."""

    coeff: int
    exp: int = 0

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError(f"exponent must be >= 0, got {self.exp}")

    def times(self, coeff: int = 1, exp: int = 0) -> "Monomial":
        return Monomial(self.coeff * coeff, self.exp + exp)

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.exp == 0:
            return str(self.coeff)
        sign = "-" if self.coeff < 0 else ""
        mag = abs(self.coeff)
        head = "" if mag == 1 else f"{mag}*"
        tail = "q" if self.exp == 1 else f"q^{self.exp}"
        return f"{sign}{head}{tail}"


_MONOMIAL_RE = re.compile(r"^([+-]?)(\d*)\*?(q(?:\^?(\d+))?)?$")


def parse_monomial(text: str) -> Monomial:
    """Parse forms like ``0``, ``-1``, ``q``, ``-q^3``, ``2q5``, ``-2*q^2``."""
    m = _MONOMIAL_RE.match("".join(text.split()))
    if not m or not (m.group(2) or m.group(3)):
        raise ValueError(f"not a monomial in q: {text!r}")
    sign, digits, qpart, exp = m.groups()
    coeff = int(digits) if digits else 1
    if sign == "-":
        coeff = -coeff
    if qpart is None:
        return Monomial(coeff, 0)
    return Monomial(coeff, int(exp) if exp else 1)


def _mul_binomial(c: list[int], coeff: int, exp: int) -> None:
    """In place: c *= (1 - coeff q^exp)."""
    if not coeff:
        return
    T = len(c) - 1
    if exp == 0:
        f = 1 - coeff
        for i in range(T + 1):
            c[i] *= f
        return
    for i in range(T, exp - 1, -1):
        c[i] -= coeff * c[i - exp]


def _div_binomial(c: list[int], coeff: int, exp: int) -> None:
    """In place: c /= (1 - coeff q^exp), exp >= 1."""
    T = len(c) - 1
    for i in range(exp, T + 1):
        c[i] += coeff * c[i - exp]


def poch(a: Monomial, step: int, n: int, order: int = DEFAULT_ORDER) -> QSeries:
    """Finite product ``prod_{j<n} (1 - a q^(step*j))``."""
    if step < 1 or n < 0:
        raise ValueError("poch needs step >= 1 and n >= 0")
    c = [1] + [0] * order
    for j in range(n):
        e = a.exp + step * j
        if e > order:
            break
        _mul_binomial(c, a.coeff, e)
    return QSeries(c)


def poch_inf(a: Monomial, step: int, order: int = DEFAULT_ORDER) -> QSeries:
    """Infinite product ``prod_{j>=0} (1 - a q^(step*j))`` truncated at ``order``."""
    if step < 1:
        raise ValueError("poch_inf needs step >= 1")
    if a.coeff == 0:
        return QSeries.one(order)
    if a.exp == 0:
        raise DivergentProduct("infinite product with a constant-order parameter")
    c = [1] + [0] * order
    for e in range(a.exp, order + 1, step):
        _mul_binomial(c, a.coeff, e)
    return QSeries(c)


def _inv_poch(a: Monomial, step: int, n: Optional[int], order: int) -> QSeries:
    """``1 / (a; q^step)_n`` (n=None for the infinite product), exponents >= 1."""
    c = [1] + [0] * order
    if a.coeff:
        e, j = a.exp, 0
        while e <= order and (n is None or j < n):
            if e == 0:
                raise NonUnitConstantTerm("factor with constant term 1 - a")
            _div_binomial(c, a.coeff, e)
            e += step
            j += 1
    return QSeries(c)


def partition_gf(order: int = DEFAULT_ORDER) -> QSeries:
    """``1 / (q; q)_inf`` computed by inverting the product series."""
    return qs_inv(poch_inf(Monomial(1, 1), 1, order))


def lebesgue_lhs(a: Monomial, order: int = DEFAULT_ORDER) -> QSeries:
    total = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        term = qs_mul(poch(a, 1, n, order), qs_inv(poch(Monomial(1, 1), 1, n, order)))
        for i, x in enumerate(term.shift(n * (n + 1) // 2).coeffs):
            total[i] += x
        n += 1
    return QSeries(total)


def lebesgue_rhs(a: Monomial, order: int = DEFAULT_ORDER) -> QSeries:
    """``prod_{n>=1} (1 - a q^(2n-1)) (1 + q^n)``."""
    odd_factor = poch_inf(a.times(exp=1), 2, order)
    return qs_mul(odd_factor, poch_inf(Monomial(-1, 1), 1, order))


def _sum_terms(terms) -> list[int]:
    total = None
    for s in terms:
        if total is None:
            total = list(s.coeffs)
        else:
            for i, x in enumerate(s.coeffs):
                total[i] += x
    return total


def slater_printed_lhs(order: int = DEFAULT_ORDER) -> QSeries:
    """``sum_n q^(n^2) / (q; q)_{2n}``."""
    q = Monomial(1, 1)
    terms = (
        _inv_poch(q, 1, 2 * n, order).shift(n * n)
        for n in range(order + 1)
        if n * n <= order
    )
    return QSeries(_sum_terms(terms))


def slater_corrected_lhs(order: int = DEFAULT_ORDER) -> QSeries:
    """``(q^2; q^2)_inf * sum_n q^(2n^2) / (q; q)_{2n}``."""
    q = Monomial(1, 1)
    terms = (
        _inv_poch(q, 1, 2 * n, order).shift(2 * n * n)
        for n in range(order + 1)
        if 2 * n * n <= order
    )
    return qs_mul(poch_inf(Monomial(1, 2), 2, order), QSeries(_sum_terms(terms)))


def slater_rhs(order: int = DEFAULT_ORDER) -> QSeries:
    """``prod_{n>=1} (1 + q^(8n-3)) (1 + q^(8n-5)) (1 - q^(8n))``."""
    out = poch_inf(Monomial(-1, 5), 8, order)
    out = qs_mul(out, poch_inf(Monomial(-1, 3), 8, order))
    return qs_mul(out, poch_inf(Monomial(1, 8), 8, order))


@dataclass(frozen=True)
class SlaterResult:
    order: int
    printed_first_mismatch: Optional[int]
    printed_coefficients: Optional[tuple[int, int]]
    corrected_first_mismatch: Optional[int]

    @property
    def corrected_ok(self) -> bool:
        return self.corrected_first_mismatch is None


def slater_check(order: int = DEFAULT_ORDER) -> SlaterResult:
    """Compare both left-hand forms of the mod-8 identity with its product.

    ``printed_coefficients`` holds the (lhs, rhs) coefficients at the first
    mismatch of the uncorrected form, ``None`` if it never differs.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    rhs = slater_rhs(order)
    printed = slater_printed_lhs(order)
    k = first_mismatch(printed, rhs)
    coeffs = None if k is None else (printed[k], rhs[k])
    return SlaterResult(order, k, coeffs, first_mismatch(slater_corrected_lhs(order), rhs))


def _check_r(r: int) -> None:
    if r not in (1, 3):
        raise ValueError(f"r must be 1 or 3, got {r}")


def gen_A(r: int, order: int = DEFAULT_ORDER) -> QSeries:
    """Sum over the largest even part 2n of the A-class generating function."""
    _check_r(r)
    terms = (
        qs_mul(
            _inv_poch(Monomial(1, 2), 2, n, order),
            _inv_poch(Monomial(1, 2 * n + r), 2, None, order),
        ).shift(n * (n + 1))
        for n in range(order + 1)
        if n * (n + 1) <= order
    )
    return QSeries(_sum_terms(terms))


def gen_A_product(r: int, order: int = DEFAULT_ORDER) -> QSeries:
    """``1 / prod_{j>=0} (1 - q^(4j+r)) (1 - q^(4j+2))``: parts = r, 2 mod 4."""
    _check_r(r)
    return qs_inv(qs_mul(poch_inf(Monomial(1, r), 4, order), poch_inf(Monomial(1, 2), 4, order)))


def gen_B_signed(order: int = DEFAULT_ORDER) -> QSeries:
    terms = (
        qs_mul(
            _inv_poch(Monomial(1, 1), 2, n, order),
            poch_inf(Monomial(1, 2 * n + 2), 2, order),
        ).shift(2 * n * n)
        for n in range(order + 1)
        if 2 * n * n <= order
    )
    return QSeries(_sum_terms(terms))


def theta_4nn(order: int = DEFAULT_ORDER) -> QSeries:
    """``sum_{m in Z} q^(4m^2 + m)``."""
    c = [0] * (order + 1)
    m = 0
    while 4 * m * m - m <= order:
        for e in {4 * m * m + m, 4 * m * m - m}:
            if e <= order:
                c[e] += 1
        m += 1
    return QSeries(c)


def is_pentagonal4(n: int) -> bool:
    """True iff n = m(4m+1) or n = m(4m-1) for some m >= 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = 0
    while m * (4 * m - 1) <= n:
        if n in (m * (4 * m + 1), m * (4 * m - 1)):
            return True
        m += 1
    return False


def class_gf_from_enumeration(spec, order: int, *, signed: bool = False) -> QSeries:
    """Series whose q^n coefficient is the brute-force class count at n.

    With ``signed=True`` the B-class parity difference is used instead and
    ``spec`` may be ``None``.
    """
    specs = [] if signed else [spec]
    (series,) = class_gfs_from_enumeration(specs, order, signed_b=signed)
    return series


def class_gfs_from_enumeration(specs, order: int, *, signed_b: bool = False) -> list[QSeries]:
    """One enumeration pass per n feeding several class series at once.

    Returns one series per spec, followed by the signed B series when
    ``signed_b`` is set.
    """
    from .classes import tally

    rows = [tally(n, specs, signed_b=signed_b) for n in range(order + 1)]
    out = [QSeries(row.counts[i] for row in rows) for i in range(len(specs))]
    if signed_b:
        out.append(QSeries(row.signed_B.difference for row in rows))
    return out
