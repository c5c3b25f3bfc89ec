"""Independent reference implementations used only by the tests.

Nothing here imports the code paths it is used to check: partitions are
generated by plain recursion, class membership is encoded directly from
the set-level definitions, and p(n) comes from Euler's pentagonal
recurrence rather than from a product expansion.
"""
from functools import lru_cache


def brute_partitions(n, largest=None):
    """All partitions of n as nonincreasing tuples, by recursion on the largest part."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def pentagonal_p(n):
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * pentagonal_p(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * pentagonal_p(n - g2)
        k += 1
    return total


def peu_od(lam):
    """Odd parts distinct and greater than even parts."""
    odds = [x for x in lam if x % 2]
    evens = [x for x in lam if x % 2 == 0]
    return len(set(odds)) == len(odds) and all(o > e for o in odds for e in evens)


def o_d(lam):
    """Odd parts distinct; every odd integer below the largest odd part occurs."""
    odds = [x for x in lam if x % 2]
    if len(set(odds)) != len(odds):
        return False
    return not odds or set(range(1, max(odds) + 1, 2)) <= set(odds)


def set_D(lam, p, r):
    if any(x % p not in (0, r) for x in lam):
        return False
    rs = [x for x in lam if x % p == r]
    zs = [x for x in lam if x % p == 0]
    return len(set(rs)) == len(rs) and all(a > b for a in rs for b in zs)


def set_O(lam, p, r):
    if any(x % p not in (0, r) for x in lam):
        return False
    rs = sorted(x for x in lam if x % p == r)
    return rs == list(range(r, r + p * len(rs), p))


def set_A(lam, r):
    evens = {x for x in lam if x % 2 == 0}
    top = max(evens, default=0)
    if evens != set(range(2, top + 1, 2)):
        return False
    return all(x >= top + r for x in lam if x % 2)


def set_B(lam):
    """(branch, number of even parts) or None."""
    evens = [x for x in lam if x % 2 == 0]
    odds = [x for x in lam if x % 2]
    if len(set(evens)) != len(evens):
        return None
    if not odds:
        return ("a", len(evens))
    top = max(odds)
    if set(odds) != set(range(1, top + 1, 2)):
        return None
    if any(odds.count(v) < 2 for v in set(odds)):
        return None
    if any(e < top + 3 for e in evens):
        return None
    return ("b", len(evens))


def set_AP(lam, p):
    nm = sorted(x for x in lam if x % p)
    if not nm:
        return True
    return nm[0] < p and nm == list(range(nm[0], nm[0] + p * len(nm), p))


def set_DR(lam, p):
    nm = [x for x in lam if x % p]
    mult = [x for x in lam if x % p == 0]
    return (
        len(set(nm)) == len(nm)
        and len({x % p for x in nm}) <= 1
        and all(a > b for a in nm for b in mult)
    )


def poly_mul(a, b, T):
    out = [0] * (T + 1)
    for i, x in enumerate(a[: T + 1]):
        for j, y in enumerate(b[: T + 1 - i]):
            out[i + j] += x * y
    return out
