"""Divisor sums and the exact integer recursion for the overpartition counting function.

Three arithmetic functions drive everything downstream:

    sigma(n)      sum of the positive divisors of n
    tau_alt(n)    alternating divisor sum  sum_{d | n} (-1)^(n/d) * d
    sigma_bar(n)  2^(m+1) * sigma(l)  where n = 2^m * l with l odd

They are linked by the identity sigma - tau_alt = sigma_bar.  sigma_bar is
computed from the 2-adic valuation directly and the difference sigma - tau_alt
only serves as a cross-check, so a bug in one path cannot mask the other.

pbar(n), the number of overpartitions of n, satisfies the exact integer
recursion

    n * pbar(n) = sum_{k=1..n} sigma_bar(k) * pbar(n - k),      pbar(0) = 1,

where the division by n is always exact.  The full prefix pbar(0..n) is
memoized because every verification pass consumes contiguous ranges; the memo
grows under a lock, and concurrent reads after a sequential warm-up are safe.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import isqrt

__all__ = ["divisors", "sigma", "tau_alt", "sigma_bar", "pbar_exact", "pbar_prefix"]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending.  Trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"divisors undefined for n={n}; need n >= 1")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


@lru_cache(maxsize=None)
def sigma(n: int) -> int:
    """Sum of the positive divisors of n >= 1."""
    return sum(divisors(n))


def tau_alt(n: int) -> int:
    """Alternating divisor sum  sum_{d | n} (-1)^(n/d) * d.  May be negative."""
    return sum(d if (n // d) % 2 == 0 else -d for d in divisors(n))


def sigma_bar(n: int) -> int:
    """2^(m+1) * sigma(l) for n = 2^m * l with l odd.  Equals sigma(n) - tau_alt(n)."""
    if n < 1:
        raise ValueError(f"sigma_bar undefined for n={n}; need n >= 1")
    m = 0
    l = n
    while l % 2 == 0:
        l //= 2
        m += 1
    return (2 << m) * sigma(l)


_pbar_memo: list[int] = [1]
_pbar_lock = threading.Lock()


def pbar_prefix(n: int) -> list[int]:
    """The list [pbar(0), ..., pbar(n)] from the integer recursion."""
    if n < 0:
        raise ValueError(f"pbar undefined for n={n}; need n >= 0")
    if len(_pbar_memo) <= n:
        with _pbar_lock:
            while len(_pbar_memo) <= n:
                m = len(_pbar_memo)
                total = sum(sigma_bar(k) * _pbar_memo[m - k] for k in range(1, m + 1))
                q, r = divmod(total, m)
                if r:
                    raise ArithmeticError(
                        f"pbar recursion divided inexactly at n={m}: {total} % {m} = {r}"
                    )
                _pbar_memo.append(q)
    return _pbar_memo[: n + 1]


def pbar_exact(n: int) -> int:
    """Number of overpartitions of n, exact."""
    return pbar_prefix(n)[n]
