"""Small integer helpers: primality, factorization, partitions.

Everything here operates on group orders, which stay in the low thousands,
so trial division is plenty.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotPrime


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    """Return p, raising NotPrime if it is not prime."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}, keys ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending."""
    return [p for p in range(2, n + 1) if is_prime(p)]


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of k as descending tuples, lexicographically descending.

    partitions(0) is ((),): the single empty partition.
    """
    if k == 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(k, k, ())
    return tuple(out)


def abelian_type_list(n: int) -> list[tuple[int, ...]]:
    """Isomorphism types of abelian groups of order n.

    Each type is a tuple of prime-power cyclic factor orders, sorted
    ascending, one tuple per type. Types are returned sorted.
    """
    types: list[list[int]] = [[]]
    for p, e in factorize(n).items():
        grown = []
        for lam in partitions(e):
            factors = [p ** part for part in lam]
            for base in types:
                grown.append(base + factors)
        types = grown
    result = sorted(tuple(sorted(t)) for t in types)
    return result
