"""Small number-theoretic helpers: gcd, primality, Fibonacci numbers, sieves."""
from __future__ import annotations

import math
from typing import Iterator

from .errors import InvalidParameter

# Bases sufficient for a deterministic Miller-Rabin test below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise InvalidParameter(f"gcd expects positive integers, got {a}, {b}")
    return math.gcd(a, b)


def coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_mersenne_prime_exponent(k: int) -> bool:
    return k >= 2 and is_prime(2**k - 1)


def fibonacci(i: int) -> int:
    """F_i with F_1 = F_2 = 1."""
    if i < 1:
        raise InvalidParameter(f"Fibonacci index must be >= 1, got {i}")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def fibonacci_numbers() -> Iterator[int]:
    a, b = 1, 1
    while True:
        yield a
        a, b = b, a + b


def smallest_prime_factors(limit: int) -> list[int]:
    """spf[x] for 0 <= x <= limit (spf[0] = spf[1] = 0)."""
    spf = list(range(limit + 1))
    if limit >= 0:
        spf[0] = 0
    if limit >= 1:
        spf[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def distinct_prime_factors(x: int, spf: list[int]) -> list[int]:
    out = []
    while x > 1:
        p = spf[x]
        out.append(p)
        while x % p == 0:
            x //= p
    return out
