"""Integer primality, factorization and p-adic valuation."""

from __future__ import annotations

import math
from functools import lru_cache

TRIAL_LIMIT = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases; deterministic below
    3.3e24, and a strong probable-prime test above."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
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


def require_prime(p: int, odd: bool = False) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    if odd and p == 2:
        raise ValueError("an odd prime is required, got 2")


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _pollard_brent(n: int) -> int:
    # Deterministic parameter schedule so factorizations are reproducible.
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as {prime: exponent}, sorted by prime."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for q in _small_primes():
        if q * q > n:
            break
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m < TRIAL_LIMIT**2 or is_prime(m):
            # no factor below TRIAL_LIMIT remains, so m < TRIAL_LIMIT**2 is prime
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def valuation(m: int, p: int) -> int | None:
    """Exponent of p in m, or None when m == 0 (valuation infinity)."""
    if m == 0:
        return None
    m = abs(m)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def format_factorization(n: int, times: str = "×", limit: int = 10**24) -> str:
    """Human form such as ``-3²×23``; 0, ±1 and values of magnitude above
    ``limit`` (whose factorization could take too long) are printed as-is."""
    if n in (0, 1, -1) or abs(n) > limit:
        return str(n)
    sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
    parts = [str(q) if e == 1 else f"{q}{str(e).translate(sup)}" for q, e in factorint(n).items()]
    return ("-" if n < 0 else "") + times.join(parts)
