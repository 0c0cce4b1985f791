"""Univariate polynomials over a prime field F_p.

Coefficients are residues in ``range(p)``, stored in ascending degree with
no trailing zeros (the zero polynomial has no coefficients). The heavy
lifting is done by module-level helpers on raw coefficient lists; `FpPoly`
wraps them for callers.

Factorization follows the usual three stages: squarefree decomposition,
distinct-degree splitting, and Cantor-Zassenhaus equal-degree splitting
driven by a fixed-seed generator created per call.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .numtheory import factorint, require_prime

# Below this value of p * degree, linear factors are found by trying every
# residue instead of random splitting.
ROOT_SEARCH_LIMIT = 4096
_EDF_SEED = 0x5EED


# raw coefficient-list arithmetic ---------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _norm(a: Iterable[int], p: int) -> list[int]:
    return _trim([c % p for c in a])


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _sub(a, b, p):
    return _add(a, [-c % p for c in b], p)


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _norm(out, p)


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = r[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        _trim(r)
    return _trim(q), r


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _deriv(a, p):
    return _norm([k * c for k, c in enumerate(a)][1:], p)


def _powmod(base, e, mod, p):
    result = [1]
    base = _mod(base, mod, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _mod(_mul(base, base, p), mod, p)
    return result


def _eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


_X = [0, 1]


# squarefree decomposition ------------------------------------------------

def _sqf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a monic f: pairs (g, m) with g squarefree,
    pairwise coprime, and f = prod g^m."""
    out = []
    c = _gcd(f, _deriv(f, p), p)
    w = _divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        z = _divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = _divmod(c, y, p)[0]
    if len(c) > 1:
        # c' = 0, so c(x) = r(x^p) and, since a^p = a in F_p, c = r^p
        root = c[::p]
        out += [(g, m * p) for g, m in _sqf(root, p)]
    return out


# factorization -------------------------------------------------------------

def _ddf(f, p):
    """Split a squarefree monic f into (product of all degree-d factors, d)."""
    out = []
    h = list(_X)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, _X, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f, d, p, rng):
    """Irreducible factors of f, a product of distinct degree-d irreducibles."""
    deg = len(f) - 1
    if deg == d:
        return [f]
    if d == 1 and p * deg <= ROOT_SEARCH_LIMIT:
        return [[-r % p, 1] for r in range(p) if _eval(f, r, p) == 0]
    e = (p**d - 1) // 2
    while True:
        a = _norm([rng.randrange(p) for _ in range(deg)], p)
        if len(a) < 2:
            continue
        g = _gcd(a, f, p)
        if len(g) == 1:
            g = _gcd(_sub(_powmod(a, e, f, p), [1], p), f, p)
        if 1 < len(g) < len(f):
            return _edf(g, d, p, rng) + _edf(_divmod(f, g, p)[0], d, p, rng)


def _sort_key(g):
    return (len(g), tuple(g))


def _factor(f, p):
    rng = random.Random(_EDF_SEED)
    out = []
    for g, m in _sqf(_monic(f, p), p):
        for part, d in _ddf(g, p):
            out += [(h, m) for h in _edf(part, d, p, rng)]
    out.sort(key=lambda t: _sort_key(t[0]))
    return out


def _is_irreducible(f, p):
    n = len(f) - 1
    if n < 1:
        return False
    f = _monic(f, p)
    h = list(_X)
    powers = [None] * (n + 1)
    for k in range(1, n + 1):
        h = _powmod(h, p, f, p)
        powers[k] = h
    if _mod(_sub(powers[n], _X, p), f, p):
        return False
    for q in factorint(n):
        if len(_gcd(f, _sub(powers[n // q], _X, p), p)) > 1:
            return False
    return True


# public API ----------------------------------------------------------------

@dataclass(frozen=True)
class FpPoly:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], p: int) -> "FpPoly":
        """Build from integer coefficients (ascending degree), reducing mod p."""
        require_prime(p, odd=True)
        return cls(p, tuple(_norm(coeffs, p)))

    @classmethod
    def _raw(cls, coeffs: list[int], p: int) -> "FpPoly":
        return cls(p, tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def monic(self) -> "FpPoly":
        return FpPoly._raw(_monic(list(self.coeffs), self.p), self.p)

    def derivative(self) -> "FpPoly":
        return FpPoly._raw(_deriv(self.coeffs, self.p), self.p)

    def _check(self, other: "FpPoly") -> None:
        if not isinstance(other, FpPoly):
            raise TypeError("FpPoly expected")
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        return FpPoly._raw(_add(self.coeffs, other.coeffs, self.p), self.p)

    def __sub__(self, other):
        self._check(other)
        return FpPoly._raw(_sub(self.coeffs, other.coeffs, self.p), self.p)

    def __mul__(self, other):
        self._check(other)
        return FpPoly._raw(_mul(self.coeffs, other.coeffs, self.p), self.p)

    def __pow__(self, e: int):
        out = [1]
        for _ in range(e):
            out = _mul(out, self.coeffs, self.p)
        return FpPoly._raw(out, self.p)

    def __divmod__(self, other):
        self._check(other)
        q, r = _divmod(self.coeffs, other.coeffs, self.p)
        return FpPoly._raw(q, self.p), FpPoly._raw(r, self.p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        return _eval(self.coeffs, x, self.p)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(c) if (c != 1 or k == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms)


@dataclass(frozen=True)
class FpFactorization:
    unit: int
    factors: tuple[tuple[FpPoly, int], ...]
    p: int

    def expand(self) -> FpPoly:
        out = FpPoly._raw([self.unit] if self.unit else [], self.p)
        for g, m in self.factors:
            out = out * g**m
        return out

    def __str__(self) -> str:
        parts = []
        if self.unit != 1 or not self.factors:
            parts.append(str(self.unit))
        for g, m in self.factors:
            s = str(g) if g.coeffs == (0, 1) else f"({g})"
            parts.append(s if m == 1 else f"{s}^{m}")
        return " ".join(parts)


def gcd_fp(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd; zero only when both inputs are zero."""
    f._check(g)
    return FpPoly._raw(_gcd(list(f.coeffs), list(g.coeffs), f.p), f.p)


def squarefree_part(f: FpPoly) -> FpPoly:
    """Product of the distinct monic irreducible factors of f."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    out = [1]
    for g, _ in _sqf(_monic(list(f.coeffs), f.p), f.p):
        out = _mul(out, g, f.p)
    return FpPoly._raw(out, f.p)


def squarefree_decomposition(f: FpPoly) -> list[tuple[FpPoly, int]]:
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    return [(FpPoly._raw(g, f.p), m) for g, m in _sqf(_monic(list(f.coeffs), f.p), f.p)]


def factor_fp(f: FpPoly) -> FpFactorization:
    """Complete factorization into monic irreducibles, ordered by degree and
    then by coefficient tuple."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    factors = tuple((FpPoly._raw(g, f.p), m) for g, m in _factor(list(f.coeffs), f.p))
    return FpFactorization(f.coeffs[-1], factors, f.p)


def is_irreducible(f: FpPoly) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for
    every prime q dividing n = deg f."""
    return _is_irreducible(list(f.coeffs), f.p)


def multiple_irreducible_factors(f: FpPoly) -> list[FpPoly]:
    return [g for g, m in factor_fp(f).factors if m >= 2]


def lift_to_int(f: FpPoly) -> list[int]:
    """Integer polynomial with coefficients in {0, ..., p-1}."""
    return list(f.coeffs)


def reduce_mod_p(f: Sequence[int], p: int) -> FpPoly:
    return FpPoly.from_ints(f, p)
