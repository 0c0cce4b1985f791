"""Exact integer linear algebra on plain nested lists.

Matrices are ``list[list[int]]`` (row-major) and polynomials are coefficient
lists in ascending degree, trimmed so the last entry is nonzero; ``[]`` is
the zero polynomial. Python ints are unbounded, so nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .numtheory import require_prime

IntMatrix = list[list[int]]
IntPoly = list[int]
RationalMatrix = list[list[Fraction]]


# basic matrix helpers -------------------------------------------------------

def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int | None = None) -> IntMatrix:
    return [[0] * (rows if cols is None else cols) for _ in range(rows)]


def ones(n: int) -> IntMatrix:
    return [[1] * n for _ in range(n)]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _require_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError(f"expected a square matrix, got {n} rows of lengths {sorted({len(r) for r in m})}")
    return n


# determinant -----------------------------------------------------------------

def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = _require_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


# Smith normal form ---------------------------------------------------------

@dataclass
class SmithNormalForm:
    """Invariant factors ``diag`` (positive, each dividing the next) of an
    order-``n`` matrix of rank ``len(diag)``; when requested, unimodular
    ``left`` and ``right`` with ``left @ S @ right == m``."""

    diag: list[int]
    n: int
    left: IntMatrix | None = field(default=None, repr=False)
    right: IntMatrix | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def full_diag(self) -> list[int]:
        return self.diag + [0] * (self.n - len(self.diag))

    @property
    def last(self) -> int:
        """d_n, which is 0 for a singular matrix."""
        return self.full_diag[-1] if self.n else 1

    def matrix(self) -> IntMatrix:
        s = zeros(self.n)
        for i, d in enumerate(self.diag):
            s[i][i] = d
        return s

    def nullity_mod(self, p: int) -> int:
        return sum(1 for d in self.full_diag if d % p == 0)


def snf(m: Sequence[Sequence[int]], transforms: bool = False) -> SmithNormalForm:
    """Smith normal form by repeated smallest-entry pivoting.

    Row operations on the working matrix are mirrored as column operations
    on ``left`` (and column operations as row operations on ``right``) so
    that ``left @ work @ right == m`` holds throughout.
    """
    n = _require_square(m)
    a = [list(row) for row in m]
    left = identity(n) if transforms else None
    right = identity(n) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if left is not None:
            for row in left:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if right is not None:
            right[i], right[j] = right[j], right[i]

    def add_row(dst, src, c):  # row dst += c * row src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        if left is not None:
            for row in left:
                row[src] -= c * row[dst]

    def add_col(dst, src, c):  # col dst += c * col src
        for row in a:
            row[dst] += c * row[src]
        if right is not None:
            right[src] = [x - c * y for x, y in zip(right[src], right[dst])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if left is not None:
            for row in left:
                row[i] = -row[i]

    diag = []
    for t in range(n):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # a nonzero remainder is smaller than the pivot: move it in
                best = min(
                    [(abs(a[i][t]), i, t) for i in range(t + 1, n) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                )
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            piv = a[t][t]
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)
        diag.append(a[t][t])
    return SmithNormalForm(diag, n, left, right)


# characteristic polynomial, resultants ----------------------------------

def poly_trim(f: Sequence[int]) -> IntPoly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_derivative(f: Sequence[int]) -> IntPoly:
    return poly_trim([k * c for k, c in enumerate(f)][1:])


def poly_eval(f: Sequence[int], x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def charpoly_exact(m: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - m) by Faddeev-LeVerrier; every division is exact because
    the power sums of the eigenvalues of an integer matrix are integers."""
    n = _require_square(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [list(row) for row in m]
    mk = zeros(n)
    for k in range(1, n + 1):
        c = coeffs[n - k + 1]
        mk = mat_mul(a, mk)
        for i in range(n):
            mk[i][i] += c
        # trace(a @ mk) without forming the product
        tr = sum(x * y for row, col in zip(a, zip(*mk)) for x, y in zip(row, col))
        q, r = divmod(-tr, k)
        assert r == 0, "non-exact Faddeev-LeVerrier division"
        coeffs[n - k] = q
    return coeffs


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> IntMatrix:
    f, g = poly_trim(f), poly_trim(g)
    df, dg = len(f) - 1, len(g) - 1
    size = df + dg
    rows = []
    for i in range(dg):
        row = [0] * size
        for k, c in enumerate(reversed(f)):
            row[i + k] = c
        rows.append(row)
    for i in range(df):
        row = [0] * size
        for k, c in enumerate(reversed(g)):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    f, g = poly_trim(f), poly_trim(g)
    if not f or not g:
        return 0
    return det_exact(sylvester_matrix(f, g))


def discriminant(f: Sequence[int]) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f) for f of degree n >= 1."""
    f = poly_trim(f)
    if not f:
        raise ValueError("discriminant of the zero polynomial")
    n = len(f) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant(f, poly_derivative(f))
    q, r = divmod(res, f[-1])
    assert r == 0
    return -q if (n * (n - 1) // 2) % 2 else q


# arithmetic mod p ----------------------------------------------------------

def _rref_mod(m: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    require_prime(p)
    return len(_rref_mod(m, p)[1])


def nullity_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    require_prime(p)
    cols = len(m[0]) if m else 0
    return cols - len(_rref_mod(m, p)[1])


def nullspace_mod_p(m: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of {z : m z = 0 over F_p}, entries in 0..p-1."""
    require_prime(p)
    cols = len(m[0]) if m else 0
    a, pivots = _rref_mod(m, p)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        z = [0] * cols
        z[free] = 1
        for r, c in enumerate(pivots):
            z[c] = -a[r][free] % p
        basis.append(z)
    return basis


# rational inverse, polynomial evaluation ---------------------------------

def rational_inverse(m: Sequence[Sequence[int]]) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan over Fraction (always reduced)."""
    n = _require_square(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def mat_poly_eval(f: Sequence[int], m: Sequence[Sequence[int]]) -> IntMatrix:
    """f(m) by Horner's scheme."""
    n = _require_square(m)
    f = poly_trim(f)
    out = zeros(n)
    for c in reversed(f):
        out = mat_mul(out, m)
        for i in range(n):
            out[i][i] += c
    return out
