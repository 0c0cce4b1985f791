"""Rational regular orthogonal matrices and generalized cospectral mates.

A rational Q with QᵀQ = I and Qe = e that conjugates A(G) to another 0/1
adjacency matrix witnesses a generalized cospectral mate H. When Q is not
a permutation matrix (level > 1), H is not isomorphic to G, so such a Q
certifies that G is not determined by its generalized spectrum.

All arithmetic is exact (``fractions.Fraction``); there are no tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactla as la
from .criteria import compute_invariants, walk_matrix
from .graphio import Graph, complement


class MatrixFormatError(ValueError):
    pass


RationalMatrix = la.RationalMatrix


def to_rational(m: Sequence[Sequence]) -> RationalMatrix:
    return [[Fraction(x) for x in row] for row in m]


def parse_rational_matrix(text: str) -> RationalMatrix:
    """Rows of whitespace-separated entries ``a`` or ``a/b``."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        row = []
        for tok in line.split():
            try:
                row.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise MatrixFormatError(f"line {lineno}: bad matrix entry {tok!r}") from None
        rows.append(row)
    if not rows:
        raise MatrixFormatError("no matrix rows found")
    n = len(rows)
    for lineno, row in enumerate(rows, 1):
        if len(row) != n:
            raise MatrixFormatError(f"matrix is not square: row {lineno} has {len(row)} entries, expected {n}")
    return rows


def format_rational_matrix(q: RationalMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in q) + "\n"


def level(q: RationalMatrix) -> int:
    """Least k >= 1 with kQ integral: the lcm of the entry denominators."""
    return math.lcm(1, *(x.denominator for row in q for x in row))


def is_regular_orthogonal(q: RationalMatrix) -> bool:
    n = len(q)
    if any(len(row) != n for row in q):
        return False
    if any(sum(row) != 1 for row in q):
        return False
    return la.mat_mul(la.transpose(q), q) == la.identity(n)


def _as_graph(m: Sequence[Sequence[Fraction]]) -> Graph | None:
    n = len(m)
    for i in range(n):
        if m[i][i] != 0:
            return None
        for j in range(n):
            if m[i][j] not in (0, 1) or m[i][j] != m[j][i]:
                return None
    return Graph.from_matrix([[int(x) for x in row] for row in m])


@dataclass
class Membership:
    member: bool
    mate: Graph | None
    reason: str

    def __bool__(self) -> bool:
        return self.member


def verify_membership(q: RationalMatrix, g: Graph) -> Membership:
    """Is Q in Q(G), i.e. regular orthogonal with QᵀAQ a graph's adjacency
    matrix? Orthogonality is checked first so a failure names its cause."""
    n = len(q)
    if n != g.n or any(len(row) != n for row in q):
        return Membership(False, None, "dimension mismatch")
    q = to_rational(q)
    if any(sum(row) != 1 for row in q):
        return Membership(False, None, "Qe != e")
    qt = la.transpose(q)
    if la.mat_mul(qt, q) != la.identity(n):
        return Membership(False, None, "QᵀQ != I")
    mate = _as_graph(la.mat_mul(la.mat_mul(qt, g.matrix()), q))
    if mate is None:
        return Membership(False, None, "QᵀAQ is not a symmetric 0/1 matrix with zero diagonal")
    return Membership(True, mate, "ok")


def q_from_walk_matrices(g: Graph, h: Graph) -> RationalMatrix:
    """The Q with Qᵀ = W(h) W(g)^-1; unique in RO_n(Q) with QᵀA(g)Q = A(h)
    whenever h is generalized cospectral with g."""
    if g.n != h.n:
        raise ValueError(f"order mismatch: {g.n} vs {h.n}")
    try:
        w_inv = la.rational_inverse(walk_matrix(g))
    except ZeroDivisionError:
        raise ValueError("g is not controllable (singular walk matrix)") from None
    return la.transpose(la.mat_mul(walk_matrix(h), w_inv))


def generalized_cospectral(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return (
        la.charpoly_exact(g.matrix()) == la.charpoly_exact(h.matrix())
        and la.charpoly_exact(complement(g).matrix()) == la.charpoly_exact(complement(h).matrix())
    )


def theta_invariance_check(g: Graph, h: Graph) -> bool:
    if not generalized_cospectral(g, h):
        raise ValueError("graphs are not generalized cospectral")
    return compute_invariants(g).theta == compute_invariants(h).theta


@dataclass
class QCertificate:
    q: RationalMatrix
    level: int
    source: Graph
    mate: Graph

    @property
    def refutes_dgs(self) -> bool:
        return self.level > 1


def make_certificate(q: RationalMatrix, g: Graph) -> QCertificate:
    """Verify ``q`` against ``g``; raises ValueError when Q is not in Q(G)."""
    res = verify_membership(q, g)
    if not res:
        raise ValueError(f"not a member of Q(G): {res.reason}")
    return QCertificate(to_rational(q), level(q), g, res.mate)
