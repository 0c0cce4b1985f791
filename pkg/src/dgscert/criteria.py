"""Arithmetic DGS criteria for controllable graphs.

Every prime that can divide the level of a rational regular orthogonal
matrix in Q(G) is an odd prime whose square divides theta(G) (once theta is
odd). Each such prime is examined by up to three tests, any one of which
rules it out:

* the Exclusion Condition (EC), when rank_p W = n - 1;
* the Improved Condition (IC), when p divides d_n(W) exactly once;
* the main condition: for every multiple irreducible factor phi of
  Phi_p = gcd(chi(A), chi(A+J)) over F_p,
  min(ord_p det phi(A), ord_p det phi(A+J)) == deg phi.

A graph is certified when every such prime is ruled out by the tests the
selected mode allows.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import exactla as la
from .fpoly import (
    FpPoly,
    factor_fp,
    gcd_fp,
    lift_to_int,
    reduce_mod_p,
    squarefree_part,
)
from .graphio import Graph
from .numtheory import factorint, require_prime, valuation


class Mode(str, enum.Enum):
    OLD_ONLY = "OLD_ONLY"
    OLD_EC_IC = "OLD_EC_IC"
    MAIN_ONLY = "MAIN_ONLY"
    COMBINED = "COMBINED"


class Status(str, enum.Enum):
    DGS_CERTIFIED = "DGS_CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_CONTROLLABLE = "NOT_CONTROLLABLE"
    THETA_EVEN = "THETA_EVEN"


class InternalCheckError(AssertionError):
    """A computed quantity contradicts a proven identity; indicates a bug."""


@dataclass(frozen=True)
class OrdValue:
    """A p-adic valuation; ``value`` is None for ord_p(0) = infinity."""

    value: int | None

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: "OrdValue") -> bool:
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def __le__(self, other: "OrdValue") -> bool:
        return self == other or self < other

    def __ge__(self, other: "OrdValue") -> bool:
        return other <= self

    def __gt__(self, other: "OrdValue") -> bool:
        return other < self

    def at_least(self, k: int) -> bool:
        return self.value is None or self.value >= k

    def to_json(self):
        return "inf" if self.value is None else self.value

    def __str__(self) -> str:
        return "∞" if self.value is None else str(self.value)


INFINITY = OrdValue(None)


def ord_p(m: int, p: int) -> OrdValue:
    require_prime(p)
    return OrdValue(valuation(m, p))


@dataclass
class SpectralInvariants:
    n: int
    walk: la.IntMatrix
    det_walk: int
    halved_det: int
    charpoly: la.IntPoly
    charpoly_aj: la.IntPoly
    delta: int
    theta: int
    snf_walk: la.SmithNormalForm

    @property
    def controllable(self) -> bool:
        return self.det_walk != 0


@dataclass
class FactorCheck:
    phi: FpPoly
    deg: int
    det_a: int
    det_aj: int
    ord_a: OrdValue
    ord_aj: OrdValue

    @property
    def min_ord(self) -> OrdValue:
        return min(self.ord_a, self.ord_aj)

    @property
    def holds(self) -> bool:
        return self.min_ord.value == self.deg


@dataclass
class ConditionResult:
    applicable: bool
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class MainConditionResult:
    passed: bool
    factors: list[FactorCheck]


@dataclass
class PrimeAnalysis:
    p: int
    phi_p: FpPoly
    multiplicity_in_theta: int
    nullity: int
    ec: ConditionResult
    ic: ConditionResult
    main: MainConditionResult

    @property
    def multiple_factors(self) -> list[FactorCheck]:
        return self.main.factors

    @property
    def main_passed(self) -> bool:
        return self.main.passed

    def excluded_by(self, mode: Mode) -> list[str]:
        """Criterion tags that rule this prime out under ``mode``."""
        tags = []
        if mode in (Mode.OLD_EC_IC, Mode.COMBINED):
            if self.ec.passed:
                tags.append("EC")
            if self.ic.passed:
                tags.append("IC")
        if mode in (Mode.MAIN_ONLY, Mode.COMBINED) and self.main.passed:
            tags.append("MAIN")
        return tags


@dataclass
class Verdict:
    status: Status
    mode: Mode
    certified_by: list[str]
    unresolved_primes: list[int]
    invariants: SpectralInvariants
    analyses: list[PrimeAnalysis]

    @property
    def certified(self) -> bool:
        return self.status is Status.DGS_CERTIFIED


# invariants ----------------------------------------------------------------

def adjacency_plus_j(g: Graph) -> la.IntMatrix:
    return [[a + 1 for a in row] for row in g.adj]


def walk_matrix(g: Graph) -> la.IntMatrix:
    """W = [e, Ae, ..., A^(n-1) e]."""
    col = [1] * g.n
    cols = [col]
    for _ in range(g.n - 1):
        col = [sum(c for a, c in zip(row, col) if a) for row in g.adj]
        cols.append(col)
    return la.transpose(cols)


def compute_invariants(g: Graph) -> SpectralInvariants:
    n = g.n
    w = walk_matrix(g)
    det_w = la.det_exact(w)
    half, rem = divmod(det_w, 2 ** (n // 2))
    if rem:
        raise InternalCheckError(f"2^{n // 2} does not divide det W = {det_w}")
    chi = la.charpoly_exact(g.matrix())
    chi_aj = la.charpoly_exact(adjacency_plus_j(g))
    delta = la.discriminant(chi)
    if n >= 2 and delta % 2:
        raise InternalCheckError(f"discriminant {delta} is odd")
    theta = math.gcd(half, delta)
    inv = SpectralInvariants(n, w, det_w, half, chi, chi_aj, delta, theta, la.snf(w))
    if inv.controllable and delta <= 0:
        raise InternalCheckError("controllable graph with non-positive discriminant")
    return inv


def phi_p(g: Graph, p: int, inv: SpectralInvariants | None = None) -> FpPoly:
    """gcd over F_p of chi(A; x) and chi(A + J; x)."""
    require_prime(p, odd=True)
    if inv is None:
        chi, chi_aj = la.charpoly_exact(g.matrix()), la.charpoly_exact(adjacency_plus_j(g))
    else:
        chi, chi_aj = inv.charpoly, inv.charpoly_aj
    return gcd_fp(reduce_mod_p(chi, p), reduce_mod_p(chi_aj, p))


def theta_prime_classification(inv: SpectralInvariants) -> tuple[list[int], list[int]]:
    """(simple primes, multiple primes) of theta."""
    if inv.theta == 0:
        raise ValueError("theta is 0: the graph is not controllable")
    fac = factorint(inv.theta)
    return ([q for q, e in fac.items() if e == 1], [q for q, e in fac.items() if e >= 2])


def check_theorem_old(inv: SpectralInvariants) -> bool:
    """theta odd and squarefree."""
    if inv.theta == 0:
        return False
    return inv.theta % 2 == 1 and all(e == 1 for e in factorint(inv.theta).values())


# per-prime conditions ----------------------------------------------------

def check_exclusion_condition(
    g: Graph, p: int, inv: SpectralInvariants | None = None
) -> ConditionResult:
    require_prime(p, odd=True)
    inv = inv or compute_invariants(g)
    rank = la.rank_mod_p(inv.walk, p)
    if g.n - rank != inv.snf_walk.nullity_mod(p):
        raise InternalCheckError(f"rank_{p} W disagrees with the Smith form")
    if rank != g.n - 1:
        return ConditionResult(False, False, {"rank_p": rank})
    (z,) = la.nullspace_mod_p(la.transpose(inv.walk), p)
    norm = sum(x * x for x in z) % p
    return ConditionResult(True, norm != 0, {"rank_p": rank, "z0": z, "z0_norm_mod_p": norm})


def check_improved_condition(
    g: Graph, p: int, inv: SpectralInvariants | None = None, phi: FpPoly | None = None
) -> ConditionResult:
    require_prime(p, odd=True)
    inv = inv or compute_invariants(g)
    dn = inv.snf_walk.last
    if valuation(dn, p) != 1:
        return ConditionResult(False, False, {"ord_p_dn": ord_p(dn, p).to_json()})
    phi = phi if phi is not None else phi_p(g, p, inv)
    sfp_deg = squarefree_part(phi).degree
    nullity = inv.snf_walk.nullity_mod(p)
    return ConditionResult(
        True, sfp_deg == nullity, {"ord_p_dn": 1, "sfp_degree": sfp_deg, "nullity_p": nullity}
    )


def check_main_condition(
    g: Graph, p: int, inv: SpectralInvariants | None = None, phi: FpPoly | None = None
) -> MainConditionResult:
    require_prime(p, odd=True)
    phi = phi if phi is not None else phi_p(g, p, inv)
    a = g.matrix()
    aj = adjacency_plus_j(g)
    checks = []
    for f, m in factor_fp(phi).factors:
        if m < 2:
            continue
        lifted = lift_to_int(f)
        det_a = la.det_exact(la.mat_poly_eval(lifted, a))
        det_aj = la.det_exact(la.mat_poly_eval(lifted, aj))
        fc = FactorCheck(f, f.degree, det_a, det_aj, ord_p(det_a, p), ord_p(det_aj, p))
        if not fc.min_ord.at_least(fc.deg):
            raise InternalCheckError(f"min ord_{p} below deg for factor {f}")
        checks.append(fc)
    return MainConditionResult(all(fc.holds for fc in checks), checks)


def analyze_prime(g: Graph, p: int, inv: SpectralInvariants) -> PrimeAnalysis:
    phi = phi_p(g, p, inv)
    return PrimeAnalysis(
        p=p,
        phi_p=phi,
        multiplicity_in_theta=valuation(inv.theta, p) or 0,
        nullity=inv.snf_walk.nullity_mod(p),
        ec=check_exclusion_condition(g, p, inv),
        ic=check_improved_condition(g, p, inv, phi),
        main=check_main_condition(g, p, inv, phi),
    )


# decision --------------------------------------------------------------------

def _decide(mode: Mode, inv: SpectralInvariants, analyses: list[PrimeAnalysis]) -> Verdict:
    if not inv.controllable:
        return Verdict(Status.NOT_CONTROLLABLE, mode, [], [], inv, [])
    if inv.theta % 2 == 0:
        return Verdict(Status.THETA_EVEN, mode, [], [], inv, [])
    unresolved = []
    tags: set[str] = set()
    for pa in analyses:
        if mode is Mode.OLD_ONLY:
            unresolved.append(pa.p)
            continue
        used = pa.excluded_by(mode)
        if used:
            tags.update(used)
        else:
            unresolved.append(pa.p)
    if unresolved:
        return Verdict(Status.INCONCLUSIVE, mode, [], unresolved, inv, analyses)
    certified_by = [t for t in ("EC", "IC", "MAIN") if t in tags] if analyses else ["OLD"]
    return Verdict(Status.DGS_CERTIFIED, mode, certified_by, [], inv, analyses)


def analyze_all(g: Graph, modes=tuple(Mode)) -> dict[Mode, Verdict]:
    """Verdicts for several modes sharing one set of computed invariants."""
    modes = [Mode(m) for m in modes]
    inv = compute_invariants(g)
    analyses = []
    if inv.controllable and inv.theta % 2 == 1:
        _, multiple = theta_prime_classification(inv)
        analyses = [analyze_prime(g, p, inv) for p in multiple]
    return {m: _decide(m, inv, analyses) for m in modes}


def analyze(g: Graph, mode: Mode | str = Mode.COMBINED) -> Verdict:
    mode = Mode(mode)
    return analyze_all(g, (mode,))[mode]
