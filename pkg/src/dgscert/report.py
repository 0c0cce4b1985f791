"""Serialization of verdicts and invariants to JSON, CSV and plain text."""

from __future__ import annotations

import csv
import io
import json

from .criteria import (
    ConditionResult,
    PrimeAnalysis,
    SpectralInvariants,
    Verdict,
    phi_p,
    theta_prime_classification,
)
from .fpoly import factor_fp
from .graphio import Graph, to_graph6
from .numtheory import factorint, format_factorization

SCHEMA_VERSION = 1


def _condition(c: ConditionResult) -> dict:
    return {"applicable": c.applicable, "passed": c.passed, **c.detail}


def invariants_dict(inv: SpectralInvariants) -> dict:
    d = {
        "n": inv.n,
        "controllable": inv.controllable,
        "det_walk": inv.det_walk,
        "halved_det": inv.halved_det,
        "delta": inv.delta,
        "theta": inv.theta,
        "snf_walk": inv.snf_walk.full_diag,
    }
    if inv.controllable and inv.theta:
        d["theta_factorization"] = {str(q): e for q, e in factorint(inv.theta).items()}
    return d


def prime_dict(pa: PrimeAnalysis, mode) -> dict:
    return {
        "p": pa.p,
        "theta_multiplicity": pa.multiplicity_in_theta,
        "phi_p": str(factor_fp(pa.phi_p)),
        "nullity_p": pa.nullity,
        "ec": _condition(pa.ec),
        "ic": _condition(pa.ic),
        "main": {
            "passed": pa.main.passed,
            "factors": [
                {
                    "phi": str(fc.phi),
                    "deg": fc.deg,
                    "det_phi_a": fc.det_a,
                    "det_phi_aj": fc.det_aj,
                    "ord_a": fc.ord_a.to_json(),
                    "ord_aj": fc.ord_aj.to_json(),
                    "holds": fc.holds,
                }
                for fc in pa.main.factors
            ],
        },
        "excluded_by": pa.excluded_by(mode),
    }


def verdict_dict(g: Graph, v: Verdict) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "graph6": to_graph6(g),
        "mode": v.mode.value,
        "status": v.status.value,
        "certified_by": v.certified_by,
        "unresolved_primes": v.unresolved_primes,
        "invariants": invariants_dict(v.invariants),
        "primes": [prime_dict(pa, v.mode) for pa in v.analyses],
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


VERDICT_CSV_FIELDS = ["graph6", "n", "mode", "status", "theta", "halved_det",
                      "certified_by", "unresolved_primes"]


def verdict_csv(rows: list[tuple[Graph, Verdict]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(VERDICT_CSV_FIELDS)
    for g, v in rows:
        w.writerow([
            to_graph6(g), g.n, v.mode.value, v.status.value, v.invariants.theta,
            v.invariants.halved_det, ";".join(v.certified_by),
            ";".join(map(str, v.unresolved_primes)),
        ])
    return buf.getvalue()


def invariants_text(g: Graph, inv: SpectralInvariants) -> str:
    lines = [f"graph6: {to_graph6(g)}", f"n: {inv.n}"]
    if not inv.controllable:
        lines.append("not controllable: det W = 0")
        return "\n".join(lines) + "\n"
    h = inv.n // 2
    lines += [
        f"det W: {inv.det_walk}",
        f"2^-{h} det W: {inv.halved_det} = {format_factorization(inv.halved_det)}",
        f"Delta: {inv.delta}",
        f"theta: {inv.theta} = {format_factorization(inv.theta)}",
        "SNF(W): " + ",".join(map(str, inv.snf_walk.full_diag)),
        f"d_n(W): {format_factorization(inv.snf_walk.last)}",
    ]
    if inv.theta % 2 == 0:
        lines.append("theta is even: criteria do not apply")
        return "\n".join(lines) + "\n"
    _, multiple = theta_prime_classification(inv)
    for p in multiple:
        lines.append(f"Phi_{p}: {factor_fp(phi_p(g, p, inv))}")
    return "\n".join(lines) + "\n"


def verdict_text(g: Graph, v: Verdict) -> str:
    out = [invariants_text(g, v.invariants).rstrip("\n")]
    for pa in v.analyses:
        out.append(f"prime {pa.p} (ord in theta {pa.multiplicity_in_theta}, nullity_p W {pa.nullity}):")
        out.append(f"  Phi_{pa.p} = {factor_fp(pa.phi_p)}")
        for tag, c in (("EC", pa.ec), ("IC", pa.ic)):
            state = "not applicable" if not c.applicable else ("passed" if c.passed else "failed")
            out.append(f"  {tag}: {state}")
        for fc in pa.main.factors:
            out.append(
                f"  main, phi = {fc.phi}: det phi(A) = {format_factorization(fc.det_a)}, "
                f"det phi(A+J) = {format_factorization(fc.det_aj)}, "
                f"min ord = {fc.min_ord} vs deg {fc.deg} -> {'T' if fc.holds else 'F'}"
            )
        if not pa.main.factors:
            out.append("  main: no multiple irreducible factor (holds vacuously)")
        used = pa.excluded_by(v.mode)
        out.append(f"  excluded by: {', '.join(used) if used else 'nothing'}")
    out.append(f"mode: {v.mode.value}")
    out.append(f"status: {v.status.value}")
    if v.certified_by:
        out.append(f"certified by: {', '.join(v.certified_by)}")
    if v.unresolved_primes:
        out.append("unresolved primes: " + ", ".join(map(str, v.unresolved_primes)))
    return "\n".join(out) + "\n"
