"""Command-line interface.

Exit codes (stable):
  0   certified (analyze) / verified certificate (verify-q) / success
  2   input error
  10  inconclusive
  20  not controllable, or theta even
  30  matrix is not a member of Q(G)
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from . import report
from .cospectral import MatrixFormatError, level, parse_rational_matrix, verify_membership
from .criteria import Mode, Status, analyze, compute_invariants
from .experiment import ExperimentConfig, default_workers, run_experiment
from .graphio import DEFAULT_MAX_ORDER, GraphFormatError, parse_graph, to_graph6
from .numtheory import factorint

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 10
EXIT_NOT_APPLICABLE = 20
EXIT_NOT_MEMBER = 30

_STATUS_EXIT = {
    Status.DGS_CERTIFIED: EXIT_OK,
    Status.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    Status.NOT_CONTROLLABLE: EXIT_NOT_APPLICABLE,
    Status.THETA_EVEN: EXIT_NOT_APPLICABLE,
}

FIXTURE_PREFIX = "fixture:"


class InputError(Exception):
    pass


def fixture_names() -> list[str]:
    return sorted(f.name for f in resources.files("dgscert.fixtures").iterdir()
                  if f.is_file() and not f.name.startswith(("_", ".")))


def read_fixture(name: str) -> str:
    names = fixture_names()
    if name not in names:
        # bare names resolve to the transcribed matrix first
        found = next((name + ext for ext in (".txt", ".g6") if name + ext in names), None)
        if found is None:
            raise InputError(f"unknown fixture {name!r}")
        name = found
    return resources.files("dgscert.fixtures").joinpath(name).read_text()


def read_source(src: str | None) -> str:
    if src is None or src == "-":
        return sys.stdin.read()
    if src.startswith(FIXTURE_PREFIX):
        return read_fixture(src[len(FIXTURE_PREFIX):])
    try:
        with open(src) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {src}: {exc.strerror}") from None


def load_graph(src: str | None, max_order: int | None):
    text = read_source(src)
    try:
        return parse_graph(text, max_order)
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{src or '<stdin>'}: {exc}") from None


def cmd_analyze(args) -> int:
    g = load_graph(args.input, args.max_order)
    v = analyze(g, args.mode)
    if args.format == "json":
        out = report.to_json(report.verdict_dict(g, v))
    elif args.format == "csv":
        out = report.verdict_csv([(g, v)])
    else:
        out = report.verdict_text(g, v)
    sys.stdout.write(out)
    return _STATUS_EXIT[v.status]


def cmd_invariants(args) -> int:
    g = load_graph(args.input, args.max_order)
    inv = compute_invariants(g)
    if args.format == "json":
        sys.stdout.write(report.to_json({"schema": report.SCHEMA_VERSION, "graph6": to_graph6(g),
                                         **report.invariants_dict(inv)}))
    else:
        sys.stdout.write(report.invariants_text(g, inv))
    return EXIT_OK


def cmd_verify_q(args) -> int:
    g = load_graph(args.graph, args.max_order)
    try:
        q = parse_rational_matrix(read_source(args.q))
    except MatrixFormatError as exc:
        raise InputError(f"{args.q}: {exc}") from None
    if len(q) != g.n:
        raise InputError(f"dimension mismatch: graph has order {g.n}, Q is {len(q)}x{len(q)}")
    res = verify_membership(q, g)
    out = {"schema": report.SCHEMA_VERSION, "graph6": to_graph6(g), "member": res.member,
           "reason": res.reason, "level": level(q)}
    if res.member:
        inv = compute_invariants(g)
        lv = out["level"]
        out["mate_graph6"] = to_graph6(res.mate)
        out["refutes_dgs"] = lv > 1
        out["level_divides_dn"] = inv.snf_walk.last % lv == 0
        out["level_divides_det_walk"] = inv.det_walk % lv == 0
        out["level_primes_divide_delta"] = all(inv.delta % p == 0 for p in factorint(lv)) if lv > 1 else True
    if args.format == "json":
        sys.stdout.write(report.to_json(out))
    else:
        for k, v in out.items():
            if k != "schema":
                sys.stdout.write(f"{k}: {v}\n")
    return EXIT_OK if res.member else EXIT_NOT_MEMBER


def cmd_experiment(args) -> int:
    modes = tuple(Mode(m) for m in args.modes.split(",")) if args.modes else tuple(Mode)
    config = ExperimentConfig(args.n, args.samples, args.seed, modes, args.workers)
    rep = run_experiment(config, verbose=args.verbose)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_csv())
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        sys.stdout.write("".join(f"{name}\n" for name in fixture_names()))
    else:
        if not args.name:
            raise InputError("fixtures cat needs a fixture name")
        sys.stdout.write(read_fixture(args.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dgscert",
        description="Certify controllable graphs as determined by their generalized spectrum.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                       help="refuse graphs larger than this (default %(default)s)")

    src_help = "graph file (graph6 or 0/1 matrix), '-' for stdin, or fixture:NAME"
    p = sub.add_parser("analyze", help="run the DGS criteria on a graph")
    p.add_argument("input", nargs="?", help=src_help)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.COMBINED.value)
    p.add_argument("--format", choices=["json", "csv", "human"], default="human")
    graph_opts(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("invariants", help="print det W, Delta, theta, SNF(W), Phi_p")
    p.add_argument("input", nargs="?", help=src_help)
    p.add_argument("--format", choices=["json", "human"], default="human")
    graph_opts(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify-q", help="verify a rational regular orthogonal certificate")
    p.add_argument("graph", help=src_help)
    p.add_argument("q", help="matrix file with entries a or a/b, or fixture:NAME")
    p.add_argument("--format", choices=["json", "human"], default="human")
    graph_opts(p)
    p.set_defaults(func=cmd_verify_q)

    p = sub.add_parser("experiment", help="seeded G(n,1/2) batch comparing criteria")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--modes", help="comma-separated subset of " + ",".join(m.value for m in Mode))
    p.add_argument("--workers", type=int, default=default_workers(),
                   help="worker processes (default from $DGSCERT_WORKERS, else 1)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--verbose", action="store_true", help="include per-graph records (json)")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("fixtures", help="list or print bundled fixtures")
    p.add_argument("action", choices=["list", "cat"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"dgscert: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"dgscert: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
