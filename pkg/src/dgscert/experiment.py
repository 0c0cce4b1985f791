"""Seeded batch runs over G(n, 1/2) comparing the criterion families.

Graph ``i`` of a run is a pure function of (seed, i), and results are folded
in index order, so the report does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .criteria import Mode, Status, analyze_all
from .graphio import random_gnp_half, to_graph6

WORKERS_ENV = "DGSCERT_WORKERS"
_CHUNK = 250


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    samples: int
    seed: int
    modes: tuple[Mode, ...] = tuple(Mode)
    workers: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.samples < 0:
            raise ValueError("samples must be nonnegative")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if not self.modes:
            raise ValueError("at least one mode is required")
        object.__setattr__(self, "modes", tuple(sorted({Mode(m) for m in self.modes},
                                                       key=list(Mode).index)))


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    total: int = 0
    not_controllable: int = 0
    theta_odd: int = 0
    certified: dict[Mode, int] = field(default_factory=dict)
    records: list[dict] | None = None

    def check(self) -> None:
        for m, c in self.certified.items():
            if not c <= self.theta_odd <= self.total:
                raise AssertionError(f"counter chain violated for {m.value}")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "samples", "seed", "theta_odd"] + [m.value for m in self.config.modes])
        w.writerow([self.config.n, self.total, self.config.seed, self.theta_odd]
                   + [self.certified[m] for m in self.config.modes])
        return buf.getvalue()

    def to_json(self) -> str:
        d = {
            "schema": 1,
            "n": self.config.n,
            "samples": self.total,
            "seed": self.config.seed,
            "not_controllable": self.not_controllable,
            "theta_odd": self.theta_odd,
            "certified": {m.value: self.certified[m] for m in self.config.modes},
        }
        if self.records is not None:
            d["records"] = self.records
        return json.dumps(d, indent=2) + "\n"


def _run_chunk(args) -> list[tuple]:
    n, seed, start, stop, modes = args
    out = []
    for i in range(start, stop):
        g = random_gnp_half(n, seed, i)
        verdicts = analyze_all(g, modes)
        any_v = next(iter(verdicts.values()))
        out.append((
            i,
            to_graph6(g),
            any_v.invariants.theta,
            tuple(verdicts[m].status.value for m in modes),
        ))
    return out


def run_experiment(config: ExperimentConfig, verbose: bool = False) -> ExperimentReport:
    modes = config.modes
    tasks = [
        (config.n, config.seed, s, min(s + _CHUNK, config.samples), modes)
        for s in range(0, config.samples, _CHUNK)
    ]
    if config.workers == 1:
        chunks = map(_run_chunk, tasks)
        results = [row for chunk in chunks for row in chunk]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = [row for chunk in pool.map(_run_chunk, tasks) for row in chunk]

    report = ExperimentReport(config, certified={m: 0 for m in modes},
                              records=[] if verbose else None)
    cert = Status.DGS_CERTIFIED.value
    for expected, (i, g6, theta, statuses) in enumerate(results):
        assert i == expected
        report.total += 1
        by_mode = dict(zip(modes, statuses))
        first = statuses[0]
        if first == Status.NOT_CONTROLLABLE.value:
            report.not_controllable += 1
        elif first != Status.THETA_EVEN.value:
            report.theta_odd += 1
        for m, s in by_mode.items():
            report.certified[m] += s == cert
        if Mode.OLD_ONLY in by_mode and Mode.MAIN_ONLY in by_mode:
            if by_mode[Mode.OLD_ONLY] == cert and by_mode[Mode.MAIN_ONLY] != cert:
                raise AssertionError(f"graph {i} ({g6}) certified by OLD_ONLY but not MAIN_ONLY")
        if report.records is not None:
            report.records.append({"index": i, "graph6": g6, "theta": theta,
                                   "status": {m.value: s for m, s in by_mode.items()}})
    report.check()
    return report
