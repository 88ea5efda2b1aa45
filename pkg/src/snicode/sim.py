"""Seeded end-to-end simulation: encode random messages, decode at every
receiver, count failures and per-symbol decode cost."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .codec import OracleDecoder, complexity_stats, decode_plan, encode, encoding_matrix, plan_decode
from .rates import SniProblem, format_rate

__all__ = ["SimConfig", "SimReport", "side_info_view", "run"]


def side_info_view(problem, b, x, t):
    """What receiver t knows: block index -> that block's message symbols.

    ``x`` is the full message vector (or a (trials, m) batch); views are
    returned, not copies.
    """
    x = np.asarray(x)
    return {blk: x[..., blk * b : (blk + 1) * b] for blk in problem.side_info(t)}


@dataclass(frozen=True)
class SimConfig:
    problem: SniProblem
    a: int
    b: int
    p: int = 2
    trials: int = 100
    seed: int = 0
    decoder: str = "both"  # "plan" | "oracle" | "both"


@dataclass
class SimReport:
    config: SimConfig
    rate: Fraction
    plan_failures: int = 0
    oracle_failures: int = 0
    disagreements: int = 0
    symbol_decodes: int = 0
    details: list = field(default_factory=list)  # first few (kind, t, j, trial)
    stats: dict = field(default_factory=dict)    # (t, j) -> {num_codes, num_side}
    cases: dict = field(default_factory=dict)    # (t, j) -> case tag

    @property
    def failures(self):
        return self.plan_failures + self.oracle_failures + self.disagreements

    def text(self):
        c = self.config
        pr = c.problem
        lines = [
            f"simulation K={pr.K} D={pr.D} U={pr.U} a={c.a} b={c.b} p={c.p} "
            f"trials={c.trials} seed={c.seed} decoder={c.decoder}",
            "rng: numpy default_rng (PCG64)",
            f"rate: {format_rate(self.rate)}  excess over D+1: {Fraction(c.a, c.b)}",
        ]
        for t in range(pr.K):
            nc = [self.stats[(t, j)]["num_codes"] for j in range(1, c.b + 1)]
            ns = [self.stats[(t, j)]["num_side"] for j in range(1, c.b + 1)]
            lines.append(
                f"t={t}: codes/symbol min={min(nc)} mean={sum(nc) / len(nc):.2f} "
                f"max={max(nc)}; side terms min={min(ns)} "
                f"mean={sum(ns) / len(ns):.2f} max={max(ns)}"
            )
        lines.append(
            f"failures: {self.failures} (plan {self.plan_failures}, oracle "
            f"{self.oracle_failures}, disagreements {self.disagreements}) "
            f"over {self.symbol_decodes} symbol decodes"
        )
        return "\n".join(lines)

    def csv_lines(self):
        lines = ["t,j,case,num_codes,gamma"]
        for (t, j) in sorted(self.stats):
            s = self.stats[(t, j)]
            lines.append(f"{t},{j},{self.cases[(t, j)]},{s['num_codes']},{s['num_side']}")
        lines.append(
            f"# trials={self.config.trials} failures={self.failures} "
            f"rate={format_rate(self.rate)}"
        )
        return lines


def run(config):
    pr = config.problem
    if config.decoder not in ("plan", "oracle", "both"):
        raise ValueError(f"unknown decoder {config.decoder!r}")
    if config.decoder in ("plan", "both") and config.p != 2:
        raise ValueError("plan decoding is defined over GF(2) only")
    matrix = encoding_matrix(pr, config.a, config.b)
    plan = decode_plan(pr, config.a, config.b)
    b, m = config.b, matrix.m
    rng = np.random.default_rng(config.seed)
    x = rng.integers(0, config.p, size=(config.trials, m), dtype=np.uint8)
    y = encode(matrix, x, config.p)

    report = SimReport(
        config=config,
        rate=pr.D + 1 + Fraction(config.a, config.b),
        stats=complexity_stats(plan),
        cases={key: e.case for key, e in plan.entries.items()},
    )

    def note(kind, t, j, where):
        for trial in map(int, where):
            if len(report.details) < 10:
                report.details.append((kind, t, j, trial))

    for t in range(pr.K):
        side = side_info_view(pr, b, x, t)
        want = x[:, t * b : (t + 1) * b]
        plan_hat = oracle_hat = None
        if config.decoder in ("plan", "both"):
            plan_hat = np.stack(
                [plan_decode(plan, y, side, t, j) for j in range(1, b + 1)], axis=-1
            )
            for j in range(1, b + 1):
                bad = np.flatnonzero(plan_hat[:, j - 1] != want[:, j - 1])
                report.plan_failures += bad.size
                note("plan", t, j, bad[:3])
            report.symbol_decodes += config.trials * b
        if config.decoder in ("oracle", "both"):
            oracle_hat = OracleDecoder(matrix, pr, t, config.p).decode(y, side)
            for j in range(1, b + 1):
                bad = np.flatnonzero(oracle_hat[:, j - 1] != want[:, j - 1])
                report.oracle_failures += bad.size
                note("oracle", t, j, bad[:3])
            report.symbol_decodes += config.trials * b
        if plan_hat is not None and oracle_hat is not None:
            for j in range(1, b + 1):
                bad = np.flatnonzero(plan_hat[:, j - 1] != oracle_hat[:, j - 1])
                report.disagreements += bad.size
                note("disagree", t, j, bad[:3])
    return report
