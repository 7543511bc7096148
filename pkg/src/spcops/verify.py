"""Batch verification harness: generate instances, check the solver verdict
and the constructive strategy against the optimal robber on every exit."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .engine import GameConfig
from .policies import OptimalRobber
from .solver import StateBudgetError, is_exit_copwin, solve
from .strategy import simulate
from .structure import generate_sp


@dataclass
class VerifyRow:
    instance: int
    seed: int
    n: int
    blocks: int
    exit_vertex: int
    copwin: bool
    cops_won: bool
    rounds: int
    violations: int

    @property
    def passed(self) -> bool:
        return self.copwin and self.cops_won and self.violations == 0


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)
    capacity_errors: int = 0

    @property
    def games(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> list[VerifyRow]:
        return [r for r in self.rows if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_lines(self) -> list[str]:
        lines = []
        instances = len({r.instance for r in self.rows})
        lines.append(f"instances: {instances}")
        lines.append(f"games (instance x exit): {self.games}")
        lines.append(f"passed: {self.games - len(self.failures)}")
        lines.append(f"failed: {len(self.failures)}")
        lines.append(f"capacity errors: {self.capacity_errors}")
        for r in self.failures:
            lines.append(
                f"FAIL instance={r.instance} seed={r.seed} n={r.n} exit={r.exit_vertex} "
                f"copwin={r.copwin} cops_won={r.cops_won} violations={r.violations}"
            )
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return lines


def instance_params(master_seed: int, index: int, max_vertices: int) -> tuple[int, int, int]:
    """Deterministic (seed, n, blocks) for instance `index`."""
    rng = random.Random(f"{master_seed}:{index}")
    n = rng.randint(2, max_vertices)
    blocks = 1 if n < 3 else rng.randint(1, (n - 1) // 2 + 1)
    if blocks > 1 and n < blocks + 1:
        blocks = 1
    return rng.randrange(2**31), n, blocks


def run_verify(
    count: int,
    max_vertices: int,
    seed: int,
    budget: Optional[int] = None,
) -> VerifyReport:
    report = VerifyReport()
    for i in range(count):
        inst_seed, n, blocks = instance_params(seed, i, max_vertices)
        g = generate_sp(inst_seed, n, blocks)
        for x in g.vertices:
            cfg = GameConfig(g, frozenset((x,)), 2)
            try:
                table = solve(cfg, budget)
            except StateBudgetError:
                report.capacity_errors += 1
                continue
            copwin = is_exit_copwin(cfg, table)
            result = simulate(g, x, OptimalRobber(cfg, table), check_claims=True)
            report.rows.append(
                VerifyRow(
                    instance=i,
                    seed=inst_seed,
                    n=n,
                    blocks=blocks,
                    exit_vertex=x,
                    copwin=copwin,
                    cops_won=result.cops_won,
                    rounds=result.rounds,
                    violations=len(result.claim_violations),
                )
            )
    return report
