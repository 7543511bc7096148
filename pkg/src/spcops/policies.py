"""Robber policies for simulation drivers: solver-optimal, random,
stationary, and interactive (terminal play)."""
from __future__ import annotations

import random
import sys
from typing import Optional

from .engine import GameConfig, GameState, legal_robber_moves
from .graph import all_distances_from
from .solver import SolveTable, adversarial_placement, optimal_robber_policy, solve


class OptimalRobber:
    """Plays the exact solve table: wins whenever the position allows it,
    otherwise maximizes the capture distance."""

    def __init__(self, cfg: GameConfig, table: Optional[SolveTable] = None):
        self.table = solve(cfg) if table is None else table

    def place(self, cfg: GameConfig) -> tuple[tuple[int, ...], int]:
        return adversarial_placement(cfg, self.table)

    def move(self, s: GameState) -> int:
        return optimal_robber_policy(self.table, s)


class RandomRobber:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def place(self, cfg: GameConfig) -> tuple[tuple[int, ...], int]:
        n = cfg.graph.n
        free = tuple(
            self.rng.randrange(n) for _ in range(cfg.cops - len(cfg.exits))
        )
        occupied = set(cfg.exits) | set(free)
        options = [v for v in range(n) if v not in occupied] or list(range(n))
        return free, self.rng.choice(options)

    def move(self, s: GameState) -> int:
        return self.rng.choice(legal_robber_moves(s))


class StationaryRobber:
    """Places as far from the exits as possible, then passes forever."""

    def place(self, cfg: GameConfig) -> tuple[tuple[int, ...], int]:
        pinned = sorted(cfg.exits)
        free = tuple(pinned[:1] * (cfg.cops - len(pinned)))
        dist = all_distances_from(cfg.graph, pinned[0]) if pinned else [0] * cfg.graph.n
        occupied = set(pinned) | set(free)
        best = max(
            (v for v in cfg.graph.vertices if v not in occupied),
            key=lambda v: (dist[v] if dist[v] is not None else -1, -v),
            default=0,
        )
        return free, best

    def move(self, s: GameState) -> int:
        return s.robber


class InteractiveRobber:
    """Reads placements and moves from stdin (terminal play)."""

    def __init__(self, infile=None, outfile=None):
        self.infile = infile or sys.stdin
        self.out = outfile or sys.stderr

    def _ask(self, prompt: str, options: list[int]) -> int:
        while True:
            print(f"{prompt} (options: {options}): ", end="", file=self.out, flush=True)
            line = self.infile.readline()
            if not line:
                raise EOFError("no more input for the interactive robber")
            try:
                v = int(line.strip())
            except ValueError:
                continue
            if v in options:
                return v

    def place(self, cfg: GameConfig) -> tuple[tuple[int, ...], int]:
        n = cfg.graph.n
        free = tuple(
            self._ask("place a free cop", list(range(n)))
            for _ in range(cfg.cops - len(cfg.exits))
        )
        return free, self._ask("place the robber", list(range(n)))

    def move(self, s: GameState) -> int:
        print(f"cops at {list(s.cops)}, you are at {s.robber}", file=self.out)
        return self._ask("your move", list(legal_robber_moves(s)))
