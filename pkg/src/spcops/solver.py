"""Exhaustive backward-induction solver for the exit game.

The game digraph over (sorted cop multiset, robber vertex, mover) is
labeled by an attractor fixpoint: a cops-turn state wins iff some joint
move wins, a robber-turn state is lost for the robber iff all moves lose.
States never absorbed by the fixpoint are robber wins (infinite evasion).
"""
from __future__ import annotations

import itertools
import math
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .engine import GameConfig, GameState, Phase

# (sorted cop positions, robber vertex, cops to move)
StateKey = tuple[tuple[int, ...], int, bool]

_WIN = "win"    # capture happens on this transition
_LOSS = "loss"  # the robber escapes through an exit on this transition

DEFAULT_STATE_BUDGET = 10_000_000
STATE_BUDGET_ENV = "SP_COPWIN_STATE_BUDGET"


class StateBudgetError(RuntimeError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"game has {count} states, over the budget of {budget}")
        self.count = count
        self.budget = budget


def state_budget() -> int:
    raw = os.environ.get(STATE_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_STATE_BUDGET


def count_states(cfg: GameConfig) -> int:
    n = cfg.graph.n
    return math.comb(n + cfg.cops - 1, cfg.cops) * n * 2


def state_key(s: GameState) -> StateKey:
    if s.phase not in (Phase.COPS_TURN, Phase.ROBBER_TURN):
        raise ValueError(f"no solve-table key for phase {s.phase.value}")
    return (tuple(sorted(s.cops)), s.robber, s.phase is Phase.COPS_TURN)


@dataclass
class SolveTable:
    """Complete labeling of the post-placement game positions.

    `dist` is the number of moves to capture under optimal play; states
    missing from `cops_win` are robber wins. `best_move` stores, for each
    winning cops-turn state, an optimal joint move aligned with the sorted
    cop multiset of the key.
    """

    config: GameConfig
    cops_win: set[StateKey]
    dist: dict[StateKey, int]
    best_move: dict[StateKey, tuple[int, ...]]
    state_count: int

    def is_cops_win(self, key: StateKey) -> bool:
        return key in self.cops_win


def _cop_successors(cfg: GameConfig, cops: tuple[int, ...], r: int):
    """Yield (joint move over the sorted multiset, outcome)."""
    g = cfg.graph
    for move in itertools.product(*(g.closed_neighbors(c) for c in cops)):
        if r in move:
            yield move, _WIN
        elif r in cfg.exits:
            yield move, _LOSS
        else:
            yield move, (tuple(sorted(move)), r, False)


def _robber_successors(cfg: GameConfig, cops: tuple[int, ...], r: int):
    for to in cfg.graph.closed_neighbors(r):
        if to in cops:
            yield _WIN
        else:
            yield (cops, to, True)


def solve(cfg: GameConfig, budget: Optional[int] = None) -> SolveTable:
    budget = state_budget() if budget is None else budget
    total = count_states(cfg)
    if total > budget:
        raise StateBudgetError(total, budget)

    n = cfg.graph.n
    cop_multisets = list(itertools.combinations_with_replacement(range(n), cfg.cops))

    cops_win: set[StateKey] = set()
    dist: dict[StateKey, int] = {}
    best_move: dict[StateKey, tuple[int, ...]] = {}
    pending: dict[StateKey, int] = {}  # robber states: unresolved successors
    # predecessors of each non-terminal state
    preds: dict[StateKey, list[tuple[StateKey, Optional[tuple[int, ...]]]]] = {}
    queue: deque[StateKey] = deque()
    state_count = 0

    for cops in cop_multisets:
        for r in range(n):
            if r in cops:
                continue  # capture already happened; not a playable state
            ckey: StateKey = (cops, r, True)
            rkey: StateKey = (cops, r, False)
            state_count += 2

            immediate: Optional[tuple[int, ...]] = None
            succs = set()
            for move, out in _cop_successors(cfg, cops, r):
                if out == _WIN:
                    if immediate is None:
                        immediate = move
                elif out != _LOSS:
                    if out not in succs:
                        succs.add(out)
                        preds.setdefault(out, []).append((ckey, move))
            if immediate is not None:
                cops_win.add(ckey)
                dist[ckey] = 1
                best_move[ckey] = immediate
                queue.append(ckey)

            rsuccs = set()
            wins = 0
            for out in _robber_successors(cfg, cops, r):
                if out == _WIN:
                    wins += 1
                elif out not in rsuccs:
                    rsuccs.add(out)
                    preds.setdefault(out, []).append((rkey, None))
            if not rsuccs:
                # every robber move runs into a cop (cannot happen with pass,
                # but kept for completeness)
                cops_win.add(rkey)
                dist[rkey] = 1
                queue.append(rkey)
            else:
                pending[rkey] = len(rsuccs)

    while queue:
        s = queue.popleft()
        d = dist[s]
        for p, move in preds.get(s, ()):
            if p in cops_win:
                continue
            if p[2]:  # cops to move: one winning successor suffices
                cops_win.add(p)
                dist[p] = d + 1
                best_move[p] = move
                queue.append(p)
            else:  # robber to move: all successors must be winning
                pending[p] -= 1
                if pending[p] == 0:
                    cops_win.add(p)
                    dist[p] = d + 1
                    queue.append(p)

    return SolveTable(cfg, cops_win, dist, best_move, state_count)


def is_exit_copwin(cfg: GameConfig, table: Optional[SolveTable] = None) -> bool:
    """True iff the cops win for every adversarial placement of the free
    cops and the robber."""
    if table is None:
        table = solve(cfg)
    n = cfg.graph.n
    pinned = tuple(sorted(cfg.exits))
    free = cfg.cops - len(pinned)
    for extra in itertools.combinations_with_replacement(range(n), free):
        cops = tuple(sorted(pinned + extra))
        for r in range(n):
            if r in cops:
                continue
            if (cops, r, True) not in table.cops_win:
                return False
    return True


def optimal_robber_policy(table: SolveTable, s: GameState) -> int:
    """A robber-win-preserving move if one exists, else a move maximizing
    the distance to capture; ties to the smallest vertex id."""
    if s.phase is not Phase.ROBBER_TURN:
        raise ValueError(f"not the robber's turn: {s.phase.value}")
    cops = tuple(sorted(s.cops))
    best_to: Optional[int] = None
    best_d = -1
    for to in s.config.graph.closed_neighbors(s.robber):
        if to in cops:
            d = 0  # walking into a cop: immediate capture
        else:
            key: StateKey = (cops, to, True)
            if key not in table.cops_win:
                return to  # robber-win successor, smallest id first
            d = table.dist[key]
        if d > best_d:
            best_to, best_d = to, d
    return best_to


def adversarial_placement(
    cfg: GameConfig, table: Optional[SolveTable] = None
) -> tuple[tuple[int, ...], int]:
    """Free-cop positions and robber start minimizing the cops' outcome:
    a robber win if any placement yields one, else maximal capture distance."""
    if table is None:
        table = solve(cfg)
    n = cfg.graph.n
    pinned = tuple(sorted(cfg.exits))
    free = cfg.cops - len(pinned)
    best: Optional[tuple[tuple[int, ...], int]] = None
    best_d = -1
    for extra in itertools.combinations_with_replacement(range(n), free):
        cops = tuple(sorted(pinned + extra))
        for r in range(n):
            if r in cops:
                d = 0
            else:
                key: StateKey = (cops, r, True)
                if key not in table.cops_win:
                    return extra, r
                d = table.dist[key]
            if d > best_d:
                best, best_d = (extra, r), d
    assert best is not None
    return best
