"""Exact rules of the k-cops-and-robber game with exits.

States are immutable values; every transition returns a new state. The
robber wins by standing alone on an exit immediately after a move of the
cops, or (for drivers, not the engine) by evading forever. Capture is
checked before exit escape, so a cop sharing the exit always wins.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterator, Optional, Sequence

from .graph import Graph


class Phase(str, Enum):
    PLACING_FREE_COPS = "placing-free-cops"
    PLACING_ROBBER = "placing-robber"
    COPS_TURN = "cops-turn"
    ROBBER_TURN = "robber-turn"
    COPS_WON = "cops-won"
    ROBBER_WON = "robber-won"


TERMINAL_PHASES = (Phase.COPS_WON, Phase.ROBBER_WON)


class RuleViolation(ValueError):
    """An action that the game rules forbid (wrong phase, illegal move)."""


@dataclass(frozen=True)
class GameConfig:
    graph: Graph
    exits: frozenset[int]
    cops: int

    def __post_init__(self) -> None:
        for x in self.exits:
            self.graph.check_vertex(x)
        if self.cops < len(self.exits):
            raise ValueError(
                f"need at least {len(self.exits)} cops to pin the exits, got {self.cops}"
            )
        if self.cops < 1:
            raise ValueError("need at least one cop")


JointCopMove = tuple[int, ...]  # target vertex per cop (same vertex = pass)


@dataclass(frozen=True)
class GameState:
    config: GameConfig
    cops: tuple[int, ...]
    robber: Optional[int]
    phase: Phase
    round: int = 0

    @property
    def is_terminal(self) -> bool:
        return self.phase in TERMINAL_PHASES


def new_game(cfg: GameConfig) -> GameState:
    """One cop pinned on each exit (ascending); remaining cops unplaced."""
    pinned = tuple(sorted(cfg.exits))
    phase = Phase.PLACING_FREE_COPS if cfg.cops > len(pinned) else Phase.PLACING_ROBBER
    return GameState(config=cfg, cops=pinned, robber=None, phase=phase)


def place_free_cops(s: GameState, positions: Sequence[int]) -> GameState:
    """The robber side places the k-|exits| free cops (adversarially)."""
    if s.phase is not Phase.PLACING_FREE_COPS:
        raise RuleViolation(f"cannot place free cops in phase {s.phase.value}")
    need = s.config.cops - len(s.cops)
    if len(positions) != need:
        raise RuleViolation(f"expected {need} free cop positions, got {len(positions)}")
    for v in positions:
        s.config.graph.check_vertex(v)
    return replace(s, cops=s.cops + tuple(positions), phase=Phase.PLACING_ROBBER)


def place_robber(s: GameState, r: int) -> GameState:
    if s.phase is not Phase.PLACING_ROBBER:
        raise RuleViolation(f"cannot place the robber in phase {s.phase.value}")
    s.config.graph.check_vertex(r)
    phase = Phase.COPS_WON if r in s.cops else Phase.COPS_TURN
    return replace(s, robber=r, phase=phase)


def legal_cop_moves(s: GameState) -> Iterator[JointCopMove]:
    """All joint moves: the product of the cops' closed neighborhoods."""
    if s.phase is not Phase.COPS_TURN:
        raise RuleViolation(f"cops cannot move in phase {s.phase.value}")
    g = s.config.graph
    return itertools.product(*(g.closed_neighbors(c) for c in s.cops))


def apply_cop_move(s: GameState, move: JointCopMove) -> GameState:
    if s.phase is not Phase.COPS_TURN:
        raise RuleViolation(f"cops cannot move in phase {s.phase.value}")
    if len(move) != len(s.cops):
        raise RuleViolation(f"expected {len(s.cops)} cop targets, got {len(move)}")
    g = s.config.graph
    for c, t in zip(s.cops, move):
        if t != c and not g.has_edge(c, t):
            raise RuleViolation(f"cop cannot slide from {c} to {t}")
    cops = tuple(move)
    if s.robber in cops:
        phase = Phase.COPS_WON
    elif s.robber in s.config.exits:
        # the robber stands on an exit alone after a move of the cops
        phase = Phase.ROBBER_WON
    else:
        phase = Phase.ROBBER_TURN
    return replace(s, cops=cops, phase=phase)


def legal_robber_moves(s: GameState) -> tuple[int, ...]:
    if s.phase is not Phase.ROBBER_TURN:
        raise RuleViolation(f"the robber cannot move in phase {s.phase.value}")
    return s.config.graph.closed_neighbors(s.robber)


def apply_robber_move(s: GameState, to: int) -> GameState:
    if s.phase is not Phase.ROBBER_TURN:
        raise RuleViolation(f"the robber cannot move in phase {s.phase.value}")
    g = s.config.graph
    g.check_vertex(to)
    if to != s.robber and not g.has_edge(s.robber, to):
        raise RuleViolation(f"robber cannot slide from {s.robber} to {to}")
    # no exit check here: escape is tied to the moment after the cops move
    phase = Phase.COPS_WON if to in s.cops else Phase.COPS_TURN
    return replace(s, robber=to, phase=phase, round=s.round + 1)
