import pytest
from dataclasses import replace

from spcops.engine import (
    GameConfig,
    Phase,
    RuleViolation,
    apply_cop_move,
    apply_robber_move,
    legal_cop_moves,
    legal_robber_moves,
    new_game,
    place_free_cops,
    place_robber,
)
from spcops.graph import Graph


def start(g, exits, k, free, r):
    s = new_game(GameConfig(g, frozenset(exits), k))
    if s.phase is Phase.PLACING_FREE_COPS:
        s = place_free_cops(s, free)
    return place_robber(s, r)


def test_new_game_pins_exit_cops(p3):
    s = new_game(GameConfig(p3, frozenset({0}), 2))
    assert 0 in s.cops
    assert s.phase is Phase.PLACING_FREE_COPS

    s = new_game(GameConfig(p3, frozenset(), 1))
    assert s.phase is Phase.PLACING_FREE_COPS

    s = new_game(GameConfig(p3, frozenset({0, 2}), 2))
    assert sorted(s.cops) == [0, 2]
    assert s.phase is Phase.PLACING_ROBBER


def test_config_needs_cop_per_exit(p3):
    with pytest.raises(ValueError):
        GameConfig(p3, frozenset({0, 2}), 1)


def test_place_free_cops(p3):
    s = new_game(GameConfig(p3, frozenset({0}), 2))
    assert sorted(place_free_cops(s, [0]).cops) == [0, 0]  # stacking allowed
    assert sorted(place_free_cops(s, [2]).cops) == [0, 2]
    with pytest.raises(ValueError):
        place_free_cops(s, [5])
    with pytest.raises(RuleViolation):
        place_free_cops(s, [1, 2])  # wrong count


def test_place_robber(p3):
    s = place_free_cops(new_game(GameConfig(p3, frozenset({0}), 2)), [2])
    assert place_robber(s, 1).phase is Phase.COPS_TURN
    assert place_robber(s, 2).phase is Phase.COPS_WON  # onto a cop

    s = place_free_cops(new_game(GameConfig(p3, frozenset({0}), 2)), [0])
    assert place_robber(s, 0).phase is Phase.COPS_WON


def test_cop_move_capture():
    p2 = Graph.from_edges(2, [(0, 1)])
    s = start(p2, (), 1, [0], 1)
    assert apply_cop_move(s, (1,)).phase is Phase.COPS_WON


def test_cop_move_lets_robber_escape(p3):
    # robber on the exit while both cops are elsewhere: passing loses
    s = start(p3, {0}, 2, [2], 1)
    s = replace(s, cops=(1, 2), robber=0)
    mid = apply_cop_move(s, (1, 2))
    assert mid.phase is Phase.ROBBER_WON


def test_exit_check_does_not_fire_on_robber_moves(p3):
    s = start(p3, {0}, 2, [2], 1)
    s = replace(s, cops=(1, 2), robber=0, phase=Phase.ROBBER_TURN)
    s2 = apply_robber_move(s, 0)  # pass while standing on the exit
    assert s2.phase is Phase.COPS_TURN


def test_capture_beats_escape_on_shared_exit(p3):
    # a cop shares the exit with the robber: rule order says capture
    s = start(p3, {0}, 2, [2], 1)
    s = replace(s, cops=(0, 2), robber=0)
    s = apply_cop_move(s, (0, 2))
    assert s.phase is Phase.COPS_WON


def test_robber_move_onto_cop_is_capture(p3):
    s = start(p3, (), 1, [0], 2)
    s = apply_cop_move(s, (1,))
    s = apply_robber_move(s, 1)
    assert s.phase is Phase.COPS_WON


def test_robber_pass(p3):
    s = start(p3, (), 1, [0], 2)
    s = apply_cop_move(s, (1,))
    s2 = apply_robber_move(s, 2)
    assert s2.phase is Phase.COPS_TURN
    assert s2.round == s.round + 1


def test_illegal_moves_raise(p3):
    s = start(p3, (), 1, [0], 2)
    with pytest.raises(RuleViolation):
        apply_cop_move(s, (2,))  # not adjacent
    with pytest.raises(RuleViolation):
        apply_robber_move(s, 2)  # not the robber's turn
    s = apply_cop_move(s, (1,))
    with pytest.raises(RuleViolation):
        apply_robber_move(s, 0)  # not adjacent to 2


def test_legal_move_enumeration(p3):
    s = start(p3, (), 1, [1], 2)  # placing robber on 2, cop at center
    assert tuple(legal_cop_moves(s)) == ((0,), (1,), (2,))
    s2 = start(p3, (), 2, [1, 0], 2)
    assert len(tuple(legal_cop_moves(s2))) == 6  # |N[1]| * |N[0]| = 3 * 2
    s = apply_cop_move(s, (0,))
    assert legal_robber_moves(s) == (1, 2)


def test_alternation_and_cop_count(bowtie):
    s = start(bowtie, {0}, 2, [3], 4)
    seen = []
    for _ in range(6):
        if s.phase is Phase.COPS_TURN:
            seen.append("c")
            s = apply_cop_move(s, tuple(s.cops))
        elif s.phase is Phase.ROBBER_TURN:
            seen.append("r")
            s = apply_robber_move(s, s.robber)
        assert len(s.cops) == 2
    assert "".join(seen).startswith("crcrcr"[: len(seen)])
