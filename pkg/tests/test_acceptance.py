"""Acceptance gate: one test (and one printed PASS/FAIL line) per headline
guarantee. Run with `pytest -s tests/test_acceptance.py` to see the lines.
"""
import itertools
import random

import networkx as nx

from oracles import is_k4_minor_free, minimax_exit_copwin
from spcops.cli import main
from spcops.engine import GameConfig
from spcops.graph import Graph, is_connected
from spcops.policies import OptimalRobber
from spcops.solver import is_exit_copwin, solve
from spcops.strategy import simulate, simulate_pair
from spcops.structure import (
    find_end_pair,
    generate_sp,
    generate_two_connected_sp,
    is_series_parallel,
    replay_certificate,
)
from spcops.verify import run_verify


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def _instances(count: int, max_vertices: int, master_seed: int):
    rng = random.Random(master_seed)
    for _ in range(count):
        n = rng.randint(2, max_vertices)
        blocks = 1 if n < 4 else rng.randint(1, max(1, (n - 1) // 3))
        yield generate_sp(rng.randrange(2**31), n, blocks)


def test_every_exit_two_copwin_by_solver():
    """Single-exit game with two cops is always a cops win on these graphs,
    for every choice of the exit vertex — checked exhaustively by the solver."""
    games = 0
    bad = []
    for g in _instances(200, 10, master_seed=101):
        for x in range(g.n):
            games += 1
            if not is_exit_copwin(GameConfig(g, frozenset((x,)), 2)):
                bad.append((g.sorted_edges(), x))
    _report(
        "exit-game solver sweep (200 graphs <=10 vertices, all exits)",
        not bad,
        f"{games} games, {len(bad)} failures",
    )


def test_constructive_strategy_beats_optimal_robber():
    """The explicit two-cop strategy wins every single-exit game within
    4|V|^2 rounds against the solver-optimal robber, with every per-round
    invariant (C1-C5, block stability, projection legality) holding."""
    report = run_verify(count=200, max_vertices=12, seed=20260826)
    fails = report.failures
    _report(
        "constructive strategy sweep (200 graphs <=12 vertices, all exits)",
        report.ok and report.games >= 200,
        f"{report.games} games, {len(fails)} failures, {report.capacity_errors} capacity skips",
    )


def test_end_pair_games_on_two_connected_graphs():
    """For every generated 2-connected graph and its computed end pair (u,v):
    the solver confirms the {u,v}-exit game is a cops win, and the path-like
    strategy actually wins it against the optimal robber."""
    games = 0
    bad = []
    for seed in range(100):
        n = 3 + seed % 10
        g = generate_two_connected_sp(seed, n)
        v, cert = find_end_pair(g, 0)
        cfg = GameConfig(g, frozenset((0, v)), 2)
        table = solve(cfg)
        games += 1
        res = simulate_pair(g, (0, v), OptimalRobber(cfg, table))
        if not (
            is_exit_copwin(cfg, table)
            and res.cops_won
            and not res.claim_violations
            and replay_certificate(cert) == g
        ):
            bad.append(seed)
    _report(
        "end-pair games (100 two-connected graphs <=12 vertices)",
        not bad,
        f"{games} games, {len(bad)} failures",
    )


def test_petersen_negative_control():
    edges = []
    for i in range(5):
        edges += [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)]
    petersen = Graph.from_edges(10, edges)
    two = is_exit_copwin(GameConfig(petersen, frozenset(), 2))
    three = is_exit_copwin(GameConfig(petersen, frozenset(), 3))
    _report(
        "negative control (Petersen graph)",
        (not two) and three,
        f"2 cops win: {two} (want False), 3 cops win: {three} (want True)",
    )


def test_solver_agrees_with_naive_minimax():
    """Every connected graph on <=6 vertices, k in {1,2}, exits empty or a
    single vertex: the attractor solver and an independent value-iteration
    minimax produce the same verdict."""
    checked = 0
    bad = 0
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if n < 1 or n > 6 or not nx.is_connected(h):
            continue
        g = Graph.from_edges(n, list(h.edges()))
        exit_sets = [frozenset()] + [frozenset((v,)) for v in range(n)]
        for k, exits in itertools.product((1, 2), exit_sets):
            if k < len(exits):
                continue
            checked += 1
            if is_exit_copwin(GameConfig(g, exits, k)) != minimax_exit_copwin(g, exits, k):
                bad += 1
    _report(
        "solver vs naive minimax (connected graphs <=6 vertices)",
        bad == 0 and checked > 1000,
        f"{checked} configurations, {bad} disagreements",
    )


def test_sp_recognition_agrees_with_minor_oracle():
    """is_series_parallel equals a brute-force K4-minor search: on every
    graph of the <=7-vertex atlas, plus 10^4 random graphs on <=8 vertices.
    Every end-pair certificate replays to its graph."""
    checked = 0
    bad = 0
    for h in nx.graph_atlas_g()[1:]:
        g = Graph.from_edges(h.number_of_nodes(), list(h.edges()))
        checked += 1
        if is_series_parallel(g) != is_k4_minor_free(g):
            bad += 1
    rng = random.Random(8)
    while checked < 10**4 + 1253:
        n = rng.randint(4, 8)
        p = rng.uniform(0.15, 0.8)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        checked += 1
        if is_series_parallel(g) != is_k4_minor_free(g):
            bad += 1
    certs_ok = all(
        replay_certificate(find_end_pair(generate_two_connected_sp(s, 3 + s % 10), u)[1])
        == generate_two_connected_sp(s, 3 + s % 10)
        for s in range(25)
        for u in range(generate_two_connected_sp(s, 3 + s % 10).n)
    )
    _report(
        "structure recognition vs K4-minor oracle",
        bad == 0 and certs_ok,
        f"{checked} graphs, {bad} disagreements, certificates replay: {certs_ok}",
    )


def test_verify_command_is_deterministic(capsys):
    args = ["verify", "--count", "8", "--max-vertices", "9", "--seed", "424242"]
    rc1 = main(args)
    out1 = capsys.readouterr().out
    rc2 = main(args)
    out2 = capsys.readouterr().out
    _report(
        "verify command determinism",
        rc1 == rc2 == 0 and out1 == out2 and len(out1) > 0,
        f"{len(out1)} bytes, identical: {out1 == out2}",
    )
