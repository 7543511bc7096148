"""The constructive two-cop strategy for series-parallel graphs.

Two cooperating machines:

* the block-recursion machine: keeps a sentry on the current exit, sends
  the patrol to the far end of the block toward the robber, then plays the
  path-like strategy inside that block against the robber's projection;
  when the projection is pinned at a cut vertex the roles hand off and the
  game recurses into the robber's side of that cut vertex;

* the path-like machine: on a multi-block path-like graph each cop either
  retreats toward its home end (when the robber is at least as close to it)
  or pushes toward the cut vertex of its home block, until one cop reaches
  that opposite vertex with the robber outside its home block; then the
  other cop walks home and the cleared block is peeled off.

All positions are kept in full-graph vertex ids; active subgraphs are
vertex sets (plus, in one case, a banned edge) over the original graph.
"""
from __future__ import annotations

import itertools

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .engine import (
    GameConfig,
    GameState,
    JointCopMove,
    Phase,
    apply_cop_move,
    apply_robber_move,
    new_game,
    place_free_cops,
    place_robber,
)
from .graph import Edge, Graph, induced_subgraph, is_connected, normalize_edge, restricted_distances
from .structure import (
    BlockCutTree,
    block_cut_tree,
    block_toward_robber,
    find_end_pair,
    is_end_pair,
    is_series_parallel,
)


class NotSeriesParallelError(ValueError):
    """The strategy's guarantees only cover K4-minor-free graphs."""


class StrategyError(RuntimeError):
    """The strategy was driven outside its contract (wrong phase etc.)."""


class StrategyInvariantError(RuntimeError):
    """An internal invariant of the strategy broke: a bug, not bad input."""


# ---------------------------------------------------------------------------
# Active regions: a vertex set of the full graph, with optionally one banned
# edge (the direct end-to-end edge stripped in the degenerate one-block case).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    vertices: frozenset[int]
    banned_edges: frozenset[Edge] = frozenset()

    def restrict(self, vertices: frozenset[int]) -> "Region":
        banned = frozenset(
            e for e in self.banned_edges if e[0] in vertices and e[1] in vertices
        )
        return Region(vertices, banned)

    def edge_allowed(self, a: int, b: int) -> bool:
        return (
            a in self.vertices
            and b in self.vertices
            and normalize_edge(a, b) not in self.banned_edges
        )


def _region_distances(g: Graph, region: Region, source: int) -> dict[int, int]:
    return restricted_distances(g, region.vertices, source, region.banned_edges)


def _step_toward(g: Graph, region: Region, frm: int, to: int) -> int:
    """One step along a shortest path inside the region; smallest-id
    neighbor among those that decrease the distance; pass at the target."""
    if frm == to:
        return frm
    dist = _region_distances(g, region, to)
    if frm not in dist:
        raise StrategyInvariantError(f"{frm} cannot reach {to} inside the region")
    want = dist[frm] - 1
    for w in g.adjacency[frm]:
        if region.edge_allowed(frm, w) and dist.get(w) == want:
            return w
    raise StrategyInvariantError("no distance-decreasing neighbor found")


def _region_bct(g: Graph, region: Region) -> tuple[BlockCutTree, Graph, dict[int, int], tuple[int, ...]]:
    """Block-cut tree of the region, with blocks/cuts in full-graph ids."""
    sub = induced_subgraph(g, region.vertices)
    edges = [
        e
        for e in sub.graph.edges
        if normalize_edge(sub.to_orig[e[0]], sub.to_orig[e[1]]) not in region.banned_edges
    ]
    rg = Graph(sub.graph.n, frozenset(edges))
    bct = block_cut_tree(rg)
    blocks = tuple(frozenset(sub.to_orig[v] for v in b) for b in bct.blocks)
    cuts = frozenset(sub.to_orig[v] for v in bct.cut_vertices)
    lifted = BlockCutTree(
        blocks,
        cuts,
        {
            normalize_edge(sub.to_orig[a], sub.to_orig[b]): i
            for (a, b), i in bct.block_of_edge.items()
        },
    )
    return lifted, rg, sub.to_sub, sub.to_orig


def _region_components(g: Graph, region: Region, removed: frozenset[int]) -> list[frozenset[int]]:
    remaining = region.vertices - removed
    comps: list[frozenset[int]] = []
    seen: set[int] = set()
    for s in sorted(remaining):
        if s in seen:
            continue
        dist = restricted_distances(g, remaining, s, region.banned_edges)
        comp = frozenset(dist)
        seen |= comp
        comps.append(comp)
    return comps


def _region_projection(g: Graph, region: Region, block: frozenset[int], r: int) -> int:
    dist = _region_distances(g, region, r)
    best: list[int] = []
    best_d: Optional[int] = None
    for v in sorted(block):
        d = dist.get(v)
        if d is None:
            continue
        if best_d is None or d < best_d:
            best, best_d = [v], d
        elif d == best_d:
            best.append(v)
    if len(best) != 1:
        raise StrategyInvariantError(
            f"projection onto {sorted(block)} from {r} not unique: {best}"
        )
    return best[0]


# ---------------------------------------------------------------------------
# Path-like machine (the x-cop rule with potential phi)
# ---------------------------------------------------------------------------


class _PathLikeMachine:
    """Plays the two ends of a path-like active region against an avatar."""

    RESOLVE = "resolve"
    PUSH = "multi-block-push"
    SEND_HOME = "send-home"

    _serials = itertools.count()

    def __init__(self, g: Graph, region: Region, cop_of_end: dict[int, int]):
        self.serial = next(self._serials)
        self.g = g
        self.region = region
        self.cop_of_end = dict(cop_of_end)  # end vertex -> cop index
        self.phase = self.RESOLVE
        self.home_block: dict[int, frozenset[int]] = {}
        self.opposite: dict[int, int] = {}
        self.block_cuts: frozenset[int] = frozenset()
        self.send: Optional[tuple[int, int]] = None  # (walker end, cleared end)
        self.last_rules: dict[int, int] = {}
        self.last_phi: Optional[int] = None
        self.push_rounds = 0
        self.push_episode = 0

    @property
    def ends(self) -> tuple[int, int]:
        return tuple(sorted(self.cop_of_end))  # type: ignore[return-value]

    def dist(self, a: int, b: int) -> int:
        d = _region_distances(self.g, self.region, a).get(b)
        if d is None:
            raise StrategyInvariantError(f"{a} and {b} disconnected in the region")
        return d

    def phi(self, cops: Sequence[int]) -> int:
        if self.phase != self.PUSH:
            raise StrategyError("phi is defined during the multi-block push")
        return sum(self.dist(cops[self.cop_of_end[e]], self.opposite[e]) for e in self.ends)

    def interior_of_home(self, end: int) -> frozenset[int]:
        return self.home_block[end] - self.block_cuts

    def step(self, cops: Sequence[int], avatar: int) -> dict[int, int]:
        """Targets per cop index for this turn. Zero-time bookkeeping
        (shrinking the region, setting up a push) happens inline."""
        self.last_rules = {}
        while True:
            if avatar not in self.region.vertices:
                raise StrategyInvariantError("avatar left the active region")
            if self.phase == self.RESOLVE:
                done = self._resolve(cops, avatar)
                if not done:
                    continue
            if self.phase == self.PUSH:
                move = self._push(cops, avatar)
                if move is None:
                    continue  # a trigger fired; now in send-home
                return move
            if self.phase == self.SEND_HOME:
                move = self._send_home(cops, avatar)
                if move is None:
                    continue  # walker arrived; back to resolve
                return move

    def _resolve(self, cops: Sequence[int], avatar: int) -> bool:
        eu, ev = self.ends
        if avatar in (eu, ev):
            raise StrategyInvariantError(
                "avatar sits on an end without a cop there (capture was due)"
            )
        if len(self.region.vertices) == 2:
            raise StrategyInvariantError("two-vertex region should already be won")
        bct, *_ = _region_bct(self.g, self.region)
        if len(bct.blocks) == 1:
            comps = _region_components(self.g, self.region, frozenset((eu, ev)))
            comp = next((c for c in comps if avatar in c), None)
            if comp is None:
                raise StrategyInvariantError("avatar vanished from the region")
            new_verts = comp | {eu, ev}
            if new_verts != self.region.vertices:
                self.region = self.region.restrict(new_verts)
                return False
            direct = normalize_edge(eu, ev)
            if direct in self.g.edges and direct not in self.region.banned_edges:
                # one block consisting of the direct end edge in parallel with
                # a chain: drop the edge neither side can use and recurse
                self.region = Region(
                    self.region.vertices, self.region.banned_edges | {direct}
                )
                return False
            raise StrategyInvariantError("one-block region failed to shrink")
        # multi-block: set up homes and opposite vertices
        for end in (eu, ev):
            homes = bct.blocks_containing(end)
            if len(homes) != 1:
                raise StrategyInvariantError(f"end {end} is a cut vertex")
            hb = bct.blocks[homes[0]]
            cuts = hb & bct.cut_vertices
            if len(cuts) != 1:
                raise StrategyInvariantError(
                    f"home block of {end} has {len(cuts)} cut vertices"
                )
            self.home_block[end] = hb
            (self.opposite[end],) = cuts
        self.block_cuts = bct.cut_vertices
        self.phase = self.PUSH
        self.push_rounds = 0
        self.push_episode += 1
        return True

    def _push(self, cops: Sequence[int], avatar: int) -> Optional[dict[int, int]]:
        for end in self.ends:
            c = cops[self.cop_of_end[end]]
            if c == self.opposite[end] and avatar not in self.home_block[end]:
                other = next(e for e in self.ends if e != end)
                self.send = (other, end)
                self.phase = self.SEND_HOME
                return None
        self.push_rounds += 1
        targets: dict[int, int] = {}
        for end in self.ends:
            idx = self.cop_of_end[end]
            c = cops[idx]
            if self.dist(end, avatar) <= self.dist(end, c):
                self.last_rules[end] = 2
                goal = end
            else:
                self.last_rules[end] = 3
                goal = self.opposite[end]
            targets[idx] = _step_toward(self.g, self.region, c, goal)
        self.last_phi = sum(
            self.dist(targets[self.cop_of_end[e]], self.opposite[e]) for e in self.ends
        )
        return targets

    def _send_home(self, cops: Sequence[int], avatar: int) -> Optional[dict[int, int]]:
        walker_end, cleared_end = self.send
        widx = self.cop_of_end[walker_end]
        if cops[widx] == walker_end:
            # peel the cleared home block off; its opposite vertex becomes
            # the new end held by the cop that cleared it
            hb = self.home_block[cleared_end]
            opp = self.opposite[cleared_end]
            new_verts = self.region.vertices - (hb - {opp})
            cleared_idx = self.cop_of_end.pop(cleared_end)
            if cops[cleared_idx] != opp:
                raise StrategyInvariantError("clearing cop left its opposite vertex")
            self.cop_of_end[opp] = cleared_idx
            self.region = self.region.restrict(new_verts)
            self.home_block = {}
            self.opposite = {}
            self.block_cuts = frozenset()
            self.send = None
            self.phase = self.RESOLVE
            return None
        targets = {idx: cops[idx] for idx in self.cop_of_end.values()}
        targets[widx] = _step_toward(self.g, self.region, cops[widx], walker_end)
        return targets


# ---------------------------------------------------------------------------
# Block-recursion machine (exit guarded by a sentry, patrol plays the block)
# ---------------------------------------------------------------------------


@dataclass
class _Level:
    region: Region
    exit_vertex: int
    sentry: int  # cop index holding the exit at level entry
    patrol: int
    phase: str = "select-block"
    block: Optional[frozenset[int]] = None
    far_end: Optional[int] = None
    machine: Optional[_PathLikeMachine] = None
    handoff: Optional[tuple[int, int, int]] = None  # (x*, new sentry, walker)


class StrategyMemory:
    """Deterministic cop policy: feed it cops-turn states, get joint moves.

    `mode` is "theorem1" (single exit, block recursion) or "lemma4"
    (path-like graph, both ends are exits). The memory also exposes the
    data the runtime claim checks and UI annotations need.
    """

    def __init__(self, graph: Graph, exit_vertex: int, sentry: int = 0, patrol: int = 1):
        graph.check_vertex(exit_vertex)
        if not is_connected(graph):
            raise ValueError("the strategy needs a connected graph")
        if not is_series_parallel(graph):
            raise NotSeriesParallelError("graph has a K4 minor")
        self.graph = graph
        self.mode = "theorem1"
        self.levels: list[_Level] = [
            _Level(Region(frozenset(graph.vertices)), exit_vertex, sentry, patrol)
        ]
        self.root_machine: Optional[_PathLikeMachine] = None
        self.last_avatar: Optional[int] = None
        self._prev_avatar: Optional[tuple[int, frozenset[int], int]] = None

    @classmethod
    def for_path_like(cls, graph: Graph, ends: tuple[int, int]) -> "StrategyMemory":
        """Lemma-mode memory for the {u,v}-exit game on a path-like graph;
        cop indices follow the engine's pinning order (sorted exits)."""
        u, v = ends
        if not is_connected(graph) or not is_series_parallel(graph):
            raise NotSeriesParallelError("not a connected series-parallel graph")
        if not is_end_pair(graph, u, v):
            raise ValueError(f"({u}, {v}) is not a pair of ends")
        self = cls.__new__(cls)
        self.graph = graph
        self.mode = "lemma4"
        self.levels = []
        pinned = sorted((u, v))
        self.root_machine = _PathLikeMachine(
            graph,
            Region(frozenset(graph.vertices)),
            {end: pinned.index(end) for end in (u, v)},
        )
        self.last_avatar = None
        self._prev_avatar = None
        return self

    # -- policy ------------------------------------------------------------

    def active_machine(self) -> Optional[_PathLikeMachine]:
        if self.mode == "lemma4":
            return self.root_machine
        lvl = self.levels[-1]
        return lvl.machine if lvl.phase == "play-block" else None

    def phase_name(self) -> str:
        if self.mode == "lemma4":
            return self.root_machine.phase
        lvl = self.levels[-1]
        if lvl.phase == "play-block" and lvl.machine is not None:
            return f"play-block/{lvl.machine.phase}"
        return lvl.phase

    def move(self, s: GameState) -> JointCopMove:
        if s.phase is not Phase.COPS_TURN:
            raise StrategyError(f"not the cops' turn: {s.phase.value}")
        if s.robber is None:
            raise StrategyError("robber not placed")
        if len(s.cops) != 2:
            raise StrategyError("the strategy plays exactly two cops")
        if self.mode == "lemma4":
            self.last_avatar = s.robber
            targets = self.root_machine.step(s.cops, s.robber)
            return self._assemble(s.cops, targets)
        return self._theorem1_move(s)

    def _theorem1_move(self, s: GameState) -> JointCopMove:
        cops, r = s.cops, s.robber
        g = self.graph
        guard = 0
        while True:
            guard += 1
            if guard > 4 * g.n + 16:
                raise StrategyInvariantError("phase machine failed to make progress")
            lvl = self.levels[-1]
            if r not in lvl.region.vertices:
                raise StrategyInvariantError("robber escaped the active level")
            if lvl.phase == "select-block":
                bct, rg, to_sub, to_orig = _region_bct(g, lvl.region)
                bidx = block_toward_robber(rg, self._local_bct(bct, to_sub), to_sub[lvl.exit_vertex], to_sub[r])
                lvl.block = bct.blocks[bidx]
                blockg = induced_subgraph(g, lvl.block)
                v_sub, _cert = find_end_pair(blockg.graph, blockg.to_sub[lvl.exit_vertex])
                lvl.far_end = blockg.to_orig[v_sub]
                lvl.phase = "patrol-to-v"
            elif lvl.phase == "patrol-to-v":
                if cops[lvl.patrol] == lvl.far_end:
                    lvl.machine = _PathLikeMachine(
                        g,
                        Region(lvl.block),
                        {lvl.exit_vertex: lvl.sentry, lvl.far_end: lvl.patrol},
                    )
                    lvl.phase = "play-block"
                    continue
                tgt = _step_toward(g, lvl.region, cops[lvl.patrol], lvl.far_end)
                self.last_avatar = None
                return self._assemble(cops, {lvl.patrol: tgt})
            elif lvl.phase == "play-block":
                avatar = _region_projection(g, lvl.region, lvl.block, r)
                self.last_avatar = avatar
                pinned = [i for i in range(2) if cops[i] == avatar]
                if pinned:
                    if avatar == r:
                        raise StrategyInvariantError("engine missed a capture")
                    new_sentry = pinned[0]
                    walker = 1 - new_sentry
                    lvl.handoff = (avatar, new_sentry, walker)
                    lvl.phase = "handoff-walk"
                    continue
                targets = lvl.machine.step(cops, avatar)
                return self._assemble(cops, targets)
            elif lvl.phase == "handoff-walk":
                xstar, new_sentry, walker = lvl.handoff
                if cops[walker] == xstar:
                    comps = _region_components(g, lvl.region, frozenset((xstar,)))
                    comp = next((c for c in comps if r in c), None)
                    if comp is None:
                        raise StrategyInvariantError("robber vanished at handoff")
                    self.levels.append(
                        _Level(
                            lvl.region.restrict(comp | {xstar}),
                            xstar,
                            new_sentry,
                            walker,
                        )
                    )
                    continue
                tgt = _step_toward(g, lvl.region, cops[walker], xstar)
                self.last_avatar = None
                return self._assemble(cops, {walker: tgt})
            else:
                raise StrategyInvariantError(f"unknown phase {lvl.phase}")

    @staticmethod
    def _local_bct(bct: BlockCutTree, to_sub: dict[int, int]) -> BlockCutTree:
        return BlockCutTree(
            tuple(frozenset(to_sub[v] for v in b) for b in bct.blocks),
            frozenset(to_sub[v] for v in bct.cut_vertices),
            {
                normalize_edge(to_sub[a], to_sub[b]): i
                for (a, b), i in bct.block_of_edge.items()
            },
        )

    @staticmethod
    def _assemble(cops: tuple[int, ...], targets: dict[int, int]) -> JointCopMove:
        return tuple(targets.get(i, c) for i, c in enumerate(cops))

    # -- introspection -----------------------------------------------------

    def annotations(self) -> dict:
        """Per-round strategy data for transcripts and the UI."""
        out: dict = {
            "mode": self.mode,
            "phase": self.phase_name(),
            "avatar": self.last_avatar,
        }
        if self.mode == "theorem1":
            lvl = self.levels[-1]
            out["level"] = len(self.levels) - 1
            out["exit"] = lvl.exit_vertex
            out["roles"] = {"sentry": lvl.sentry, "patrol": lvl.patrol}
            out["active_vertices"] = sorted(lvl.region.vertices)
            if lvl.block is not None:
                out["block"] = sorted(lvl.block)
        machine = self.active_machine()
        if machine is not None:
            out["ends"] = list(machine.ends)
            out["cop_of_end"] = {str(e): i for e, i in machine.cop_of_end.items()}
            out["machine_vertices"] = sorted(machine.region.vertices)
            if machine.phase == _PathLikeMachine.PUSH:
                out["opposite"] = {str(e): machine.opposite[e] for e in machine.ends}
                out["rules"] = {str(e): r for e, r in machine.last_rules.items()}
                out["phi"] = machine.last_phi
        return out


def phi(m: StrategyMemory, s: GameState) -> int:
    """Potential d(c_u, u') + d(c_v, v') of the active multi-block push."""
    machine = m.active_machine()
    if machine is None or machine.phase != _PathLikeMachine.PUSH:
        raise StrategyError("phi is only defined during a multi-block push")
    return machine.phi(s.cops)


# ---------------------------------------------------------------------------
# Public single-step entry points
# ---------------------------------------------------------------------------


def theorem1_move(s: GameState, m: StrategyMemory) -> tuple[JointCopMove, StrategyMemory]:
    if m.mode != "theorem1":
        raise StrategyError("memory is not in block-recursion mode")
    return m.move(s), m


def lemma4_move(s: GameState, m: StrategyMemory) -> tuple[JointCopMove, StrategyMemory]:
    if m.mode != "lemma4":
        raise StrategyError("memory is not in path-like mode")
    return m.move(s), m


# ---------------------------------------------------------------------------
# Runtime claim checks (each maps to an observation in the correctness
# argument; any violation is a bug in this implementation)
# ---------------------------------------------------------------------------


class ClaimChecker:
    """Evaluates the per-round invariants of the path-like machine plus the
    block-stability and projection-legality checks of the outer recursion."""

    def __init__(self, memory: StrategyMemory):
        self.memory = memory
        self.violations: list[tuple[int, str, str]] = []
        self._phi_hist: dict[tuple[int, int], list[int]] = {}
        self._prev_proj: Optional[tuple[int, frozenset[int], int]] = None

    def _flag(self, rnd: int, claim: str, detail: str) -> None:
        self.violations.append((rnd, claim, detail))

    def after_cop_move(self, s: GameState) -> list[str]:
        """Call with the state right after the cops moved. Returns the claim
        ids that were checked this round."""
        checked: list[str] = []
        m = self.memory
        machine = m.active_machine()
        avatar = m.last_avatar
        rnd = s.round
        if machine is not None and avatar is not None and machine.phase in (
            _PathLikeMachine.PUSH,
            _PathLikeMachine.SEND_HOME,
        ):
            for end in machine.ends:
                c = s.cops[machine.cop_of_end[end]]
                checked.append("C1")
                if machine.dist(end, c) > machine.dist(end, avatar):
                    self._flag(rnd, "C1", f"cop of {end} at {c} beyond the avatar")
            if machine.opposite:
                for end in machine.ends:
                    c = s.cops[machine.cop_of_end[end]]
                    checked.append("C2")
                    if machine.dist(end, c) + machine.dist(c, machine.opposite[end]) != machine.dist(
                        end, machine.opposite[end]
                    ):
                        self._flag(rnd, "C2", f"cop of {end} off the geodesic at {c}")
        if machine is not None and avatar is not None and machine.phase == _PathLikeMachine.PUSH:
            for end, rule in machine.last_rules.items():
                if rule == 2:
                    checked.append("C3")
                    if avatar not in machine.interior_of_home(end):
                        self._flag(
                            rnd, "C3", f"rule 2 fired for {end} with avatar at {avatar}"
                        )
            value = machine.phi(s.cops)
            hist = self._phi_hist.setdefault((machine.serial, machine.push_episode), [])
            if hist:
                checked.append("C4")
                if value > hist[-1]:
                    self._flag(rnd, "C4", f"phi rose {hist[-1]} -> {value}")
                if value == hist[-1]:
                    checked.append("C5")
                    if not any(
                        avatar in machine.interior_of_home(e) for e in machine.ends
                    ):
                        self._flag(rnd, "C5", f"phi stalled at {value} with avatar at {avatar}")
            hist.append(value)
            checked.append("C6")
            bound = 4 * m.graph.n * m.graph.n
            if machine.push_rounds > bound:
                self._flag(rnd, "C6", f"push ran {machine.push_rounds} rounds (> {bound})")
        if m.mode == "theorem1":
            lvl = m.levels[-1]
            if lvl.phase == "play-block" and s.robber is not None and s.robber != lvl.exit_vertex:
                checked.append("block-stability")
                try:
                    bct, rg, to_sub, _ = _region_bct(m.graph, lvl.region)
                    bidx = block_toward_robber(
                        rg, m._local_bct(bct, to_sub), to_sub[lvl.exit_vertex], to_sub[s.robber]
                    )
                    if bct.blocks[bidx] != lvl.block:
                        self._flag(rnd, "block-stability", "selected block invalidated")
                except Exception as exc:  # noqa: BLE001 - flagged, not raised
                    self._flag(rnd, "block-stability", f"check failed: {exc}")
            if lvl.phase == "play-block" and avatar is not None:
                key = (len(m.levels), lvl.block, avatar)
                if (
                    self._prev_proj is not None
                    and self._prev_proj[0] == key[0]
                    and self._prev_proj[1] == key[1]
                ):
                    checked.append("projection-legality")
                    prev = self._prev_proj[2]
                    if prev != avatar and not m.graph.has_edge(prev, avatar):
                        self._flag(
                            rnd,
                            "projection-legality",
                            f"projection jumped {prev} -> {avatar}",
                        )
                self._prev_proj = key
        return checked


# ---------------------------------------------------------------------------
# Simulation drivers
# ---------------------------------------------------------------------------


@dataclass
class SimulationResult:
    final_phase: Phase
    rounds: int
    transcript: list[dict]
    claim_violations: list[tuple[int, str, str]]

    @property
    def cops_won(self) -> bool:
        return self.final_phase is Phase.COPS_WON

    def to_json(self) -> dict:
        return {
            "final_phase": self.final_phase.value,
            "rounds": self.rounds,
            "cops_won": self.cops_won,
            "claim_violations": [
                {"round": r, "claim": c, "detail": d}
                for r, c, d in self.claim_violations
            ],
            "transcript": self.transcript,
        }


def _drive(
    s: GameState,
    memory: StrategyMemory,
    robber_policy,
    max_rounds: int,
    check_claims: bool,
) -> SimulationResult:
    checker = ClaimChecker(memory) if check_claims else None
    transcript: list[dict] = [
        {
            "actor": "robber",
            "action": {"type": "place", "free_cops": list(s.cops[len(s.config.exits):]), "robber": s.robber},
            "resulting_phase": s.phase.value,
        }
    ]
    rounds = 0
    while not s.is_terminal:
        if rounds >= max_rounds:
            break
        move = memory.move(s)
        s = apply_cop_move(s, move)
        record = {
            "actor": "cops",
            "action": {"type": "move", "to": list(move)},
            "resulting_phase": s.phase.value,
            "annotations": memory.annotations(),
        }
        if checker is not None and not s.is_terminal:
            record["annotations"]["claims_checked"] = checker.after_cop_move(s)
        transcript.append(record)
        if s.is_terminal:
            break
        to = robber_policy.move(s)
        s = apply_robber_move(s, to)
        transcript.append(
            {
                "actor": "robber",
                "action": {"type": "move", "to": to},
                "resulting_phase": s.phase.value,
            }
        )
        rounds += 1
    return SimulationResult(
        final_phase=s.phase,
        rounds=rounds,
        transcript=transcript,
        claim_violations=checker.violations if checker is not None else [],
    )


def simulate(
    g: Graph,
    exit_vertex: int,
    robber_policy,
    max_rounds: Optional[int] = None,
    check_claims: bool = True,
) -> SimulationResult:
    """Play the {exit}-exit game: block-recursion cops vs the given robber
    policy, which also performs the adversarial placement."""
    if not is_connected(g):
        raise ValueError("the exit game needs a connected graph")
    if not is_series_parallel(g):
        raise NotSeriesParallelError("graph has a K4 minor")
    cfg = GameConfig(g, frozenset((exit_vertex,)), 2)
    s = new_game(cfg)
    free, r0 = robber_policy.place(cfg)
    s = place_free_cops(s, free)
    s = place_robber(s, r0)
    memory = StrategyMemory(g, exit_vertex, sentry=0, patrol=1)
    if max_rounds is None:
        max_rounds = 4 * g.n * g.n
    return _drive(s, memory, robber_policy, max_rounds, check_claims)


def simulate_pair(
    g: Graph,
    ends: tuple[int, int],
    robber_policy,
    max_rounds: Optional[int] = None,
    check_claims: bool = True,
) -> SimulationResult:
    """Play the {u,v}-exit game on a path-like graph with the path-like
    machine alone (both cops pinned on the ends)."""
    cfg = GameConfig(g, frozenset(ends), 2)
    s = new_game(cfg)
    _, r0 = robber_policy.place(cfg)
    s = place_robber(s, r0)
    memory = StrategyMemory.for_path_like(g, ends)
    if max_rounds is None:
        max_rounds = 4 * g.n * g.n
    return _drive(s, memory, robber_policy, max_rounds, check_claims)
