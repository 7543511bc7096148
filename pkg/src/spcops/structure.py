"""Structural machinery for series-parallel graphs.

Covers block decomposition, K4-minor-free recognition by series/parallel
reduction, end-pair certification with a replayable construction witness,
robber projection onto a block, the block-selection rule used by the
two-cop strategy, and deterministic random instance generation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import (
    Edge,
    Graph,
    all_distances_from,
    connected_components,
    induced_subgraph,
    is_connected,
    normalize_edge,
)


class ProjectionError(RuntimeError):
    """The distance minimizer onto a block was not unique (not a block)."""


@dataclass
class BlockCutTree:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_of_edge: dict[Edge, int]

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Hopcroft-Tarjan biconnected components, iterative to spare the stack."""
    if g.n < 2:
        raise ValueError("block decomposition needs at least 2 vertices")
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")

    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    root_children = 0
    cuts: set[int] = set()
    edge_stack: list[Edge] = []
    block_edge_sets: list[list[Edge]] = []

    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    stack: list[tuple[int, iter]] = [(0, iter(g.adjacency[0]))]

    while stack:
        v, it = stack[-1]
        pushed = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(g.adjacency[w])))
                pushed = True
                break
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if pushed:
            continue
        stack.pop()
        if not stack:
            continue
        u = stack[-1][0]
        low[u] = min(low[u], low[v])
        if low[v] >= disc[u]:
            # tree edge (u, v) closes a biconnected component
            if u == 0:
                root_children += 1
            else:
                cuts.add(u)
            comp: list[Edge] = []
            while edge_stack:
                e = edge_stack.pop()
                comp.append(e)
                if e == (u, v):
                    break
            block_edge_sets.append(comp)
    if root_children >= 2:
        cuts.add(0)

    blocks: list[frozenset[int]] = []
    block_of_edge: dict[Edge, int] = {}
    for comp in block_edge_sets:
        verts = set()
        idx = len(blocks)
        for a, b in comp:
            verts.add(a)
            verts.add(b)
            block_of_edge[normalize_edge(a, b)] = idx
        blocks.append(frozenset(verts))
    return BlockCutTree(tuple(blocks), frozenset(cuts), block_of_edge)


def is_two_connected(g: Graph) -> bool:
    """True for K2 and for graphs with one block and no cut vertex."""
    if g.n < 2 or not is_connected(g):
        return False
    bct = block_cut_tree(g)
    return len(bct.blocks) == 1


def interior(bct: BlockCutTree, b: int) -> frozenset[int]:
    """Vertices of block b that are not cut vertices of the whole graph."""
    if not (0 <= b < len(bct.blocks)):
        raise ValueError(f"invalid block index {b}")
    return bct.blocks[b] - bct.cut_vertices


# ---------------------------------------------------------------------------
# Series/parallel reduction on multigraphs with edge identities.
#
# Reduction steps are recorded so that, reversed, they replay as a
# duplicate/subdivide construction from a single base edge.
# ---------------------------------------------------------------------------


@dataclass
class _MergeStep:
    kept: int
    removed: int


@dataclass
class _SuppressStep:
    vertex: int
    left_edge: int   # connected vertex to left_end
    left_end: int
    right_edge: int
    right_end: int
    new_edge: int


@dataclass
class _Multigraph:
    ends: dict[int, tuple[int, int]]          # edge id -> endpoints
    incident: dict[int, set[int]]             # vertex -> incident edge ids
    next_id: int

    @classmethod
    def from_graph(cls, g: Graph) -> "_Multigraph":
        ends = {i: e for i, e in enumerate(g.sorted_edges())}
        incident: dict[int, set[int]] = {v: set() for v in g.vertices}
        for i, (a, b) in ends.items():
            incident[a].add(i)
            incident[b].add(i)
        return cls(ends, incident, len(ends))

    def remove_edge(self, eid: int) -> None:
        a, b = self.ends.pop(eid)
        self.incident[a].discard(eid)
        self.incident[b].discard(eid)

    def add_edge(self, a: int, b: int) -> int:
        eid = self.next_id
        self.next_id += 1
        self.ends[eid] = (a, b)
        self.incident[a].add(eid)
        self.incident[b].add(eid)
        return eid


def _sp_reduce(
    mg: _Multigraph, protected: frozenset[int]
) -> list[Union[_MergeStep, _SuppressStep]]:
    """Exhaustively merge parallel edges and suppress unprotected degree-2
    vertices. Mutates mg; returns the steps in the order applied."""
    steps: list[Union[_MergeStep, _SuppressStep]] = []
    changed = True
    while changed:
        changed = False
        # merge parallel edges (keep the smallest id in each class)
        groups: dict[Edge, list[int]] = {}
        for eid, (a, b) in mg.ends.items():
            groups.setdefault(normalize_edge(a, b), []).append(eid)
        for ids in groups.values():
            if len(ids) > 1:
                ids.sort()
                for removed in ids[1:]:
                    mg.remove_edge(removed)
                    steps.append(_MergeStep(kept=ids[0], removed=removed))
                changed = True
        # suppress one degree-2 vertex, smallest id first for determinism
        for v in sorted(mg.incident):
            if v in protected or len(mg.incident[v]) != 2:
                continue
            e1, e2 = sorted(mg.incident[v])
            a = next(x for x in mg.ends[e1] if x != v)
            b = next(x for x in mg.ends[e2] if x != v)
            if a == b:
                continue  # parallel pair through v; merged next pass
            mg.remove_edge(e1)
            mg.remove_edge(e2)
            del mg.incident[v]
            new = mg.add_edge(a, b)
            steps.append(
                _SuppressStep(
                    vertex=v,
                    left_edge=e1,
                    left_end=a,
                    right_edge=e2,
                    right_end=b,
                    new_edge=new,
                )
            )
            changed = True
            break
    return steps


def _reduces_to_single_edge(g: Graph) -> bool:
    mg = _Multigraph.from_graph(g)
    _sp_reduce(mg, frozenset())
    return len(mg.ends) == 1 and len(mg.incident) == 2


def is_series_parallel(g: Graph) -> bool:
    """True iff g has no K4 minor: every nontrivial block reduces to K2."""
    for comp in connected_components(g):
        if len(comp) <= 2:
            continue
        sub = induced_subgraph(g, comp)
        bct = block_cut_tree(sub.graph)
        for block in bct.blocks:
            if len(block) <= 2:
                continue
            blockg = induced_subgraph(sub.graph, block).graph
            if not _reduces_to_single_edge(blockg):
                return False
    return True


# ---------------------------------------------------------------------------
# End pairs of path-like graphs (buildable from a single edge uv by
# duplicating and subdividing edges) with replayable certificates.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BaseEdgeOp:
    u: int
    v: int
    edge: int


@dataclass(frozen=True)
class DuplicateOp:
    edge: int
    new_edge: int


@dataclass(frozen=True)
class SubdivideOp:
    edge: int
    new_vertex: int
    left_edge: int   # new_vertex -- left_end
    left_end: int
    right_edge: int  # new_vertex -- right_end
    right_end: int


ConstructionOp = Union[BaseEdgeOp, DuplicateOp, SubdivideOp]


@dataclass(frozen=True)
class EndPairCertificate:
    """Witness that a graph is path-like with the declared pair of ends."""

    ends: tuple[int, int]
    construction: tuple[ConstructionOp, ...]

    def to_json(self) -> list[dict]:
        out = []
        for op in self.construction:
            if isinstance(op, BaseEdgeOp):
                out.append({"op": "base-edge", "u": op.u, "v": op.v, "edge": op.edge})
            elif isinstance(op, DuplicateOp):
                out.append({"op": "duplicate", "edge": op.edge, "new_edge": op.new_edge})
            else:
                out.append(
                    {
                        "op": "subdivide",
                        "edge": op.edge,
                        "new_vertex": op.new_vertex,
                        "new_edges": [
                            [op.left_edge, op.left_end],
                            [op.right_edge, op.right_end],
                        ],
                    }
                )
        return out


class CertificateReplayError(RuntimeError):
    pass


def replay_certificate(cert: EndPairCertificate) -> Graph:
    """Rebuild the graph a certificate describes; raises if the sequence is
    not a valid duplicate/subdivide construction ending in a simple graph."""
    if not cert.construction or not isinstance(cert.construction[0], BaseEdgeOp):
        raise CertificateReplayError("construction must start with a base edge")
    base = cert.construction[0]
    if (base.u, base.v) != cert.ends and (base.v, base.u) != cert.ends:
        raise CertificateReplayError("base edge does not join the declared ends")
    ends: dict[int, tuple[int, int]] = {base.edge: (base.u, base.v)}
    verts = {base.u, base.v}
    for op in cert.construction[1:]:
        if isinstance(op, DuplicateOp):
            if op.edge not in ends or op.new_edge in ends:
                raise CertificateReplayError(f"bad duplicate {op}")
            ends[op.new_edge] = ends[op.edge]
        elif isinstance(op, SubdivideOp):
            if op.edge not in ends or op.new_vertex in verts:
                raise CertificateReplayError(f"bad subdivide {op}")
            a, b = ends.pop(op.edge)
            if {op.left_end, op.right_end} != {a, b}:
                raise CertificateReplayError(f"subdivide endpoints mismatch {op}")
            ends[op.left_edge] = (op.new_vertex, op.left_end)
            ends[op.right_edge] = (op.new_vertex, op.right_end)
            verts.add(op.new_vertex)
        else:
            raise CertificateReplayError("base edge appears after the first step")
    simple = {normalize_edge(a, b) for a, b in ends.values()}
    if len(simple) != len(ends):
        raise CertificateReplayError("construction leaves parallel edges")
    n = max(verts) + 1
    if verts != set(range(n)):
        raise CertificateReplayError("vertex ids are not dense")
    return Graph.from_edges(n, simple)


def _two_terminal_reduction(
    g: Graph, u: int, v: int
) -> Optional[tuple[int, list[Union[_MergeStep, _SuppressStep]]]]:
    """Reduce g protecting u, v. On success returns (final edge id, steps)."""
    mg = _Multigraph.from_graph(g)
    steps = _sp_reduce(mg, frozenset((u, v)))
    if len(mg.ends) == 1:
        (eid, (a, b)) = next(iter(mg.ends.items()))
        if {a, b} == {u, v}:
            return eid, steps
    return None


def _certificate_from_steps(
    u: int, v: int, final_edge: int, steps: list
) -> EndPairCertificate:
    ops: list[ConstructionOp] = [BaseEdgeOp(u=u, v=v, edge=final_edge)]
    for step in reversed(steps):
        if isinstance(step, _MergeStep):
            ops.append(DuplicateOp(edge=step.kept, new_edge=step.removed))
        else:
            ops.append(
                SubdivideOp(
                    edge=step.new_edge,
                    new_vertex=step.vertex,
                    left_edge=step.left_edge,
                    left_end=step.left_end,
                    right_edge=step.right_edge,
                    right_end=step.right_end,
                )
            )
    return EndPairCertificate(ends=(u, v), construction=tuple(ops))


def find_end_pair(g: Graph, u: int) -> tuple[int, EndPairCertificate]:
    """Smallest v such that (u, v) is a pair of ends of the path-like graph g."""
    g.check_vertex(u)
    if g.n < 2:
        raise ValueError("end pairs need at least 2 vertices")
    if not is_two_connected(g):
        raise ValueError("end pairs are defined for 2-connected graphs")
    if not is_series_parallel(g):
        raise ValueError("end pairs are defined for series-parallel graphs")
    for v in range(g.n):
        if v == u:
            continue
        result = _two_terminal_reduction(g, u, v)
        if result is not None:
            final_edge, steps = result
            return v, _certificate_from_steps(u, v, final_edge, steps)
    raise RuntimeError(
        "no co-end found for a 2-connected series-parallel graph "
        "(this contradicts the path-like characterization)"
    )


def is_end_pair(g: Graph, u: int, v: int) -> bool:
    """True iff (u, v) is a valid pair of ends of g, i.e. g grows from the
    single edge uv by duplicating and subdividing edges. Such graphs may be
    chains of several blocks; 2-connectivity is not required."""
    if u == v:
        return False
    if not is_connected(g) or not is_series_parallel(g):
        return False
    return _two_terminal_reduction(g, u, v) is not None


# ---------------------------------------------------------------------------
# Projection and block selection
# ---------------------------------------------------------------------------


def projection(g: Graph, block: frozenset[int], r: int) -> int:
    """The unique vertex of `block` closest to r; unique when block really is
    a block of g and r is in the same component."""
    g.check_vertex(r)
    dist = all_distances_from(g, r)
    best: list[int] = []
    best_d: Optional[int] = None
    for v in sorted(block):
        d = dist[v]
        if d is None:
            continue
        if best_d is None or d < best_d:
            best, best_d = [v], d
        elif d == best_d:
            best.append(v)
    if best_d is None:
        raise ProjectionError("block unreachable from the robber")
    if len(best) != 1:
        raise ProjectionError(
            f"distance minimizer onto {sorted(block)} from {r} is not unique: {best}"
        )
    return best[0]


def block_toward_robber(g: Graph, bct: BlockCutTree, u: int, r: int) -> int:
    """Index of the unique block containing u that carries an edge of a path
    from u to the robber (the first block on the block-cut-tree path)."""
    g.check_vertex(u)
    g.check_vertex(r)
    if u == r:
        raise ValueError("block selection requires the robber away from u")
    allowed = frozenset(g.vertices) - {u}
    from .graph import restricted_distances

    reach = restricted_distances(g, allowed, r)
    candidates = [
        i
        for i in bct.blocks_containing(u)
        if any(w in reach for w in bct.blocks[i] if w != u)
    ]
    if len(candidates) != 1:
        raise RuntimeError(
            f"expected exactly one block toward the robber, got {candidates}"
        )
    return candidates[0]


# ---------------------------------------------------------------------------
# Instance generation
# ---------------------------------------------------------------------------


def _grow_path_like(rng: random.Random, n: int) -> list[Edge]:
    """Edges of a 2-connected series-parallel graph on local ids 0..n-1,
    grown from a triangle by subdivisions and length-2 ears."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if n == 2:
        return [(0, 1)]
    edges = {(0, 1), (0, 2), (1, 2)}
    for w in range(3, n):
        a, b = sorted(edges)[rng.randrange(len(edges))]
        if rng.random() < 0.5:
            # subdivide: replace (a,b) by the path a-w-b
            edges.remove((a, b))
        # otherwise: duplicate (a,b) then subdivide the copy (an ear)
        edges.add(normalize_edge(a, w))
        edges.add(normalize_edge(b, w))
    return sorted(edges)


def generate_two_connected_sp(seed: int, n_vertices: int) -> Graph:
    """Deterministic random 2-connected (path-like) series-parallel graph."""
    rng = random.Random(seed)
    return Graph.from_edges(n_vertices, _grow_path_like(rng, n_vertices))


def generate_sp(seed: int, n_vertices: int, n_blocks: int = 1) -> Graph:
    """Deterministic random connected series-parallel graph with exactly
    n_blocks blocks, glued at random cut vertices."""
    if n_vertices < 2:
        raise ValueError("need at least 2 vertices")
    if n_blocks < 1:
        raise ValueError("need at least one block")
    if n_blocks > 1 and n_vertices < n_blocks + 1:
        raise ValueError(
            f"cannot fit {n_blocks} blocks into {n_vertices} vertices"
        )
    rng = random.Random(seed)
    # piece sizes >= 2 summing to n_vertices + n_blocks - 1
    sizes = [2] * n_blocks
    for _ in range(n_vertices - 1 - n_blocks):
        sizes[rng.randrange(n_blocks)] += 1
    edges: list[Edge] = []
    n = 0
    for size in sizes:
        piece = _grow_path_like(rng, size)
        if n == 0:
            mapping = list(range(size))
            n = size
        else:
            glue = rng.randrange(n)
            mapping = [glue] + list(range(n, n + size - 1))
            n += size - 1
        edges.extend(normalize_edge(mapping[a], mapping[b]) for a, b in piece)
    return Graph.from_edges(n_vertices, edges)
