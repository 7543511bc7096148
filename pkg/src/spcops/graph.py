"""Immutable finite undirected graphs and the metric primitives on them.

Vertices are dense naturals 0..n-1; edges are stored as normalized
(min, max) pairs. Graph values never mutate after construction, so they
are safe to share between concurrent readers.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


Edge = tuple[int, int]


def normalize_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < b < self.n):
                raise ValueError(f"edge ({a},{b}) out of range or unnormalized")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            norm.add(normalize_edge(a, b))
        return cls(n, frozenset(norm))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(nb)) for nb in adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise ValueError(f"invalid vertex id {v} (graph has {self.n} vertices)")
        return v

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v plus v itself, sorted (the legal one-step targets)."""
        return tuple(sorted((v, *self.adjacency[v])))

    def has_edge(self, a: int, b: int) -> bool:
        return normalize_edge(a, b) in self.edges

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def all_distances_from(g: Graph, a: int) -> tuple[Optional[int], ...]:
    """BFS distances from a; None marks unreachable vertices."""
    g.check_vertex(a)
    dist: list[Optional[int]] = [None] * g.n
    dist[a] = 0
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return tuple(dist)


def distance(g: Graph, a: int, b: int) -> Optional[int]:
    """Shortest-path distance, None if a and b are in different components."""
    g.check_vertex(b)
    return all_distances_from(g, a)[b]


def connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    """Partition of the vertices into components, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph together with the bidirectional id mapping."""

    graph: Graph
    to_sub: dict[int, int]  # original id -> subgraph id
    to_orig: tuple[int, ...]  # subgraph id -> original id


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    verts = sorted(set(s))
    if not verts:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    for v in verts:
        g.check_vertex(v)
    to_sub = {v: i for i, v in enumerate(verts)}
    edges = [
        (to_sub[a], to_sub[b])
        for a, b in g.edges
        if a in to_sub and b in to_sub
    ]
    return InducedSubgraph(Graph.from_edges(len(verts), edges), to_sub, tuple(verts))


def restricted_distances(
    g: Graph,
    allowed: frozenset[int],
    source: int,
    banned_edges: frozenset[Edge] = frozenset(),
) -> dict[int, int]:
    """BFS distances from source inside the subgraph induced by `allowed`,
    skipping `banned_edges`. Only reachable vertices appear in the result."""
    if source not in allowed:
        raise ValueError(f"source {source} not in the allowed vertex set")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w in allowed and w not in dist and normalize_edge(v, w) not in banned_edges:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist
