"""Independent reference implementations used only by the tests.

Both oracles are deliberately naive so they share no code (and no bugs)
with the package: a brute-force K4-minor search over connected branch
sets, and a value-iteration minimax for the exit game.
"""
from __future__ import annotations

import itertools

from spcops.graph import Graph


# ---------------------------------------------------------------------------
# K4 minor by exhaustive branch-set enumeration (bitmask sets, n <= ~10)
# ---------------------------------------------------------------------------


def _connected_masks(g: Graph) -> list[int]:
    """All nonempty vertex subsets (as bitmasks) inducing a connected subgraph."""
    nbr = [0] * g.n
    for a, b in g.edges:
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    out = []
    for mask in range(1, 1 << g.n):
        lo = mask & -mask
        seen = lo
        frontier = lo
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            grow = nbr[v] & mask & ~seen
            seen |= grow
            frontier |= grow
        if seen == mask:
            out.append(mask)
    return out


def has_k4_minor(g: Graph) -> bool:
    """True iff four disjoint connected branch sets are pairwise adjacent."""
    if g.n < 4:
        return False
    masks = _connected_masks(g)
    nbr = [0] * g.n
    for a, b in g.edges:
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a

    def adjacent(m1: int, m2: int) -> bool:
        m = m1
        while m:
            v = m & -m
            if nbr[v.bit_length() - 1] & m2:
                return True
            m &= m - 1
        return False

    # fix the branch set containing the lowest used vertex to cut symmetry
    for i, m1 in enumerate(masks):
        for m2 in masks:
            if m2 & m1 or not adjacent(m1, m2):
                continue
            for m3 in masks:
                if m3 & (m1 | m2) or not (adjacent(m1, m3) and adjacent(m2, m3)):
                    continue
                used = m1 | m2 | m3
                for m4 in masks:
                    if m4 & used:
                        continue
                    if adjacent(m1, m4) and adjacent(m2, m4) and adjacent(m3, m4):
                        return True
    return False


def is_k4_minor_free(g: Graph) -> bool:
    return not has_k4_minor(g)


# ---------------------------------------------------------------------------
# Naive minimax for the exit game (value iteration to a fixpoint)
# ---------------------------------------------------------------------------


def _win_table(g: Graph, exits: frozenset[int], k: int) -> dict:
    """Cops-win labels for every (sorted cop tuple, robber, cops-to-move)
    state, by iterating the one-step improvement until nothing changes."""
    verts = range(g.n)
    cop_sets = list(itertools.combinations_with_replacement(verts, k))
    win: dict[tuple[tuple[int, ...], int, bool], bool] = {}
    for cs in cop_sets:
        for r in verts:
            for cops_to_move in (True, False):
                win[(cs, r, cops_to_move)] = r in cs

    def joint_moves(cs: tuple[int, ...]) -> itertools.product:
        return itertools.product(*(g.closed_neighbors(c) for c in cs))

    changed = True
    while changed:
        changed = False
        for (cs, r, mover), val in list(win.items()):
            if val:
                continue
            if mover:  # cops to move
                ok = False
                for mv in joint_moves(cs):
                    c2 = tuple(sorted(mv))
                    if r in c2:
                        ok = True
                        break
                    if r in exits:
                        continue  # the robber walks out after this cop move
                    if win[(c2, r, False)]:
                        ok = True
                        break
            else:  # robber to move; cops win only if every reply loses
                ok = all(win[(cs, r2, True)] for r2 in g.closed_neighbors(r))
            if ok:
                win[(cs, r, mover)] = True
                changed = True
    return win


def minimax_exit_copwin(g: Graph, exits: frozenset[int], k: int) -> bool:
    """Cops win for EVERY free-cop placement and robber start (both picked
    by the robber), with |exits| cops pinned on the exits."""
    if k < len(exits):
        raise ValueError("need a cop per exit")
    pinned = tuple(sorted(exits))
    free = k - len(pinned)
    win = _win_table(g, exits, k)
    for extra in itertools.combinations_with_replacement(range(g.n), free):
        cops0 = tuple(sorted(pinned + extra))
        for r0 in range(g.n):
            if r0 in cops0:
                continue
            if not win[(cops0, r0, True)]:
                return False
    return True
