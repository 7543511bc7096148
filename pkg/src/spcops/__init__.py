"""Cops-and-robber game with exits on series-parallel graphs."""

from .graph import (
    Graph,
    all_distances_from,
    connected_components,
    distance,
    induced_subgraph,
)
from .structure import (
    BlockCutTree,
    EndPairCertificate,
    block_cut_tree,
    block_toward_robber,
    find_end_pair,
    generate_sp,
    generate_two_connected_sp,
    interior,
    is_series_parallel,
    projection,
    replay_certificate,
)
from .engine import (
    GameConfig,
    GameState,
    Phase,
    apply_cop_move,
    apply_robber_move,
    legal_cop_moves,
    legal_robber_moves,
    new_game,
    place_free_cops,
    place_robber,
)
from .solver import (
    SolveTable,
    adversarial_placement,
    is_exit_copwin,
    optimal_robber_policy,
    solve,
)
from .strategy import (
    StrategyMemory,
    lemma4_move,
    phi,
    simulate,
    simulate_pair,
    theorem1_move,
)

__all__ = [name for name in dir() if not name.startswith("_")]
