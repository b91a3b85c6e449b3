"""Community detection on multigraphs via cooperative games.

Two engines over a shared partition substrate: Myerson-value best
response on a path-discounted coalition worth, and hedonic better
response on symmetric pair values (alpha model and modularity family).
All game arithmetic is exact (fractions), so stability thresholds and
sweep breakpoints come out as exact rationals.
"""

from .errors import EdgeListError, PartitionError, SizeGateError
from .multigraph import (
    Multigraph,
    NodePathProfile,
    PathProfile,
    coalition_path_counts,
    connected_components,
    geodesic_profile,
    induced_subgraph,
    node_path_counts,
    parse_edge_list,
    serialize_edge_list,
)
from .partition import (
    CAP_REACHED,
    CYCLE_DETECTED,
    GREEDY_BEST,
    ROUND_ROBIN,
    SEEDED_RANDOM,
    STABLE,
    Move,
    Partition,
    Schedule,
    Trace,
    TraceStep,
    apply_move,
    canonical_form,
    enumerate_deviations,
    run_dynamics,
)
from .myerson import (
    ORACLE_MAX_NODES,
    CharPoly,
    characteristic_value,
    component_characteristic,
    external_stability_check,
    myerson_allocation,
    myerson_gain,
    myerson_nash_stable,
    myerson_payoff,
    myerson_shapley_oracle,
)
from .hedonic import (
    BRUTEFORCE_MAX_NODES,
    AlphaModel,
    Modularity,
    Potential,
    SweepRow,
    SweepTable,
    alpha_sweep,
    better_response,
    bruteforce_max_partition,
    hedonic_payoff,
    iter_set_partitions,
    move_gain,
    nash_stable,
    pair_value,
    partition_threshold,
    potential,
    potential_form,
)
from .datasets import (
    dataset_info,
    dataset_names,
    example2_clique_partition,
    karate_split_15_19,
    karate_split_16_18,
    karate_split_17_17,
    load_dataset,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeListError",
    "PartitionError",
    "SizeGateError",
    "Multigraph",
    "PathProfile",
    "NodePathProfile",
    "parse_edge_list",
    "serialize_edge_list",
    "induced_subgraph",
    "connected_components",
    "geodesic_profile",
    "coalition_path_counts",
    "node_path_counts",
    "Partition",
    "Move",
    "Schedule",
    "Trace",
    "TraceStep",
    "apply_move",
    "canonical_form",
    "enumerate_deviations",
    "run_dynamics",
    "ROUND_ROBIN",
    "SEEDED_RANDOM",
    "GREEDY_BEST",
    "STABLE",
    "CAP_REACHED",
    "CYCLE_DETECTED",
    "CharPoly",
    "characteristic_value",
    "component_characteristic",
    "myerson_allocation",
    "myerson_shapley_oracle",
    "myerson_gain",
    "myerson_payoff",
    "myerson_nash_stable",
    "external_stability_check",
    "ORACLE_MAX_NODES",
    "AlphaModel",
    "Modularity",
    "Potential",
    "SweepRow",
    "SweepTable",
    "pair_value",
    "potential",
    "potential_form",
    "move_gain",
    "nash_stable",
    "hedonic_payoff",
    "better_response",
    "partition_threshold",
    "alpha_sweep",
    "bruteforce_max_partition",
    "iter_set_partitions",
    "BRUTEFORCE_MAX_NODES",
    "load_dataset",
    "dataset_names",
    "dataset_info",
    "example2_clique_partition",
    "karate_split_15_19",
    "karate_split_16_18",
    "karate_split_17_17",
]
