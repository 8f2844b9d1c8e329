from .partitions import (
    Cell,
    Partition,
    RimHook,
    branching_neighbors,
    conjugate,
    hook_degree,
    hook_lengths,
    partitions_of,
    remove_rim_hook,
    rim_hooks,
)
from .characters import (
    CycleType,
    character_magnitude_bound,
    character_table,
    class_size,
    constituent_table,
    cycle_types_of,
    mn_character,
    mn_character_of_composition,
    permutation_character_constituents_3,
    small_degree_irreducibles,
    small_shapes,
)
from .derangements import derangement_classes, derangement_degree, is_t_derangement_type
