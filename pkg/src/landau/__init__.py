"""Tournament score sequences: validation, realization, and jump algorithms."""

from .sequences import (
    AlreadyRegular,
    AlreadyTransitive,
    Converged,
    JumpAlgorithm,
    JumpStep,
    JumpTrace,
    LandauSequence,
    Order,
    ScoreVector,
    ViolationKind,
    ViolationReport,
    c_value,
    compare_order,
    distance,
    down_jump_step,
    down_trace,
    first_equality_index,
    first_violation,
    gr_down_step,
    gr_down_trace,
    max_c_value,
    max_down_jumps,
    regular_sequence,
    transitive_sequence,
    up_step,
    up_trace,
    validate_landau,
    validate_strong_landau,
)
from .tournaments import (
    DoublePairError,
    InvalidPathError,
    MissingPairError,
    SelfLoopError,
    StrongDecomposition,
    Tournament,
    TournamentError,
    UnreachableError,
    VertexPath,
    count_3cycles,
    find_path,
    from_arcs,
    is_strong,
    nearly_regular,
    realize,
    realize_stages,
    reverse_path,
    rotational_regular,
    score_sequence,
    strong_components,
)
from .oracle import (
    CapExceededError,
    EnumerationStats,
    enumerate_landau_sequences,
    enumerate_tournaments,
    realizable_by_brute_force,
    stats,
)

__all__ = [name for name in dir() if not name.startswith("_")]
