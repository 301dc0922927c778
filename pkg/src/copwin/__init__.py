"""copwin: corner ranks, capture times and rank cardinality vectors of cop-win graphs.

>>> from copwin import named_graph, corner_rank, capture_time_by_rank
>>> g = named_graph("H7")
>>> corner_rank(g).alpha, capture_time_by_rank(g)
(4, 3)
"""

__version__ = "0.1.0"

from .errors import CopWinError, GameStateError, GraphParseError, NotCopWinError, ResourceCapError
from .infinity import INFINITY, format_value, is_finite
from .graph import (
    Graph,
    bfs_distances,
    closed_neighborhood,
    connected_components,
    dominates,
    induced_subgraph,
    is_connected,
    parse_graph,
    relabel,
    serialize_graph,
    strictly_corners,
    twins,
)
from .canon import are_isomorphic, canonical_form, canonical_labeling
from .vectors import (
    RankVector,
    candidate_vectors,
    initial_segment,
    is_augmentation,
    is_extension,
    leq,
    parse_vector,
    predecessors,
    standard_extension,
)
from .rank import (
    CornerRanking,
    InvariantViolation,
    ProjectionMap,
    TopHeaviness,
    build_projections,
    capture_time_by_rank,
    check_path_contraction,
    corner_rank,
    rank_cardinality_vector,
    top_heaviness,
)
from .game import CaptureTable, capture_time_by_game, max_capture_time, optimal_cop_move, solve_game
from .enumerate import class_count, enumerate_connected, enumerate_with_forms
from .search import (
    MinimalityVerdict,
    RealizationCensus,
    add_twin,
    census,
    check_minimal,
    extend_tail,
    truncate,
)
from .catalog import Fixture, bundled_corpus, check_fixture, list_named, load_corpus, named_graph
from .suites import SuiteReport, verify_suite
