"""Spanning caterpillars, straight orderings, and burning numbers of
biconvex bipartite graphs, with brute-force oracles at desk scale."""

from .burning import (
    BurnSchedule,
    ConjectureReport,
    ball,
    burning_schedule_for_k,
    ceil_sqrt,
    check_conjecture,
    exact_burning_number,
    is_burning_schedule,
    schedule_from_caterpillar,
    simulate_burning,
)
from .caterpillar import (
    CaseTrace,
    Caterpillar,
    build_spanning_caterpillar,
    caterpillar_violation,
    extreme_neighbors,
    interval_attachment,
    is_caterpillar,
    verify_spanning_caterpillar,
    vertex_replacement,
)
from .errors import (
    BudgetExceeded,
    DuplicateEdge,
    Error,
    ExceedsKMax,
    FallbackExhausted,
    FormatError,
    IndexOutOfRange,
    InternalProofViolation,
    InvalidPermutation,
    IsolatedVertex,
    NoStraightShortestPath,
    NotAPath,
    NotATree,
    NotConnected,
    ObservationViolated,
    OrderingNotStraight,
    ReplacementBreaksPath,
)
from .generators import (
    GenSpec,
    caterpillar_case_fixtures,
    fig1_graph,
    gen_chain,
    gen_random_bipartite,
    gen_staircase,
    generate,
)
from .graph import (
    PART_A,
    PART_B,
    BipartiteGraph,
    SubgraphMap,
    VertexId,
    bfs_distance,
    bfs_distances,
    induced_subgraph,
    is_connected,
    transpose,
)
from .io import (
    dumps_graph,
    format_edgelist,
    graph_from_json_dict,
    graph_to_json_dict,
    loads_graph,
    parse_edgelist,
)
from .oracle import (
    BiconvexScan,
    CaterpillarScan,
    OracleBudget,
    canonical_tree_form,
    enumerate_trees,
    iter_spanning_trees,
    oracle_biconvex_scan,
    oracle_caterpillar_scan,
    oracle_has_spanning_caterpillar,
    oracle_is_biconvex,
)
from .orderings import (
    CrossPair,
    DualOrdering,
    find_biconvex_ordering,
    find_biconvex_s_ordering,
    find_cross_pairs,
    is_biconvex,
    is_convex_side,
    is_s_ordering,
)
from .spath import StraightPath, is_s_path, shortest_s_path

__version__ = "0.1.0"
