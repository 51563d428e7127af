"""Digraph <-> balanced-bipartite vertex-split transform, exact Hamiltonicity
and matching solvers, degree-condition predicates, and a claim verifier."""

from ._version import __version__
from .conditions import (
    CONDITION_IDS,
    ConditionReport,
    dirac,
    disjoint_hc_degree,
    faudree,
    ghouila_houri,
    las_vergnas,
    moon_moser_half,
    moon_moser_k,
    ore_bipartite,
    woodall,
    woodall_plus2,
    zhu_digraph,
)
from .core import (
    DIGRAPH_CYCLE,
    GRAPH_CYCLE,
    BipartiteGraph,
    CycleWitness,
    Digraph,
    Graph,
    GraphError,
    Matching,
    SelfLoopError,
    VertexRangeError,
    build_digraph,
    check_cycle,
    degrees,
    format_bipartite_vertex,
)
from .fileio import (
    ParseError,
    parse_graph_file,
    parse_graph_text,
    serialize_graph,
    to_dot,
    write_graph_file,
)
from .incidence import (
    bipartite_incidence,
    graph_incidence,
    incidence_matrix,
    is_digraph_incidence,
    is_graph_incidence,
    is_split_incidence,
)
from .solvers import (
    DEFAULT_NODE_BUDGET,
    BudgetExhausted,
    DisjointPair,
    SolveResult,
    enumerate_hamiltonian_cycles,
    enumerate_perfect_matchings,
    extends_to_hamiltonian,
    find_hamiltonian_cycle,
    find_hamiltonian_cycle_bipartite,
    find_hamiltonian_cycle_undirected,
    find_two_disjoint_hamiltonian_cycles,
    find_two_disjoint_perfect_matchings,
    has_perfect_matching,
    max_matching,
    strongly_connected,
    strongly_connected_components,
)
from .verifier import (
    CLAIMS,
    ESTABLISHED_CLAIM_IDS,
    Claim,
    ClaimVerdict,
    Counterexample,
    CounterexampleStore,
    StoreError,
    build_report,
    check_claim,
    enumerate_bipartite,
    enumerate_digraphs,
    enumerate_graphs,
    established_failures,
    is_spanning_cycle_factor,
    render_table,
    report_json,
    reverify_record,
    run_suite,
)
from .zmapping import (
    SplitPair,
    f_matrix,
    ham_cycle_pullback,
    matching_pushforward,
    split_incidence,
    unzmap,
    zmap,
)
