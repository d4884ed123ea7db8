"""tightbounds: exact affine-bound conjecturing over invariant tables.

Feed it a table of mathematical objects (graphs or positive integers) with
exact-rational invariants and boolean properties; it proposes the tightest
affine upper and lower bounds on chosen target invariants, ranks them by how
often they hold with equality, filters the redundant ones, and supports a
refine-by-counterexample loop that folds refuting examples back into the
table.
"""

from .conjectures import (
    AffineForm,
    ConjectureRun,
    EqualityConjecture,
    LinearConjecture,
    detect_equalities,
    filter_blocked_families,
    filter_known,
    make_all_lower_linear_conjectures,
    make_all_upper_2d_conjectures,
    make_all_upper_linear_conjectures,
    render_conjecture,
    render_equality,
    render_run,
    static_dalmatian,
    write_on_the_wall,
)
from .datasets import figure1_bipartite_table, figure1_graphs, figure1_table
from .fitting import FitResult, FitStatus, fit_lower, fit_upper, fit_upper_2d
from .graphs import (
    Graph,
    GraphError,
    InvariantVector,
    compute_invariant_vector,
    independence_number,
    is_bipartite,
    is_connected,
    is_regular,
    is_tree,
    matching_number,
    max_degree,
    min_degree,
    parse_edge_list,
)
from .integers import IntegerRecord, build_integer_dataset, compute_integer_record
from .refine import (
    CounterexampleReport,
    enumerate_connected_graphs,
    find_smallest_counterexample,
    ingest_graph6,
    red_burton,
)
from .table import (
    Hypothesis,
    KnowledgeTable,
    TableError,
    TableFormatError,
    build_graph_table,
    build_integer_table,
    load_table,
    save_table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
