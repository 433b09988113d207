"""plumbjsj: combinatorial reduction of decorated plumbing graphs, with the
supporting slope, continued-fraction, and monodromy arithmetic."""

from plumbjsj._kernel import BACKEND as KERNEL_BACKEND
from plumbjsj.arith import (
    INFINITY,
    IntMatrix2,
    MonodromyWord,
    TorusCurve,
    factor_monodromy,
    gluing_matrix,
    meridian_after_surgeries,
    mixed_torus_slopes,
    monodromy_matrix,
    neg_cf_evaluate,
    neg_cf_expand,
    split_slopes,
)
from plumbjsj.diagram import (
    BreakResult,
    ChainDiagram,
    SteinDescription,
    UnsupportedShapeError,
    break_cyclic,
    break_linear,
    bundle_counts,
    count_structures,
    eligible_chain,
    is_inconsistent_chain,
    is_universally_tight,
    lens_chain,
    stein_description,
)
from plumbjsj.graph import (
    GraphStructureError,
    Path,
    PlumbingGraph,
    ValidationReport,
    is_consistent,
    is_extreme,
    validate_graph,
    vertex_unknot,
)
from plumbjsj.graphfile import GraphParseError, parse_graph_file, write_graph_file
from plumbjsj.reduction import (
    ReductionTree,
    RoundHandleDatum,
    SizeLimitError,
    maximal_consistent_subgraphs,
    minimal_inconsistent_paths,
    non_extreme_vertices,
    reduce_to_tree,
    reduction_children,
)
from plumbjsj.report import emit_dot, render_report
from plumbjsj.unknot import UnknotDescriptor

__version__ = "0.1.0"
