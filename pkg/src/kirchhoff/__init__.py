"""Resistance distances and Kirchhoffian invariants of graphs and of their
subdivisions and triangulations, with closed forms checked against a
Laplacian-pseudoinverse oracle."""

from .closed_forms import (
    ClosedFormInput,
    RecurrenceSpec,
    iterated_subdivision_closed_forms,
    iterated_triangulation_closed_forms,
    regular_triangulation_kirchhoff,
    solve_linear_recurrence,
    st_comparison,
    subdivision_closed_forms,
    triangulation_closed_forms,
)
from .estimators import GraphOperator, KirchhoffFeatures, ResistanceDistance, check_graph
from .exceptions import (
    DimensionMismatch,
    Disconnected,
    DuplicateEdge,
    GraphInputError,
    KirchhoffError,
    ParseError,
    PrecisionPolicyError,
    SelfLoop,
    SingularSystem,
    SizeOverflow,
    TooFewVertices,
    ZeroMultiplier,
)
from .graph import (
    Graph,
    Provenance,
    SizePrediction,
    TransformKind,
    complete_graph,
    cycle_graph,
    from_edge_list,
    iterate_transform,
    parse_edge_list,
    path_graph,
    predict_sizes,
    random_connected_graph,
    read_edge_list,
    star_graph,
    subdivide,
    triangulate,
    write_edge_list,
)
from .invariants import InvariantTriple, compute_invariants, invariants_of
from .lifting import (
    LiftedResistance,
    lift_subdivision,
    lift_triangulation,
    partial_sums_subdivision,
)
from .resistance import (
    BackendKind,
    LaplacianMatrix,
    NumericBackend,
    ResistanceMatrix,
    foster_sum,
    laplacian,
    resistance_matrix,
)
from .verify import VerificationReport, builtin_corpus, verify, verify_graph

__version__ = "0.1.0"
