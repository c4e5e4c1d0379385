"""Exact Kauffman bracket and Jones polynomial computation for link
diagrams, with alternate-cut surgeries and splitting-matrix verification."""

from .polyring import (
    DELTA,
    DivisionByZero,
    LaurentPolynomial,
    RationalFunction,
    UndefinedGcd,
    delta_power,
    format_laurent,
    parse_laurent,
    poly_gcd,
    substitute_jones,
)
from .partitions import (
    CrossingPartition,
    EmptyGroundSet,
    GroundSetMismatch,
    SetPartition,
    catalan,
    enumerate_all,
    enumerate_noncrossing,
)
from .diagram import (
    Crossing,
    DiagramFormatError,
    PlanarDiagram,
    StateMismatch,
    bracket_skein,
    bracket_state_sum,
    format_diagram,
    jones,
    kauffman_function,
    parse_diagram,
    writhe,
)
from .cut import (
    BoundaryMismatch,
    CutFormatError,
    CutPresentation,
    Tangle,
    closure_arcs,
    connected_sum_cut,
    format_cut,
    glue,
    nc_link_circles,
    open_arc,
    parse_cut,
    partition_tangle,
    random_cut_presentation,
    random_diagram,
    random_tangle,
    restricted_bracket,
    state_partition,
    strand_tangle,
    surgery,
)
from .splitting import (
    SingularMatrix,
    SplittingMatrix,
    VerificationReport,
    build_matrix,
    determinant,
    invert_matrix,
    verify_bracket_expansion,
    verify_splitting,
    verify_surgery_expansion,
)

__version__ = "0.1.0"
