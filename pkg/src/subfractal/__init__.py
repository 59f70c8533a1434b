"""Engine for the fractal structure of generic object-oriented subtyping."""

from .construction import (
    ArgumentSet,
    Budget,
    EmbeddingReport,
    EquationCheck,
    LevelSequence,
    apply_host,
    build,
    check_equations,
    embedding_image,
    expand,
    intervals_over,
    seed,
    transform,
    wildcard_forms_over,
)
from .errors import (
    BudgetError,
    DeclError,
    FractalError,
    GraphError,
    ParseError,
    TypeTermError,
    UnknownClassError,
)
from .graphs import (
    Census,
    SubtypingGraph,
    adjacency_matrix,
    build_graph,
    census_by_distance,
    closure_by_matrix,
    export,
    graph_equal,
    longest_path,
    quotient_by_head,
    transitive_closure,
    transitive_reduction,
    window,
)
from .skeleton import ClassDecl, ClassTable, TypeParam, parse_skeleton, subclass_of
from .subtyping import interval_contains, interval_precedes, is_subtype
from .types import (
    App,
    DEFAULT_INTERVAL,
    Ground,
    Interval,
    NULL,
    OBJECT,
    TypeTerm,
    expressible,
    parse_type,
    rank,
    render,
)

__version__ = "0.1.0"
