"""Representation type of generalized path algebras.

Data model for quivers and bound quivers, the ordinary-quiver expansion of
a generalized path algebra, Dynkin/Euclidean diagram recognition, an exact
quadratic-form and positive-root oracle, and the representation-type
decision procedure built on top of them.
"""

from .graphs import (
    ArmProfile,
    GraphClass,
    GraphError,
    Multigraph,
    NEITHER,
    NotStarLike,
    arm_decomposition,
    classify_graph,
    dynkin,
    euclidean,
)
from .quiver import (
    AdmissibilityError,
    Arrow,
    BoundQuiver,
    GeneratorTooShort,
    Infinite,
    InfiniteDimensional,
    InvalidIdeal,
    MonomialIdeal,
    Path,
    Quiver,
    QuiverError,
)
from .tits import (
    Definiteness,
    INDEFINITE,
    LoopsUnsupported,
    NotDynkin,
    POSITIVE_DEFINITE,
    TitsForm,
    definiteness,
    enumerate_positive_roots,
    indecomposable_count,
    positive_semidefinite,
    radical_basis,
)
from .gp import (
    BadAttachedAlgebra,
    DuplicateVertexNamespace,
    GammaDisconnected,
    GammaHasCycle,
    GPAlgebra,
    GPError,
    OrdinaryQuiver,
    TYPE_I,
    TYPE_II,
    build_ordinary_quiver,
    gamma_embedding,
    validate_gp,
)
from .typecheck import (
    BIForm,
    FINITE,
    INDETERMINATE,
    K,
    OTHER,
    OUT_OF_SCOPE,
    PATH_A2,
    Pattern,
    RAD_SQUARE_ZERO,
    STRICT_TAME,
    Verdict,
    WILD,
    certificate_search,
    decide_type,
    recognize_bi,
    recognize_pattern,
    semisimple,
)
from .textfmt import (
    ParseError,
    parse,
    parse_gp,
    parse_quiver_file,
    render_bound_quiver,
    render_dot,
    render_expansion,
    render_gp,
)

__version__ = "0.1.0"
