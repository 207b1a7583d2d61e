"""Interval-valued intuitionistic fuzzy matrices."""

from .determinant import (
    MAX_ORDER,
    Permutation,
    adjoint,
    cofactor,
    determinant,
    expansion_terms,
    laplace_determinant,
    minor,
)
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    IvifError,
    NotSquare,
    OrderTooLarge,
    ParseError,
    ShapeError,
    ValidationError,
)
from .graph_io import (
    Edge,
    GraphSpec,
    build_matrix,
    format_graph,
    parse_graph,
    read_matrix,
    read_value,
    write_matrix,
    write_value,
)
from .matrix import (
    MATRIX_OPERATORS,
    SPECIAL_KINDS,
    IvifMatrix,
    add,
    amean,
    complement,
    gmean,
    hmean,
    is_symmetric,
    make_special,
    matrix_eq,
    matrix_isclose,
    matrix_le,
    matrix_zip,
    mul,
    odot,
    oplus,
    star,
    transpose,
)
from .values import (
    BINARY_OPERATORS,
    COMPLETE_NULL,
    EPS,
    ONE,
    ZERO,
    IvifValue,
    UnitInterval,
    ivif,
    value_add,
    value_amean,
    value_complement,
    value_eq,
    value_gmean,
    value_hmean,
    value_isclose,
    value_le,
    value_mul,
    value_odot,
    value_oplus,
    value_star,
)

__version__ = "0.1.0"
