"""hypersect: exact first-order variation of hyperplane sections.

Certifies, by exact linear algebra in graded pieces of Jacobian rings,
that the smooth hyperplane sections of a smooth projective hypersurface
vary maximally in moduli.  Works over Q and over prime fields F_p.
"""

from .errors import (
    ArityMismatch,
    BadCharacteristic,
    CompositeCharacteristic,
    DegreeTooSmall,
    DimensionTooSmall,
    DivisionByZero,
    FieldMismatch,
    HypersectError,
    IndexOutOfRange,
    InhomogeneousGenerator,
    NotHomogeneous,
    ParseError,
    SingularInput,
    SingularMatrix,
    UnknownVariable,
    UsageError,
    ZeroHyperplane,
)
from .fields import FieldSpec, Scalar, make_field
from .linalg import Matrix, invert, kernel_basis, rank, rref
from .parsing import parse_poly
from .poly import (
    LinearChange,
    Monomial,
    Polynomial,
    first_order_section,
    linear_coefficients,
    linear_form,
    monomial_basis,
    partial_derivative,
    set_var_zero,
    substitute_linear,
)
from .jacobian import (
    GradedPiece,
    default_degree_cap,
    euler_check,
    ideal_graded_dim,
    is_smooth,
    jacobian_generators,
)
from .variation import (
    CertifyReport,
    CertifyVerdict,
    CriterionReport,
    CriterionStatus,
    Hyperplane,
    ScanStrategy,
    certify_max_variation,
    criterion_form,
    criterion_kernel,
    moduli_dim,
    normalize_hyperplane,
    sections_exceed_moduli,
    survey_kernels,
)
from . import fixtures

__all__ = [
    "ArityMismatch",
    "BadCharacteristic",
    "CertifyReport",
    "CertifyVerdict",
    "CompositeCharacteristic",
    "CriterionReport",
    "CriterionStatus",
    "DegreeTooSmall",
    "DimensionTooSmall",
    "DivisionByZero",
    "FieldMismatch",
    "FieldSpec",
    "GradedPiece",
    "Hyperplane",
    "HypersectError",
    "IndexOutOfRange",
    "InhomogeneousGenerator",
    "LinearChange",
    "Matrix",
    "Monomial",
    "NotHomogeneous",
    "ParseError",
    "Polynomial",
    "Scalar",
    "ScanStrategy",
    "SingularInput",
    "SingularMatrix",
    "UnknownVariable",
    "UsageError",
    "ZeroHyperplane",
    "certify_max_variation",
    "criterion_form",
    "criterion_kernel",
    "default_degree_cap",
    "euler_check",
    "first_order_section",
    "fixtures",
    "ideal_graded_dim",
    "invert",
    "is_smooth",
    "jacobian_generators",
    "kernel_basis",
    "linear_coefficients",
    "linear_form",
    "make_field",
    "moduli_dim",
    "monomial_basis",
    "normalize_hyperplane",
    "parse_poly",
    "partial_derivative",
    "rank",
    "rref",
    "sections_exceed_moduli",
    "set_var_zero",
    "substitute_linear",
    "survey_kernels",
    "__version__",
]

__version__ = "0.1.0"
