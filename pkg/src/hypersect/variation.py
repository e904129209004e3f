"""First-order variation of smooth hyperplane sections.

Fix a smooth degree-d form f in x0..xn (n >= 3, d >= 3).  Moving a
hyperplane H infinitesimally and following the section X cap H gives a
first-order deformation of the section.  After a linear change taking H
to {x0 = 0} with section g = f(0, x1..xn), the deformation along the
direction x0 = eps*l is trivial exactly when q*l falls into the degree-d
piece of the section's Jacobian ideal, where q is the x0-partial of f
restricted to x0 = 0.  The linear forms l with q*l in that piece form the
criterion kernel; a zero kernel at a single smooth, non-vacuous section
certifies that sections vary maximally in moduli near H.

A zero kernel computed over Q or over F_p stays zero over every field
extension (kernel dimension is a rank computation over the base field),
so the positive certificate is sound over the algebraic closure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from . import linalg
from .errors import (
    DegreeTooSmall,
    DimensionTooSmall,
    SingularInput,
    ZeroHyperplane,
)
from .fields import FieldSpec, Scalar
from .jacobian import ideal_graded_dim, is_smooth, jacobian_generators
from .poly import (
    LinearChange,
    Polynomial,
    linear_coefficients,
    linear_form,
    partial_derivative,
    require_homogeneous,
    set_var_zero,
    substitute_linear,
)


class Hyperplane:
    """A projective hyperplane, stored as a pivot-normalized linear form.

    The lowest-index nonzero coefficient is scaled to 1, so proportional
    forms compare equal.
    """

    __slots__ = ("form", "pivot")

    def __init__(self, form: Polynomial):
        if form.is_zero():
            raise ZeroHyperplane("the zero form defines no hyperplane")
        require_homogeneous(form, 1, "hyperplane form")
        if form.degree() != 1:
            raise ZeroHyperplane("a hyperplane is cut out by a linear form")
        coeffs = linear_coefficients(form)
        pivot = next(i for i, c in enumerate(coeffs) if c)
        if coeffs[pivot] != form.field.one():
            form = form.scale(coeffs[pivot].inv())
        self.form = form
        self.pivot = pivot

    @classmethod
    def from_coefficients(cls, field: FieldSpec, coefficients) -> "Hyperplane":
        return cls(linear_form(field, coefficients))

    @classmethod
    def coordinate(cls, field: FieldSpec, nvars: int, index: int) -> "Hyperplane":
        return cls(Polynomial.variable(field, nvars, index))

    @property
    def nvars(self) -> int:
        return self.form.nvars

    def coefficients(self) -> list[Scalar]:
        return linear_coefficients(self.form)

    def __eq__(self, other) -> bool:
        return isinstance(other, Hyperplane) and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def __str__(self) -> str:
        return self.form.to_text()

    def __repr__(self) -> str:
        return f"Hyperplane({self.form.to_text()})"


def normalize_hyperplane(f: Polynomial, hyperplane: Hyperplane) -> Polynomial:
    """Rewrite f through a linear change taking {x0 = 0} onto the hyperplane.

    The change swaps x0 with the pivot variable and shears the remaining
    coefficients away, so the returned form has the given hyperplane as its
    x0 = 0 section.
    """
    if hyperplane.nvars != f.nvars:
        raise ZeroHyperplane(
            f"hyperplane on {hyperplane.nvars} variables, form has {f.nvars}"
        )
    field = f.field
    nv = f.nvars
    coeffs = hyperplane.coefficients()
    j = hyperplane.pivot
    zero, one = field.zero(), field.one()
    rows = [[zero] * nv for _ in range(nv)]
    for i in range(nv):
        if i == j:
            continue
        slot = j if i == 0 else i
        rows[i][slot] = one
        rows[j][slot] = -coeffs[i]
    rows[j][0] = one
    return substitute_linear(f, LinearChange(field, rows))


def criterion_form(f_normalized: Polynomial) -> Polynomial:
    """x0-partial of the normalized form, restricted to x0 = 0.

    Degree d-1 in the n section variables; zero exactly on vacuous
    hyperplanes, where first-order data says nothing.
    """
    return set_var_zero(partial_derivative(f_normalized, 0), 0)


class CriterionStatus(str, Enum):
    SINGULAR_SECTION = "singular_section"
    VACUOUS = "vacuous"
    COMPUTED = "computed"


@dataclass
class CriterionReport:
    """Outcome of the first-order criterion at one hyperplane.

    kernel fields are populated only when status is COMPUTED; the kernel
    basis vectors are linear forms in the n section variables, normalized
    with leading coefficient 1.
    """

    hyperplane: Hyperplane
    status: CriterionStatus
    criterion_form: Polynomial | None = None
    kernel_basis: list[Polynomial] | None = None
    kernel_dim: int | None = None
    graded_ideal_dim: int | None = None


def _check_criterion_domain(f: Polynomial) -> tuple[int, int]:
    d = require_homogeneous(f, 1, "hypersurface form")
    n = f.nvars - 1
    if n <= 2 or d <= 2:
        raise DimensionTooSmall(
            f"criterion needs ambient dimension n >= 3 and degree d >= 3, got n={n}, d={d}"
        )
    return d, n


def criterion_kernel(
    f: Polynomial, hyperplane: Hyperplane, t_max: int | None = None
) -> CriterionReport:
    """Run the first-order criterion for f at one hyperplane.

    Reports SINGULAR_SECTION when the section is not smooth, VACUOUS when
    the criterion form vanishes, and otherwise the exact kernel of
    l -> class of (criterion form)*l in the degree-d piece of the
    section's Jacobian ring.
    """
    d, n = _check_criterion_domain(f)
    normalized = normalize_hyperplane(f, hyperplane)
    section = set_var_zero(normalized, 0)
    if section.is_zero() or not is_smooth(section, t_max=t_max):
        return CriterionReport(hyperplane, CriterionStatus.SINGULAR_SECTION)
    q = criterion_form(normalized)
    if q.is_zero():
        return CriterionReport(hyperplane, CriterionStatus.VACUOUS, criterion_form=q)
    piece = ideal_graded_dim(jacobian_generators(section), d)
    residuals = []
    for i in range(n):
        residuals.append(piece.reduce(q * Polynomial.variable(f.field, n, i)))
    columns = linalg.Matrix.from_rows(
        f.field, [[residuals[i][r] for i in range(n)] for r in range(len(piece.basis))]
    )
    kernel_vectors = linalg.kernel_basis(columns)
    kernel = [linear_form(f.field, v) for v in kernel_vectors]
    return CriterionReport(
        hyperplane,
        CriterionStatus.COMPUTED,
        criterion_form=q,
        kernel_basis=kernel,
        kernel_dim=len(kernel),
        graded_ideal_dim=piece.dimension,
    )


class CertifyVerdict(str, Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ScanStrategy:
    """Deterministic trial schedule: coordinates, small perturbations of x0,
    then seeded random hyperplanes, up to the trial budget."""

    seed: int = 0
    trial_budget: int = 64


@dataclass
class CertifyReport:
    verdict: CertifyVerdict
    witness: Hyperplane | None
    trials: list[CriterionReport]
    seed: int
    trial_budget: int


def _random_scalar_raw(rng: random.Random, field: FieldSpec):
    if field.is_prime_field:
        return rng.randrange(field.characteristic)
    return Fraction(rng.randint(-5, 5))


def _hyperplane_schedule(field: FieldSpec, nvars: int, strategy: ScanStrategy):
    one = field.one()
    zero = field.zero()
    for i in range(nvars):
        yield Hyperplane.coordinate(field, nvars, i)
    for i in range(1, nvars):
        coeffs = [zero] * nvars
        coeffs[0] = one
        coeffs[i] = one
        yield Hyperplane.from_coefficients(field, coeffs)
    yield Hyperplane.from_coefficients(field, [field.scalar(i) if i else one for i in range(nvars)])
    yield Hyperplane.from_coefficients(field, [one] * nvars)
    rng = random.Random(strategy.seed)
    while True:
        coeffs = [field.scalar(_random_scalar_raw(rng, field)) for _ in range(nvars)]
        if any(coeffs):
            yield Hyperplane.from_coefficients(field, coeffs)


def certify_max_variation(
    f: Polynomial, strategy: ScanStrategy = ScanStrategy(), t_max: int | None = None
) -> CertifyReport:
    """Scan hyperplanes until one certifies maximal variation of sections.

    A trial certifies when its section is smooth, the criterion form is
    nonzero, and the criterion kernel is zero.  Trials are deterministic
    given the strategy; every trial, conclusive or not, counts against the
    budget.  With no certifying trial the verdict is INCONCLUSIVE, which
    carries no negative claim.
    """
    _check_criterion_domain(f)
    if not is_smooth(f, t_max=t_max):
        raise SingularInput("the ambient hypersurface must be smooth")
    trials: list[CriterionReport] = []
    for hyperplane in _hyperplane_schedule(f.field, f.nvars, strategy):
        if len(trials) >= strategy.trial_budget:
            break
        report = criterion_kernel(f, hyperplane, t_max=t_max)
        trials.append(report)
        if report.status is CriterionStatus.COMPUTED and report.kernel_dim == 0:
            return CertifyReport(
                CertifyVerdict.CERTIFIED, hyperplane, trials, strategy.seed, strategy.trial_budget
            )
    return CertifyReport(
        CertifyVerdict.INCONCLUSIVE, None, trials, strategy.seed, strategy.trial_budget
    )


def survey_kernels(
    f: Polynomial, hyperplanes, t_max: int | None = None
) -> list[CriterionReport]:
    """Criterion reports for each hyperplane, in the given order."""
    return [criterion_kernel(f, h, t_max=t_max) for h in hyperplanes]


def moduli_dim(d: int, n: int) -> int:
    """Moduli count for degree-d hypersurfaces in P^n: C(n+d, d) - (n+1)^2."""
    if d < 3:
        raise DegreeTooSmall(f"moduli counts need degree d >= 3, got {d}")
    if n < 1:
        raise DimensionTooSmall(f"need n >= 1, got {n}")
    return comb(n + d, d) - (n + 1) ** 2


def sections_exceed_moduli(d: int, n: int) -> bool:
    """Whether the n-dimensional family of hyperplane sections of a
    degree-d hypersurface in P^n outnumbers the moduli of degree-d
    hypersurfaces in P^{n-1}."""
    return n > moduli_dim(d, n - 1)
