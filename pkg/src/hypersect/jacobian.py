"""Graded pieces of Jacobian ideals and the smoothness decision.

For a form f of degree d in x0..xn the Jacobian ideal is generated by f
together with all first partials.  The projective hypersurface f = 0 is
smooth over the algebraic closure exactly when that ideal is irrelevant,
i.e. when some graded piece fills the whole space of forms of its degree.
Fullness of a graded piece is a rank condition on a matrix defined over
the base field, so it is insensitive to field extension and can be decided
here exactly.

Three facts keep the decision cheap:

* Fullness is monotone in the degree: a full piece stays full after
  multiplying by the variables.  So "full at some t <= T" is equivalent
  to "full at T".
* When f is smooth and the characteristic does not divide d, the partials
  form a regular sequence, and the first full degree is exactly
  (n+1)(d-2) + 1.  Probing that degree first settles almost every smooth
  input with the smallest possible matrix.
* Quotient dimensions obey Macaulay growth, and growth that achieves the
  Macaulay bound persists (Gotzmann).  Two consecutive equal quotient
  dimensions c <= t-1 past the generator degrees therefore pin the
  quotient at c forever, certifying the singular case from small matrices
  instead of one large elimination at the cap.

Over a small prime field, singular inputs are also screened by scanning
projective rational points for a common zero of the generators.  Over Q,
ranks of the (integer-scaled) span matrices are probed mod a fixed 31-bit
prime: full rank mod a prime certifies full rank over Q.  Negative answers
are confirmed with fraction-free integer elimination, so every returned
verdict is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from . import linalg
from .errors import InhomogeneousGenerator, NotHomogeneous
from .fields import FieldSpec, Scalar
from .linalg import Matrix, PROBE_PRIME
from .poly import (
    Monomial,
    Polynomial,
    dimension_of_degree,
    monomial_basis,
    partial_derivative,
    require_homogeneous,
)


def jacobian_generators(f: Polynomial) -> list[Polynomial]:
    """[f, df/dx0, ..., df/dxn]; partials may vanish in small characteristic."""
    require_homogeneous(f, 1, "hypersurface form")
    return [f] + [partial_derivative(f, i) for i in range(f.nvars)]


def default_degree_cap(nvars: int, degree: int) -> int:
    """Last degree the smoothness scan inspects: (n+2)(d-1) - n for n = nvars-1."""
    n = nvars - 1
    return (n + 2) * (degree - 1) - n


@dataclass
class GradedPiece:
    """Degree-t piece of a homogeneous ideal inside the space of t-forms.

    `basis` lists the degree-t monomials (grlex descending); they index the
    columns of `span_matrix`, whose rows are the monomial multiples of the
    generators that land in degree t.  `dimension` is the exact rank.
    """

    degree: int
    basis: list[Monomial]
    span_matrix: Matrix
    dimension: int
    _reduced: Matrix = dc_field(repr=False, default=None)
    _pivots: list[int] = dc_field(repr=False, default=None)

    def _index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.basis)}

    def reduce(self, p: Polynomial) -> list[Scalar]:
        """Residual of a degree-t form after reduction by the piece.

        The residual is the coefficient vector of p minus its projection
        onto the row span; it is zero exactly when p lies in the piece.
        """
        if p and not p.is_homogeneous(self.degree):
            raise NotHomogeneous(f"expected a form of degree {self.degree}")
        index = self._index()
        field = self.span_matrix.field
        v = [field.zero()] * len(self.basis)
        for m, c in p.terms.items():
            v[index[m]] = c
        red, pivots = self._reduced, self._pivots
        for r, pc in enumerate(pivots):
            f = v[pc]
            if f:
                row = red.row(r)
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, p: Polynomial) -> bool:
        return not any(self.reduce(p))


def _span_rows_scalar(
    generators: list[Polynomial], degree: int, field: FieldSpec, nvars: int
) -> tuple[list[Monomial], list[list[Scalar]]]:
    basis = monomial_basis(nvars, degree)
    index = {m: i for i, m in enumerate(basis)}
    zero = field.zero()
    rows = []
    for g in generators:
        if g.is_zero():
            continue
        e = g.degree()
        if not g.is_homogeneous(e):
            raise InhomogeneousGenerator(f"generator {g} is not homogeneous")
        if e > degree:
            continue
        for m in monomial_basis(nvars, degree - e):
            row = [zero] * len(basis)
            for mono, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, mono))]] = c
            rows.append(row)
    return basis, rows


def ideal_graded_dim(
    generators: list[Polynomial],
    degree: int,
    field: FieldSpec | None = None,
    nvars: int | None = None,
) -> GradedPiece:
    """Degree-t piece of the ideal spanned by homogeneous generators.

    Generators of degree above t contribute nothing; zero generators are
    skipped.  field/nvars are only needed when the list is empty.
    """
    live = [g for g in generators if not g.is_zero()]
    if live:
        field = live[0].field
        nvars = live[0].nvars
    elif field is None or nvars is None:
        raise ValueError("empty generator list needs explicit field and nvars")
    basis, rows = _span_rows_scalar(live, degree, field, nvars)
    matrix = Matrix.from_rows(field, rows) if rows else Matrix.zero(field, 0, len(basis))
    reduced, pivots = linalg.rref(matrix)
    return GradedPiece(degree, basis, matrix, len(pivots), reduced, pivots)


# -- fast fullness ------------------------------------------------------------


def _integer_rows(generators: list[Polynomial], degree: int) -> tuple[int, list[list[int]]]:
    """Span rows with integer entries (denominators cleared per generator)."""
    nvars = generators[0].nvars
    field = generators[0].field
    basis = monomial_basis(nvars, degree)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        e = g.degree()
        if e > degree:
            continue
        if field.is_prime_field:
            coeffs = {m: c.value for m, c in g.terms.items()}
        else:
            scale = lcm(*(c.value.denominator for c in g.terms.values()))
            coeffs = {m: int(c.value * scale) for m, c in g.terms.items()}
        for m in monomial_basis(nvars, degree - e):
            row = [0] * len(basis)
            for mono, c in coeffs.items():
                row[index[tuple(a + b for a, b in zip(m, mono))]] = c
            rows.append(row)
    return len(basis), rows


def _piece_is_full_probe(generators: list[Polynomial], degree: int, field: FieldSpec) -> bool:
    """Sound fullness test for the degree-t piece; may under-report over Q.

    Over F_p this is exact.  Over Q the rank is only probed mod a fixed
    prime, so True is a certificate while False merely means "not proven".
    """
    cols, rows = _integer_rows(generators, degree)
    if len(rows) < cols:
        return False
    p = field.characteristic if field.is_prime_field else PROBE_PRIME
    return linalg.rank_mod_p_int(rows, p, stop_at=cols) == cols


_POINT_SCAN_LIMIT = 600


def _rational_singular_point(generators: list[Polynomial], field: FieldSpec, nvars: int) -> bool:
    """Scan projective F_p points for a common zero of the generators.

    A hit places the whole ideal inside that point's maximal ideal, so no
    graded piece is ever full.  A miss proves nothing; callers must fall
    through to the rank scan.  Skipped when the point count is large.
    """
    p = field.characteristic
    total = (p**nvars - 1) // (p - 1)
    if total > _POINT_SCAN_LIMIT:
        return False
    top = max(max(m) for g in generators for m in g.terms)
    power = [[pow(r, e, p) for e in range(top + 1)] for r in range(p)]
    gens = [[(c.value, m) for m, c in g.terms.items()] for g in generators]
    for pivot in range(nvars):
        tail = nvars - pivot - 1
        for suffix in itertools.product(range(p), repeat=tail):
            point = (0,) * pivot + (1,) + suffix
            for terms in gens:
                acc = 0
                for coeff, mono in terms:
                    val = coeff
                    for v, e in enumerate(mono):
                        if e:
                            val = val * power[point[v]][e]
                    acc = (acc + val) % p
                if acc:
                    break
            else:
                return True
    return False


def _graded_rank_exact(generators: list[Polynomial], degree: int, field: FieldSpec) -> int:
    """Exact rank of the degree-t span over the base field."""
    cols, rows = _integer_rows(generators, degree)
    if not rows:
        return 0
    if field.is_prime_field:
        return linalg.rank_mod_p_int(rows, field.characteristic)
    if linalg.rank_mod_p_int(rows, PROBE_PRIME, stop_at=cols) == cols:
        return cols
    return linalg.rank_int_exact(rows)


def is_smooth(f: Polynomial, t_max: int | None = None) -> bool:
    """Whether the projective hypersurface f = 0 is smooth.

    Equivalent to: some graded piece of the Jacobian ideal with degree at
    most the cap is full.  The verdict holds over the algebraic closure as
    well, since fullness is a rank condition over the base field.

    The scan first probes the degree where a smooth hypersurface away from
    char | d must fill up, (n+1)(d-2) + 1.  Failing that, it walks the
    quotient dimensions h_t upward; h_t = 0 certifies smoothness, and two
    consecutive equal values h_{t-1} = h_t = c with c <= t-1 (past the
    generator degrees) certify singularity: constant growth is Macaulay-
    maximal, so by Gotzmann persistence the quotient never dies.  Only if
    neither shortcut fires does the scan reach the cap and decide there.
    """
    d = require_homogeneous(f, 1, "hypersurface form")
    if f.nvars < 2:
        raise NotHomogeneous("need at least two variables for a projective hypersurface")
    n = f.nvars - 1
    if t_max is not None:
        cap = t_max
        if cap < 0:
            return False
    else:
        # the formula goes negative only for linear forms; degree 0 suffices there
        cap = max(default_degree_cap(f.nvars, d), 0)
    gens = [g for g in jacobian_generators(f) if not g.is_zero()]
    if not gens:
        return False
    expected_full = max((n + 1) * (d - 2) + 1, d - 1, 0)
    if expected_full <= cap and _piece_is_full_probe(gens, expected_full, f.field):
        return True
    if f.field.is_prime_field and _rational_singular_point(gens, f.field, f.nvars):
        return False
    exact_h: dict[int, int] = {}

    def quotient_dim(t: int) -> int:
        got = exact_h.get(t)
        if got is None:
            got = dimension_of_degree(f.nvars, t) - _graded_rank_exact(gens, t, f.field)
            exact_h[t] = got
        return got

    probe = f.field.characteristic if f.field.is_prime_field else PROBE_PRIME
    h_prev: int | None = None
    for t in range(max(d - 1, 0), cap + 1):
        cols, rows = _integer_rows(gens, t)
        # over F_p the probe rank is already exact; over Q it bounds h from above
        h_probe = cols - linalg.rank_mod_p_int(rows, probe) if rows else cols
        if f.field.is_prime_field:
            exact_h[t] = h_probe
        if h_probe == 0:
            return True
        if (
            h_prev is not None
            and h_prev == h_probe
            and h_probe <= t - 1
            and t - 1 >= d
        ):
            h1, h2 = quotient_dim(t - 1), quotient_dim(t)
            if h1 == 0 or h2 == 0:
                return True
            if h1 == h2 and h2 <= t - 1:
                return False
        h_prev = h_probe
    return quotient_dim(cap) == 0


def euler_check(f: Polynomial) -> bool:
    """Verify sum_i x_i * df/dx_i = d * f with d reduced into the field.

    This is a formal identity in every characteristic, so it doubles as an
    internal self-test of the derivative code.
    """
    d = require_homogeneous(f, 1, "hypersurface form")
    total = Polynomial.zero(f.field, f.nvars)
    for i in range(f.nvars):
        total = total + Polynomial.variable(f.field, f.nvars, i) * partial_derivative(f, i)
    return total == f.scale(f.field.scalar(d))
