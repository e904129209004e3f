"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a dict from exponent tuples (one entry per variable) to
nonzero Scalars; zero coefficients are never stored.  Monomials are
ordered graded-lexicographically, degree first and then lexicographic on
exponents, largest first.  That single order drives printing and the
column indexing of every matrix built from a graded piece, so everything
downstream is deterministic.

Variables are x0..x{nvars-1}.  Dropping a variable (restriction to a
coordinate hyperplane) reindexes the survivors densely, so a polynomial
in the section's n variables again uses x0..x{n-1} internally; callers
that prefer ambient labels can print with var_start=1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import linalg
from .errors import (
    ArityMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotHomogeneous,
)
from .fields import FieldSpec, Scalar

Monomial = tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial):
    """Sort key: ascending under Python's order; reverse for display order."""
    return (sum(m), m)


def monomial_basis(nvars: int, degree: int) -> list[Monomial]:
    """All monomials of the given total degree, grlex-descending.

    The list has length C(nvars-1+degree, degree).
    """
    if nvars < 1:
        raise ArityMismatch("need at least one variable")
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomial_basis(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def monomial_text(m: Monomial, var_start: int = 0) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + var_start}")
        elif e > 1:
            parts.append(f"x{i + var_start}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable-by-convention sparse polynomial over one FieldSpec."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: dict[Monomial, Scalar]):
        # trust internal callers; from_terms canonicalizes foreign input
        self.field = field
        self.nvars = nvars
        self.terms = terms

    @classmethod
    def from_terms(cls, field: FieldSpec, nvars: int, terms) -> "Polynomial":
        clean: dict[Monomial, Scalar] = {}
        for m, c in dict(terms).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise ArityMismatch(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            s = field.scalar(c)
            if s:
                clean[m] = clean[m] + s if m in clean else s
                if not clean[m]:
                    del clean[m]
        return cls(field, nvars, clean)

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, value) -> "Polynomial":
        return cls.from_terms(field, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{nvars - 1}")
        m = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(field, nvars, {m: field.one()})

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Whether all monomials share one total degree.

        The zero polynomial counts as homogeneous of every degree.
        """
        if not self.terms:
            return True
        degs = {sum(m) for m in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(tuple(m), self.field.zero())

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
        if self.nvars != other.nvars:
            raise ArityMismatch(f"cannot combine {self.nvars} variables with {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.field, self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms: dict[Monomial, Scalar] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    s = terms.get(m)
                    if s is None:
                        if c:
                            terms[m] = c
                    else:
                        s = s + c
                        if s:
                            terms[m] = s
                        else:
                            del terms[m]
            return Polynomial(self.field, self.nvars, terms)
        c = self.field.scalar(other)
        return self.scale(c)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c: Scalar) -> "Polynomial":
        c = self.field.scalar(c)
        if not c:
            return Polynomial.zero(self.field, self.nvars)
        return Polynomial(self.field, self.nvars, {m: x * c for m, x in self.terms.items()})

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field.characteristic, self.nvars, frozenset(self.terms.items())))

    # -- printing -------------------------------------------------------

    def to_text(self, var_start: int = 0) -> str:
        """Canonical text, grlex-descending; reparseable by parse_poly."""
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = monomial_text(m, var_start)
            negative = (not self.field.is_prime_field) and c.value < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == self.field.one():
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if negative else "+", body))
        sign, body = pieces[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.field}, {self.nvars}, {self.to_text()})"


def require_homogeneous(p: Polynomial, min_degree: int = 0, what: str = "polynomial") -> int:
    """Degree of a nonzero homogeneous polynomial, or NotHomogeneous."""
    if p.is_zero():
        raise NotHomogeneous(f"{what} is zero; a nonzero form is required")
    degs = {sum(m) for m in p.terms}
    if len(degs) != 1:
        raise NotHomogeneous(f"{what} mixes degrees {sorted(degs)}")
    d = degs.pop()
    if d < min_degree:
        raise NotHomogeneous(f"{what} has degree {d}, need at least {min_degree}")
    return d


# -- calculus and substitution -----------------------------------------------


def partial_derivative(p: Polynomial, index: int) -> Polynomial:
    """d p / d x_index, with the exponent reduced into the field.

    Over F_p the factor e is taken mod p, so terms with p | e vanish.
    """
    if not 0 <= index < p.nvars:
        raise IndexOutOfRange(f"variable index {index} outside 0..{p.nvars - 1}")
    terms: dict[Monomial, Scalar] = {}
    for m, c in p.terms.items():
        e = m[index]
        if e == 0:
            continue
        factor = p.field.scalar(e)
        if not factor:
            continue
        newm = m[:index] + (e - 1,) + m[index + 1 :]
        c2 = c * factor
        s = terms.get(newm)
        terms[newm] = c2 if s is None else s + c2
        if not terms[newm]:
            del terms[newm]
    return Polynomial(p.field, p.nvars, terms)


def set_var_zero(p: Polynomial, index: int) -> Polynomial:
    """Restrict to the coordinate hyperplane x_index = 0.

    Monomials containing x_index are dropped; remaining variables are
    reindexed densely, so the result lives in nvars-1 variables.
    """
    if not 0 <= index < p.nvars:
        raise IndexOutOfRange(f"variable index {index} outside 0..{p.nvars - 1}")
    terms = {}
    for m, c in p.terms.items():
        if m[index]:
            continue
        terms[m[:index] + m[index + 1 :]] = c
    return Polynomial(p.field, p.nvars - 1, terms)


def embed_shift(p: Polynomial, nvars: int, shift: int) -> Polynomial:
    """View p inside a larger ring, moving variable i to i+shift."""
    if shift < 0 or p.nvars + shift > nvars:
        raise ArityMismatch(f"cannot shift {p.nvars} variables by {shift} into {nvars}")
    pad_left = (0,) * shift
    pad_right = (0,) * (nvars - p.nvars - shift)
    terms = {pad_left + m + pad_right: c for m, c in p.terms.items()}
    return Polynomial(p.field, nvars, terms)


class LinearChange:
    """An invertible linear substitution x_i -> sum_j M[i][j] x_j.

    Invertibility is checked at construction; the inverse is kept so a
    change can be undone exactly.
    """

    __slots__ = ("field", "nvars", "matrix", "_inverse")

    def __init__(self, field: FieldSpec, rows, _inverse=None):
        m = linalg.Matrix.from_rows(field, rows)
        if m.rows != m.cols:
            raise ArityMismatch("linear change must be square")
        self.field = field
        self.nvars = m.rows
        self.matrix = m
        if _inverse is None:
            _inverse = linalg.invert(m)  # raises SingularMatrix when not invertible
        self._inverse = _inverse

    @classmethod
    def identity(cls, field: FieldSpec, nvars: int) -> "LinearChange":
        ident = linalg.Matrix.identity(field, nvars)
        return cls(field, ident.row_lists(), _inverse=ident)

    def inverse(self) -> "LinearChange":
        inv = LinearChange.__new__(LinearChange)
        inv.field = self.field
        inv.nvars = self.nvars
        inv.matrix = self._inverse
        inv._inverse = self.matrix
        return inv

    def image_of_variable(self, i: int) -> Polynomial:
        row = self.matrix.row(i)
        return Polynomial.from_terms(
            self.field,
            self.nvars,
            {
                tuple(1 if k == j else 0 for k in range(self.nvars)): c
                for j, c in enumerate(row)
                if c
            },
        )

    def __repr__(self) -> str:
        return f"LinearChange({self.matrix!r})"


def substitute_linear(p: Polynomial, change: LinearChange) -> Polynomial:
    """Apply a linear change of variables: (substitute_linear(p, C))(x) = p(Cx).

    Ring homomorphism in p; undone exactly by change.inverse().
    """
    if change.nvars != p.nvars:
        raise ArityMismatch(f"change on {change.nvars} variables, polynomial has {p.nvars}")
    if change.field != p.field:
        raise FieldMismatch("change and polynomial over different fields")
    images = [change.image_of_variable(i) for i in range(p.nvars)]
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        got = powers.get(key)
        if got is None:
            got = images[i] ** e
            powers[key] = got
        return got

    out = Polynomial.zero(p.field, p.nvars)
    for m, c in p.terms.items():
        term = Polynomial.constant(p.field, p.nvars, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


# -- first-order restriction to a moving hyperplane ---------------------------


@dataclass
class _Dual:
    """a + eps*b with eps^2 = 0, components polynomials in the section ring."""

    a: Polynomial
    b: Polynomial

    def __add__(self, other: "_Dual") -> "_Dual":
        return _Dual(self.a + other.a, self.b + other.b)

    def __mul__(self, other: "_Dual") -> "_Dual":
        # the a*b' + a'*b cross terms survive; eps^2 truncates b*b'
        return _Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    def __pow__(self, e: int) -> "_Dual":
        out = _Dual(
            Polynomial.constant(self.a.field, self.a.nvars, 1),
            Polynomial.zero(self.a.field, self.a.nvars),
        )
        for _ in range(e):
            out = out * self
        return out


def first_order_section(f: Polynomial, direction: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Restrict f to the moving hyperplane x0 = eps*direction, eps^2 = 0.

    `direction` is a linear form in the section variables (one fewer than
    f).  Returns (g, h) with f(eps*direction, x) = g + eps*h: g is the
    restriction of f to x0 = 0 and h equals the x0-partial of f restricted
    to x0 = 0 times the direction.
    """
    if direction.nvars != f.nvars - 1:
        raise ArityMismatch(
            f"direction must use {f.nvars - 1} section variables, has {direction.nvars}"
        )
    if direction and not direction.is_homogeneous(1):
        raise NotHomogeneous("direction must be a linear form")
    n = f.nvars - 1
    field = f.field
    zero = Polynomial.zero(field, n)
    subs = [_Dual(zero, direction)]
    for i in range(n):
        subs.append(_Dual(Polynomial.variable(field, n, i), zero))
    acc = _Dual(zero, zero)
    for m, c in f.terms.items():
        term = _Dual(Polynomial.constant(field, n, c), zero)
        for i, e in enumerate(m):
            if e:
                term = term * subs[i] ** e
        acc = acc + term
    return acc.a, acc.b


def linear_form(field: FieldSpec, coefficients) -> Polynomial:
    """Linear form with the given coefficient sequence, one per variable."""
    coeffs = list(coefficients)
    nvars = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        s = field.scalar(c)
        if s:
            terms[tuple(1 if k == i else 0 for k in range(nvars))] = s
    return Polynomial(field, nvars, terms)


def linear_coefficients(p: Polynomial) -> list[Scalar]:
    """Coefficient vector of a (possibly zero) linear form."""
    if p and not p.is_homogeneous(1):
        raise NotHomogeneous("expected a homogeneous linear form or zero")
    out = []
    for i in range(p.nvars):
        m = tuple(1 if k == i else 0 for k in range(p.nvars))
        out.append(p.coefficient(m))
    return out


def dimension_of_degree(nvars: int, degree: int) -> int:
    """Dimension of the space of degree-d forms in nvars variables."""
    if degree < 0:
        return 0
    return comb(nvars - 1 + degree, degree)
