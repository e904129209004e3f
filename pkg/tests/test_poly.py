"""Multivariate polynomial ring operations."""

import random

import pytest

from hypersect import (
    ArityMismatch,
    FieldMismatch,
    IndexOutOfRange,
    LinearChange,
    NotHomogeneous,
    Polynomial,
    SingularMatrix,
    first_order_section,
    make_field,
    monomial_basis,
    parse_poly,
    partial_derivative,
    set_var_zero,
    substitute_linear,
)
from hypersect.fixtures import cubic_threefold_example, cyclic_fermat, fermat
from hypersect.poly import require_homogeneous
from helpers import FIELDS, rand_poly, rand_scalar

Q = make_field(0)


def test_parse_displayed_cubic_matches_fixture():
    text = "x0^3 + x1^3 + x0*x1^2 + x1*x2^2 + x3^3 + x2*x4^2"
    assert parse_poly(text, 5, Q) == cubic_threefold_example(Q)


def test_parse_zero():
    assert parse_poly("0", 3, Q).is_zero()


def test_parse_fraction_coefficient():
    p = parse_poly("x0^2 - 1/2*x1*x2", 3, Q)
    assert p.coefficient((2, 0, 0)) == Q.one()
    assert p.coefficient((0, 1, 1)) == Q.scalar(-1) / Q.scalar(2)
    assert p.to_text() == "x0^2 - 1/2*x1*x2"


def test_difference_of_squares():
    a = parse_poly("x0 + x1", 2, Q)
    b = parse_poly("x0 - x1", 2, Q)
    assert a * b == parse_poly("x0^2 - x1^2", 2, Q)


def test_freshman_square_char_two():
    f2 = make_field(2)
    s = parse_poly("x0 + x1", 2, f2)
    assert s * s == parse_poly("x0^2 + x1^2", 2, f2)


def test_char_p_kills_p_copies():
    for field in FIELDS:
        p = field.characteristic
        if p == 0:
            continue
        f = fermat(2, 3, field)
        total = Polynomial.zero(field, 3)
        for _ in range(p):
            total = total + f
        assert total.is_zero()
        assert f.scale(field.scalar(p)).is_zero()


def test_partial_derivative_basic():
    p = parse_poly("x1*x2^2", 3, Q)
    assert partial_derivative(p, 2) == parse_poly("2*x1*x2", 3, Q)
    assert partial_derivative(p, 0).is_zero()


def test_partial_derivative_char_divides_degree():
    f3 = make_field(3)
    cube = parse_poly("x0^3", 2, f3)
    assert partial_derivative(cube, 0).is_zero()


def test_partial_derivative_index_bounds():
    with pytest.raises(IndexOutOfRange):
        partial_derivative(parse_poly("x0", 2, Q), 2)


def test_substitute_identity_is_noop():
    rng = random.Random(1)
    for field in FIELDS:
        p = rand_poly(rng, field, 3)
        assert substitute_linear(p, LinearChange.identity(field, 3)) == p


def test_substitute_swap_twice_is_identity():
    one, zero = Q.one(), Q.zero()
    swap = LinearChange(Q, [[zero, one], [one, zero]])
    p = parse_poly("x0^2 + 3*x1", 2, Q)
    assert substitute_linear(substitute_linear(p, swap), swap) == p
    assert substitute_linear(p, swap) == parse_poly("x1^2 + 3*x0", 2, Q)


def test_substitute_shift_permutes_fermat():
    """The cyclic coordinate shift fixes the Fermat polynomial."""
    f = fermat(3, 3, Q)
    rows = [[Q.one() if j == (i + 1) % 4 else Q.zero() for j in range(4)] for i in range(4)]
    assert substitute_linear(f, LinearChange(Q, rows)) == f


def test_linear_change_inverse_roundtrip():
    rng = random.Random(3)
    from helpers import rand_invertible

    for field in FIELDS[:4]:
        rows = rand_invertible(rng, field, 3)
        change = LinearChange(field, rows)
        p = rand_poly(rng, field, 3)
        assert substitute_linear(substitute_linear(p, change), change.inverse()) == p


def test_singular_change_rejected():
    one = Q.one()
    with pytest.raises(SingularMatrix):
        LinearChange(Q, [[one, one], [one, one]])


def test_set_var_zero_fermat():
    f = fermat(3, 4, Q)
    g = set_var_zero(f, 0)
    assert g.nvars == 3
    assert g == parse_poly("x0^4 + x1^4 + x2^4", 3, Q)


def test_set_var_zero_reindexes_displayed_cubic():
    g = set_var_zero(cubic_threefold_example(Q), 0)
    assert g.nvars == 4
    assert g == parse_poly("x0^3 + x0*x1^2 + x1*x3^2 + x2^3", 4, Q)


def test_set_var_zero_middle_variable():
    p = parse_poly("x0*x2 + x1^2", 3, Q)
    assert set_var_zero(p, 1) == parse_poly("x0*x1", 2, Q)
    assert set_var_zero(p, 2) == parse_poly("x1^2", 2, Q)


def test_first_order_section_fermat_is_static():
    # the x0-partial of the Fermat form dies on x0 = 0, so moving the
    # hyperplane contributes nothing to first order
    f = fermat(3, 3, Q)
    for text in ("x0", "x0 + 2*x1", "x2"):
        g, h = first_order_section(f, parse_poly(text, 3, Q))
        assert g == parse_poly("x0^3 + x1^3 + x2^3", 3, Q)
        assert h.is_zero()


def test_first_order_section_cyclic_example():
    f = cyclic_fermat(3, 4, Q)
    g, h = first_order_section(f, parse_poly("x0", 3, Q))
    assert h == parse_poly("x0*x2^3", 3, Q)
    assert g == set_var_zero(f, 0)


def test_first_order_section_zero_direction():
    f = cyclic_fermat(3, 4, Q)
    g, h = first_order_section(f, Polynomial.zero(Q, 3))
    assert g == set_var_zero(f, 0)
    assert h.is_zero()


def test_first_order_section_arity():
    with pytest.raises(ArityMismatch):
        first_order_section(fermat(3, 3, Q), parse_poly("x0", 4, Q))


def test_monomial_basis_small():
    assert monomial_basis(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert monomial_basis(2, 0) == [(0, 0)]
    assert len(monomial_basis(4, 3)) == 20


def test_monomial_basis_grlex_sorted():
    from hypersect.poly import grlex_key

    for nvars in (2, 3, 4):
        for degree in (1, 2, 3):
            basis = monomial_basis(nvars, degree)
            keys = [grlex_key(m) for m in basis]
            assert keys == sorted(keys, reverse=True)
            assert len(set(basis)) == len(basis)


def test_degree_and_homogeneity():
    assert Polynomial.zero(Q, 3).degree() == -1
    assert parse_poly("2", 3, Q).degree() == 0
    assert parse_poly("x0^2 + x1", 2, Q).degree() == 2
    assert not parse_poly("x0^2 + x1", 2, Q).is_homogeneous()
    assert fermat(3, 5, Q).is_homogeneous()
    with pytest.raises(NotHomogeneous):
        require_homogeneous(parse_poly("x0^2 + x1", 2, Q))


def test_to_text_round_trip():
    rng = random.Random(9)
    for field in FIELDS:
        for _ in range(100):
            p = rand_poly(rng, field, 3)
            assert parse_poly(p.to_text(), 3, field) == p


def test_to_text_var_start_offset():
    p = parse_poly("x0^2 - x1", 2, Q)
    assert p.to_text(var_start=1) == "x1^2 - x2"


def test_mixed_fields_rejected():
    a = parse_poly("x0", 2, Q)
    b = parse_poly("x0", 2, make_field(5))
    with pytest.raises(FieldMismatch):
        a + b


def test_mixed_arity_rejected():
    a = parse_poly("x0", 2, Q)
    b = parse_poly("x0", 3, Q)
    with pytest.raises(ArityMismatch):
        a * b


def test_ring_axioms_randomized():
    rng = random.Random(4)
    for field in FIELDS:
        for _ in range(150):
            a = rand_poly(rng, field, 2, max_degree=3, max_terms=4)
            b = rand_poly(rng, field, 2, max_degree=3, max_terms=4)
            c = rand_poly(rng, field, 2, max_degree=3, max_terms=4)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            s = rand_scalar(rng, field)
            assert (a + b).scale(s) == a.scale(s) + b.scale(s)
