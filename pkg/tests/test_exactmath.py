from fractions import Fraction

import pytest

from cosovereign.exactmath import (QQ, DimensionMismatch, DivisionByZero, FieldMismatch, Inconsistent, Matrix,
                                   ScalarParseError, Singular, format_scalar, kernel_basis, mat_inverse,
                                   parse_scalar, rational_functions, scalar, solve_linear)

from conftest import QQq, random_qq_poly_scalar, random_rational

CASES = 1000


@pytest.mark.parametrize("field_name", ["QQ", "QQ(q)"])
def test_field_axioms_randomized(rng, field_name):
    if field_name == "QQ":
        draw = lambda: random_rational(rng)
        F = QQ
    else:
        draw = lambda: random_qq_poly_scalar(rng)
        F = QQq
    for _ in range(CASES):
        a, b, c = draw(), draw(), draw()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + F.zero() == a and a * F.one() == a
        assert a - a == F.zero()
        if a:
            assert a * a.inverse() == F.one()
            assert (b / a) * a == b


def test_canonical_form_is_unique(rng):
    q = QQq.gen()
    x = (q ** 2 - 1) / (q - 1)
    assert x == q + 1
    assert format_scalar(x) == "q+1"
    assert format_scalar((q + 1) / q) == "(q+1)/q"
    assert format_scalar(scalar(QQq, -2) / 4) == "-1/2"
    for _ in range(CASES):
        a = random_qq_poly_scalar(rng)
        assert parse_scalar(QQq, format_scalar(a)) == a
        assert format_scalar(parse_scalar(QQq, format_scalar(a))) == format_scalar(a)


def test_parse_forms():
    q = QQq.gen()
    assert parse_scalar(QQq, "3*q^2-1") == 3 * q ** 2 - 1
    assert parse_scalar(QQq, "(q^2+1)/(2*q)") == (q ** 2 + 1) / (2 * q)
    assert parse_scalar(QQq, "q**-2") == 1 / q ** 2
    assert parse_scalar(QQ, "-7/21") == scalar(QQ, Fraction(-1, 3))
    for bad in ("", "q", "1/", "2 3", "(1"):
        with pytest.raises(ScalarParseError):
            parse_scalar(QQ, bad)


def test_errors():
    with pytest.raises(DivisionByZero):
        scalar(QQ, 1) / 0
    with pytest.raises(FieldMismatch):
        scalar(QQ, 1) + QQq.gen()
    with pytest.raises(ValueError):
        scalar(QQ, QQq.gen())


def test_evaluate_at_point():
    q = QQq.gen()
    assert ((q + 1) / q).evaluate(2) == Fraction(3, 2)


def test_matrix_inverse_and_rank(rng):
    q = QQq.gen()
    F = Matrix.from_rows(QQq, [[1, 0], [0, q]])
    Fi = mat_inverse(F)
    assert (F @ Fi).is_identity()
    assert Fi.trace() == 1 + 1 / q
    with pytest.raises(Singular):
        mat_inverse(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))
    for _ in range(200):
        rows = [[random_rational(rng) for _ in range(3)] for _ in range(3)]
        M = Matrix.from_rows(QQ, rows)
        if M.rank() == 3:
            assert (M @ M.inverse()).is_identity()
            assert (M.inverse() @ M).is_identity()


def test_solve_linear():
    A = Matrix.from_rows(QQ, [[1, 1, 0], [0, 1, 1]])
    sol = solve_linear(A, [2, 3])
    assert sol.dimension == 1
    for t in (0, 1, Fraction(5, 7)):
        x = sol.point([t])
        assert x[0] + x[1] == 2 and x[1] + x[2] == 3
    with pytest.raises(Inconsistent):
        solve_linear(Matrix.from_rows(QQ, [[1, 1], [1, 1]]), [1, 2])
    with pytest.raises(DimensionMismatch):
        solve_linear(A, [1])
    ker = kernel_basis([[scalar(QQ, 1), scalar(QQ, 1)]], 2, QQ)
    assert len(ker) == 1 and ker[0][0] + ker[0][1] == 0


def test_bad_variable_name():
    with pytest.raises(ValueError):
        rational_functions("1q")
