from fractions import Fraction

import pytest

from cosovereign.cobraid import convolve, table_form
from cosovereign.exactmath import QQ, Matrix, rational_functions, scalar
from cosovereign.forms import (InverseCheckFailed, MissingValue, character_inverse, check_character,
                               convolve_characters, counit_character, evaluate, make_character, verify_remark_38,
                               verify_sovereign)
from cosovereign.hopf_fd import builtin_group_algebra, builtin_sweedler, cyclic_group_table
from cosovereign.hopf_pres import builtin_laurent, builtin_sweedler_presented
from cosovereign.universal import build_HF

from conftest import random_rational
from oracles import sweedler_characters_by_enumeration

CASES = 1000


def test_convolution_group_laws_on_forms(rng):
    A = builtin_sweedler()
    names = A.gens.names
    eps = table_form(A, dict(zip(names, A.counit_vec)))
    basis = [A.basis_element(i) for i in range(4)]
    for _ in range(CASES):
        f, g, h = (table_form(A, {n: random_rational(rng) for n in names}) for _ in range(3))
        left = convolve(A, convolve(A, f, g), h)
        right = convolve(A, f, convolve(A, g, h))
        for b in basis:
            assert left(b) == right(b)
            assert convolve(A, f, eps)(b) == f(b) == convolve(A, eps, f)(b)


def test_convolution_group_laws_on_characters(rng):
    L = builtin_laurent()
    eps = counit_character(L)
    for _ in range(CASES):
        a, b, c = (random_rational(rng) or QQ(1) for _ in range(3))
        phi, psi, chi = (make_character(L, {"t": v, "t_inv": 1 / v}) for v in (a, b, c))
        assert convolve_characters(L, convolve_characters(L, phi, psi), chi).values == \
               convolve_characters(L, phi, convolve_characters(L, psi, chi)).values
        assert convolve_characters(L, phi, eps).values == phi.values
        inv = character_inverse(L, phi)
        assert convolve_characters(L, phi, inv).values == eps.values
        assert inv["t"] == 1 / a


def test_sweedler_characters_by_enumeration():
    found = sweedler_characters_by_enumeration()
    assert found == {(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0))}
    P = builtin_sweedler_presented()
    A = builtin_sweedler()
    for gv, xv in found:
        phi_p = make_character(P, {"g": gv, "x": xv})
        phi_f = make_character(A, {"1": 1, "g": gv, "x": xv, "gx": gv * xv})
        assert check_character(P, phi_p).ok and check_character(A, phi_f).ok
        expect = gv == -1
        assert verify_sovereign(P, phi_p, 3).ok is expect
        assert verify_sovereign(A, phi_f).ok is expect
        assert verify_remark_38(A, phi_f).ok is expect


def test_sweedler_sovereign_character():
    A = builtin_sweedler()
    phi = make_character(A, {"1": 1, "g": -1, "x": 0, "gx": 0})
    assert verify_sovereign(A, phi).ok
    assert verify_sovereign(A, counit_character(A)).failed
    assert verify_remark_38(A, counit_character(A)).failed


@pytest.mark.parametrize("n", [2, 3])
def test_involutory_counit_is_sovereign(n):
    A = builtin_group_algebra(cyclic_group_table(n))
    assert verify_sovereign(A, counit_character(A)).ok
    assert verify_remark_38(A, counit_character(A)).ok


def test_hf_character():
    QQq = rational_functions("q")
    H = build_HF(Matrix.from_rows(QQq, [[1, 0], [0, QQq.gen()]]))
    assert check_character(H.hopf, H.char).ok
    assert verify_sovereign(H.hopf, H.char, 3).ok


def test_bad_inputs():
    L = builtin_laurent()
    with pytest.raises(MissingValue):
        make_character(L, {"t": 2})
    bad = make_character(L, {"t": 2, "t_inv": 3})
    assert check_character(L, bad).failed
    assert verify_sovereign(L, bad, 2).failed
    with pytest.raises(InverseCheckFailed):
        character_inverse(L, bad)
    assert evaluate(L, bad, L["t"] * L["t"]) == scalar(QQ, 4)
