import itertools
import time

import pytest

from cosovereign.exactmath import QQ, rational_functions
from cosovereign.forms import check_character, verify_sovereign
from cosovereign.sle import (BetaMissing, Degenerate, ETensor, build_Eq, build_SLE, check_inverse_relations,
                             check_nondegenerate, check_star, check_starstar, find_beta, solve_star,
                             solve_starstar, sovereign_char_beta)

from oracles import inversions

QQq = rational_functions("q")
q = QQq.gen()


@pytest.mark.parametrize("n", [2, 3])
def test_Eq_entries(n):
    E = build_Eq(n)
    for idx in itertools.product(range(n), repeat=n):
        want = (-q) ** inversions(idx) if len(set(idx)) == n else QQq.zero()
        assert E[idx] == want


@pytest.mark.parametrize("n", [2, 3])
def test_find_beta(n):
    beta = find_beta(build_Eq(n))
    assert beta == [(-q) ** (n + 1 - 2 * i) for i in range(1, n + 1)]


@pytest.mark.parametrize("method", ["minnorm", "particular"])
def test_star_solutions(method):
    E = build_Eq(3)
    assert check_star(E, solve_star(E, method))
    assert check_starstar(E, solve_starstar(E, method))


def test_sle_n2():
    S = build_SLE(build_Eq(2))
    assert check_inverse_relations(S).ok
    assert sovereign_char_beta(S).ok
    assert verify_sovereign(S.hopf, S.char, 4).ok


def test_sle_n3_within_budget():
    start = time.perf_counter()
    S = build_SLE(build_Eq(3))
    v = check_inverse_relations(S, 4)
    assert v.ok and v.degree == 4
    assert check_character(S.hopf, S.char).ok
    assert verify_sovereign(S.hopf, S.char, 5).ok
    assert time.perf_counter() - start < 120


def test_degenerate_and_missing_beta():
    with pytest.raises(Degenerate):
        build_SLE(ETensor(2, 2, {(0, 0): 1}, QQ))
    # non-degenerate but with no beta
    E = ETensor(2, 2, {(0, 1): 1, (1, 0): 2, (1, 1): 1}, QQ)
    assert check_nondegenerate(E) == {"left": True, "right": True}
    assert find_beta(E) is None
    S = build_SLE(E)
    with pytest.raises(BetaMissing):
        sovereign_char_beta(S)
