import time

import pytest

from cosovereign.exactmath import QQ, Matrix, Singular, rational_functions
from cosovereign.hopf_fd import builtin_sweedler
from cosovereign.corep import regular_corep
from cosovereign.universal import (build_HF, certify_pi, check_psi_composition, find_F, iso_conjugate,
                                   iso_transpose_inverse, matrix_sovereign_shortcut, verify_HF)
from cosovereign.forms import sandwich, character_inverse

QQq = rational_functions("q")
q = QQq.gen()

F_CASES = {
    "identity": Matrix.from_rows(QQ, [[1, 0], [0, 1]]),
    "diag_q": Matrix.from_rows(QQq, [[1, 0], [0, q]]),
    "swap": Matrix.from_rows(QQ, [[0, 1], [1, 0]]),
}


@pytest.mark.parametrize("name", sorted(F_CASES))
def test_verify_HF(name):
    F = F_CASES[name]
    start = time.perf_counter()
    report = verify_HF(build_HF(F), degree=3)
    assert time.perf_counter() - start < 60
    assert report.ok, [str(v) for v in report.verdicts if not v.ok]
    assert report.dims == report.expected_dims
    assert report.dims.left == F.trace()


def test_trace_flag():
    assert build_HF(F_CASES["swap"]).F.trace() == 0
    assert verify_HF(build_HF(F_CASES["swap"]), 2).trace_flag
    assert not verify_HF(build_HF(F_CASES["identity"]), 2).trace_flag


def test_isomorphisms():
    H = build_HF(F_CASES["diag_q"])
    K = Matrix.from_rows(QQq, [[1, 1], [0, 1]])
    assert iso_conjugate(H, K, 2).ok
    assert iso_transpose_inverse(H, 2).ok
    assert check_psi_composition(H, 2).ok


@pytest.mark.parametrize("lam", [2, "q"])
def test_scaling_F_gives_same_relations(lam):
    F = F_CASES["diag_q"]
    c = q if lam == "q" else QQq(lam)
    G = Matrix.from_rows(QQq, [[F[i, j] * c for j in range(2)] for i in range(2)])
    assert set(build_HF(F).hopf.pres.relations) == set(build_HF(G).hopf.pres.relations)


def test_matrix_shortcut_agrees():
    H = build_HF(F_CASES["diag_q"])
    A = H.hopf
    inv = character_inverse(A, H.char)
    short = matrix_sovereign_shortcut(H)
    for name, g in zip(A.gens.names, A.generator_elements()):
        assert sandwich(A, H.char, inv, g, A.antipode_of) == short[name]


def test_singular_F():
    with pytest.raises(Singular):
        build_HF(Matrix.from_rows(QQ, [[1, 1], [1, 1]]))


def test_find_F_recovers_F():
    H = build_HF(F_CASES["diag_q"])
    res = find_F(H.corep_u, 3)
    assert res.certificate.ok and res.morphism.ok
    F = res.F
    # F is determined up to a scalar
    ratio = F[0, 0] / F_CASES["diag_q"][0, 0]
    assert all(F[i, j] == ratio * F_CASES["diag_q"][i, j] for i in range(2) for j in range(2))


def test_find_F_on_sweedler_regular():
    A = builtin_sweedler()
    V = regular_corep(A)
    res = find_F(V)
    assert res.certificate.ok and res.morphism.ok
    assert certify_pi(V, res.F).ok
