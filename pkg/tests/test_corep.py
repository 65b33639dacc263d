import pytest

from cosovereign.corep import (AlgebraMismatch, CorepInvalid, IntertwinerCheckFailed, check_dim_properties,
                               check_intertwiner, dims, direct_sum, left_dual, regular_corep, right_dual,
                               sovereign_iso, tensor_corep, trivial_corep, verify_corep)
from cosovereign.exactmath import QQ, Matrix, rational_functions
from cosovereign.forms import counit_character, make_character
from cosovereign.hopf_fd import builtin_group_algebra, builtin_sweedler, cyclic_group_table
from cosovereign.hopf_pres import builtin_sweedler_presented
from cosovereign.corep import MatrixCorep
from cosovereign.universal import build_HF

QQq = rational_functions("q")


def _sweedler_phi(A):
    return make_character(A, {"1": 1, "g": -1, "x": 0, "gx": 0})


def test_regular_corep_of_sweedler():
    A = builtin_sweedler()
    R = regular_corep(A)
    assert verify_corep(R).ok
    d = dims(R, _sweedler_phi(A))
    assert (d.left, d.right) == (QQ(0), QQ(0))
    assert sovereign_iso(R, _sweedler_phi(A)).rank() == 4


def test_trivial_dims():
    for A in (builtin_sweedler(), builtin_sweedler_presented()):
        d = dims(trivial_corep(A), counit_character(A))
        assert (d.left, d.right) == (QQ(1), QQ(1))


def test_hf_dims_and_properties():
    q = QQq.gen()
    H = build_HF(Matrix.from_rows(QQq, [[1, 0], [0, q]]))
    d = dims(H.corep_u, H.char)
    assert d.left == q + 1 and d.right == (q + 1) / q
    assert d.left != d.right
    assert check_dim_properties([H.corep_u, H.corep_v], H.char, degree=3).ok
    assert sovereign_iso(H.corep_u, H.char, 3).rank() == 2


def test_duals_tensor_and_sum():
    A = builtin_sweedler_presented()
    g, x = A["g"], A["x"]
    V = MatrixCorep(A, [[A.algebra_one(), x], [x.zero(), g]], "V")
    phi = make_character(A, {"g": -1, "x": 0})
    for W in (V, left_dual(V), right_dual(V), tensor_corep(V, V), direct_sum(V, trivial_corep(A))):
        assert verify_corep(W, 3).ok
    dv, dt = dims(V, phi), dims(tensor_corep(V, V), phi)
    assert dt.left == dv.left ** 2 and dt.right == dv.right ** 2
    assert dims(left_dual(V), phi).left == dv.right


def test_intertwiners():
    A = builtin_group_algebra(cyclic_group_table(2))
    R = regular_corep(A)
    swap = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert check_intertwiner(R, R, Matrix.identity(QQ, 2)).ok
    assert check_intertwiner(R, R, swap).failed
    assert check_intertwiner(R, R, Matrix.identity(QQ, 3)).failed
    with pytest.raises(IntertwinerCheckFailed):
        sovereign_iso(regular_corep(builtin_sweedler()), counit_character(builtin_sweedler()))


def test_invalid_coreps():
    A = builtin_sweedler_presented()
    g, x = A["g"], A["x"]
    with pytest.raises(CorepInvalid):
        MatrixCorep(A, [[g, x]], "bad")
    with pytest.raises(CorepInvalid):
        MatrixCorep(A, [[x]], "bad")
    assert verify_corep(MatrixCorep(A, [[A.algebra_one(), x], [x.zero(), A.algebra_one()]]), 3).failed
    with pytest.raises(AlgebraMismatch):
        tensor_corep(trivial_corep(A), trivial_corep(builtin_sweedler_presented()))
