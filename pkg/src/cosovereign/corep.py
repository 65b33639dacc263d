"""Matrix corepresentations and their sovereign dimensions.

Column convention: the coaction on a basis is ``alpha(v_i) = sum_j v_j (x) a_ji``.
A scalar matrix ``T`` is a comodule map from ``V`` to ``W`` when
``W.a @ T == T @ V.a`` entrywise modulo the ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactmath import Matrix, Scalar, Singular, mat_inverse
from .forms import GenCharacter, evaluate
from .hopf_pres import MissingInverse
from .ncalg import NCPoly, TensorPoly, Verdict


class AlgebraMismatch(ValueError):
    pass


class MissingAntipodeInverse(MissingInverse):
    pass


class IntertwinerCheckFailed(ValueError):
    pass


class CorepInvalid(ValueError):
    pass


@dataclass(frozen=True)
class DimensionPair:
    left: Scalar
    right: Scalar


class MatrixCorep:
    def __init__(self, algebra, entries: Sequence[Sequence[NCPoly]], label: str = ""):
        n = len(entries)
        if n == 0 or any(len(r) != n for r in entries):
            raise CorepInvalid("entries must form a nonempty square matrix")
        for row in entries:
            for p in row:
                if p.gens != algebra.gens:
                    raise AlgebraMismatch("entry over a different algebra")
        self.algebra = algebra
        self.entries = tuple(tuple(r) for r in entries)
        self.size = n
        self.label = label
        one, zero = algebra.field.one(), algebra.field.zero()
        for i in range(n):
            for j in range(n):
                if algebra.counit_of(self.entries[i][j]) != (one if i == j else zero):
                    raise CorepInvalid(f"counit of entry ({i},{j}) is not delta")

    def __getitem__(self, ij: tuple[int, int]) -> NCPoly:
        return self.entries[ij[0]][ij[1]]

    def __repr__(self):
        return f"MatrixCorep({self.label or 'anonymous'}, size={self.size})"

    def max_degree(self) -> int:
        return max(p.degree for r in self.entries for p in r)


def verify_corep(V: MatrixCorep, degree: int | None = None) -> Verdict:
    """Delta(a_ij) = sum_k a_ik (x) a_kj for every entry."""
    A = V.algebra
    parts = []
    for i in range(V.size):
        for j in range(V.size):
            t = A.comult_of(V[i, j])
            for k in range(V.size):
                t = t - TensorPoly.pure(V[i, k], V[k, j])
            if t.is_zero():
                continue
            d = degree if degree is not None else max(t.degrees) + 2
            v = A.tensor_zero_check(t, d)
            parts.append(Verdict(v.status, v.degree, v.witness, f"({i},{j})"))
    out = Verdict.combine("corep", parts)
    if degree is not None and out.degree is None:
        out = Verdict(out.status, degree, out.witness, out.name, out.parts)
    return out


def trivial_corep(A) -> MatrixCorep:
    return MatrixCorep(A, [[A.algebra_one()]], "trivial")


def regular_corep(A) -> MatrixCorep:
    """A finite-dimensional algebra coacting on itself through Delta."""
    n = A.dim
    entries = [[A.element([A.comult[i][j][k] for k in range(n)]) for i in range(n)] for j in range(n)]
    return MatrixCorep(A, entries, "regular")


def left_dual(V: MatrixCorep) -> MatrixCorep:
    A = V.algebra
    n = V.size
    return MatrixCorep(A, [[A.antipode_of(V[j, i]) for j in range(n)] for i in range(n)], f"left_dual({V.label})")


def right_dual(V: MatrixCorep) -> MatrixCorep:
    A = V.algebra
    if not A.has_antipode_inverse:
        raise MissingAntipodeInverse("right dual needs the antipode inverse")
    n = V.size
    return MatrixCorep(A, [[A.antipode_inv_of(V[j, i]) for j in range(n)] for i in range(n)],
                       f"right_dual({V.label})")


def tensor_corep(V: MatrixCorep, W: MatrixCorep) -> MatrixCorep:
    """Entry at ((k,l),(i,j)) is a_ki b_lj."""
    if V.algebra is not W.algebra:
        raise AlgebraMismatch("coreps over different algebras")
    A = V.algebra
    n, m = V.size, W.size
    entries = [[A.mul(V[k, i], W[l, j]) for i in range(n) for j in range(m)] for k in range(n) for l in range(m)]
    return MatrixCorep(A, entries, f"({V.label}(x){W.label})")


def direct_sum(V: MatrixCorep, W: MatrixCorep) -> MatrixCorep:
    if V.algebra is not W.algebra:
        raise AlgebraMismatch("coreps over different algebras")
    A = V.algebra
    z = A.algebra_one().zero()
    n, m = V.size, W.size
    entries = [[z] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            entries[i][j] = V[i, j]
    for i in range(m):
        for j in range(m):
            entries[n + i][n + j] = W[i, j]
    return MatrixCorep(A, entries, f"({V.label}+{W.label})")


def _product(A, P: Matrix | None, X: MatrixCorep, Q: Matrix | None = None):
    """The matrix of algebra elements P @ X.a or X.a @ Q."""
    n = X.size
    z = A.algebra_one().zero()
    out = [[z] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = z
            for k in range(n):
                if P is not None:
                    c = P[i, k]
                    if c:
                        acc = acc + X[k, j].scale(c)
                else:
                    c = Q[k, j]
                    if c:
                        acc = acc + X[i, k].scale(c)
            out[i][j] = acc
    return out


def check_intertwiner(V: MatrixCorep, W: MatrixCorep, T: Matrix, degree: int | None = None) -> Verdict:
    """``T`` maps ``V`` to ``W``: W.a @ T = T @ V.a modulo the ideal."""
    A = V.algebra
    if (T.rows, T.cols) != (W.size, V.size):
        return Verdict.fail("intertwiner", witness="shape")
    lhs = [[A.algebra_one().zero() for _ in range(V.size)] for _ in range(W.size)]
    for i in range(W.size):
        for j in range(V.size):
            acc = lhs[i][j]
            for k in range(W.size):
                if T[k, j]:
                    acc = acc + W[i, k].scale(T[k, j])
            for k in range(V.size):
                if T[i, k]:
                    acc = acc - V[k, j].scale(T[i, k])
            lhs[i][j] = acc
    parts = []
    for i in range(W.size):
        for j in range(V.size):
            diff = lhs[i][j]
            if diff.is_zero():
                continue
            d = degree if degree is not None else A.default_degree(diff)
            v = A.zero_check(diff, d)
            parts.append(Verdict(v.status, v.degree, v.witness, f"({i},{j})"))
    return Verdict.combine("intertwiner", parts)


def sovereign_iso(V: MatrixCorep, phi: GenCharacter, degree: int | None = None) -> Matrix:
    """The matrix of phi_V from the right dual to the left dual: entry (j,i) is Phi(a_ij)."""
    A = V.algebra
    n = V.size
    P = Matrix.from_rows(A.field, [[evaluate(A, phi, V[j, i]) for j in range(n)] for i in range(n)])
    v = check_intertwiner(right_dual(V), left_dual(V), P, degree)
    if v.failed:
        raise IntertwinerCheckFailed(f"phi_V is not a comodule map: {v.witness}")
    return P


def dims(V: MatrixCorep, phi: GenCharacter) -> DimensionPair:
    A = V.algebra
    left = A.field.zero()
    right = A.field.zero()
    for i in range(V.size):
        left = left + evaluate(A, phi, V[i, i])
        right = right + evaluate(A, phi, A.antipode_of(V[i, i]))
    return DimensionPair(left, right)


def check_dim_properties(coreps: Sequence[MatrixCorep], phi: GenCharacter,
                         isomorphisms: Sequence[tuple[MatrixCorep, MatrixCorep, Matrix]] = (),
                         degree: int | None = None) -> Verdict:
    """Unit, duality, tensor and isomorphism properties of the sovereign dimensions."""
    if not coreps:
        raise ValueError("need at least one corep")
    A = coreps[0].algebra
    parts = []
    one = A.field.one()
    u = dims(trivial_corep(A), phi)
    parts.append(Verdict.passed("unit") if (u.left, u.right) == (one, one)
                 else Verdict.fail("unit", witness=(str(u.left), str(u.right))))
    for V in coreps:
        d = dims(V, phi)
        for dual in (left_dual(V),) + ((right_dual(V),) if A.has_antipode_inverse else ()):
            dd = dims(dual, phi)
            ok = dd.left == d.right and dd.right == d.left
            parts.append(Verdict.passed(f"dual {dual.label}") if ok
                         else Verdict.fail(f"dual {dual.label}", witness=(str(dd.left), str(dd.right))))
        for W in coreps:
            e = dims(W, phi)
            t = dims(tensor_corep(V, W), phi)
            ok = t.left == d.left * e.left and t.right == d.right * e.right
            name = f"tensor {V.label},{W.label}"
            parts.append(Verdict.passed(name) if ok else Verdict.fail(name, witness=(str(t.left), str(t.right))))
    for V, W, T in isomorphisms:
        name = f"iso {V.label}->{W.label}"
        try:
            mat_inverse(T)
        except Singular:
            parts.append(Verdict.fail(name, witness="intertwiner not invertible"))
            continue
        iv = check_intertwiner(V, W, T, degree)
        if not iv.ok:
            parts.append(iv.renamed(name))
            continue
        a, b = dims(V, phi), dims(W, phi)
        parts.append(Verdict.passed(name) if (a.left, a.right) == (b.left, b.right)
                     else Verdict.fail(name, witness=(str(b.left), str(b.right))))
    return Verdict.combine("dim_properties", parts)
