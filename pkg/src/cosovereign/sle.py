"""Hopf algebras SL(E) attached to a non-degenerate multilinear form E.

``E`` is a form on V^{(x)N}, dim V = n.  The algebra has generators a_ij and
relations

    (left)   sum_j E(j_1..j_N) a_{j_1 i_1} ... a_{j_N i_N} = E(i_1..i_N)
    (right)  sum_j E(j_1..j_N) a_{i_1 j_1} ... a_{i_N j_N} = E(i_1..i_N)

With lambda solving  sum_{j'} lambda(i, j') E(j', k) = delta_ik  and mu solving
sum_{j'} E(k, j') mu(j', i) = delta_ik, multiplying the left relations by
lambda gives a left inverse of a, hence

    S(a_kj)    = sum lambda(k, i') E(j', j) a_{j'_1 i'_1} ... a_{j'_{N-1} i'_{N-1}},

and multiplying them by mu gives a right inverse of the transpose of a, hence

    S^-1(a_kj) = sum E(j, j'') a_{j''_1 i''_1} ... a_{j''_{N-1} i''_{N-1}} mu(i'', k).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corep import MatrixCorep
from .exactmath import FieldDesc, Inconsistent, Matrix, Scalar, Singular, mat_inverse, rational_functions, scalar, solve_rows
from .forms import GenCharacter, check_character, verify_sovereign
from .hopf_pres import PresentedHopf
from .ncalg import FreeAlgebra, NCPoly, Presentation, TensorPoly, Verdict


class Degenerate(ValueError):
    pass


class BetaMissing(ValueError):
    pass


Index = tuple[int, ...]


class ETensor:
    """Dense n^N array of scalars; ``values[k]`` is E at the k-th index tuple
    in ``itertools.product(range(n), repeat=N)`` order (last index fastest)."""

    def __init__(self, n: int, N: int, values: Sequence | Mapping[Index, object], field: FieldDesc):
        if n < 1 or N < 1:
            raise ValueError("n and N must be positive")
        self.n, self.N, self.field = n, N, field
        idx = list(itertools.product(range(n), repeat=N))
        if isinstance(values, Mapping):
            self.values = {i: scalar(field, values.get(i, 0)) for i in idx}
        else:
            if len(values) != len(idx):
                raise ValueError(f"expected {len(idx)} values")
            self.values = {i: scalar(field, v) for i, v in zip(idx, values)}
        if not any(self.values.values()):
            raise ValueError("E is identically zero")

    def __call__(self, *idx: int) -> Scalar:
        return self.values[tuple(idx)]

    def __getitem__(self, idx: Index) -> Scalar:
        return self.values[idx]

    def dense(self) -> list[Scalar]:
        return [self.values[i] for i in itertools.product(range(self.n), repeat=self.N)]

    def __eq__(self, other):
        return isinstance(other, ETensor) and (self.n, self.N, self.field) == (other.n, other.N, other.field) \
            and self.values == other.values

    __hash__ = None


def _tails(E: ETensor) -> list[Index]:
    return list(itertools.product(range(E.n), repeat=E.N - 1))


def _left_matrix(E: ETensor) -> Matrix:
    """Row k, column j': E(j', k)."""
    return Matrix.from_rows(E.field, [[E[jp + (k,)] for jp in _tails(E)] for k in range(E.n)])


def _right_matrix(E: ETensor) -> Matrix:
    """Row k, column j': E(k, j')."""
    return Matrix.from_rows(E.field, [[E[(k,) + jp] for jp in _tails(E)] for k in range(E.n)])


def check_nondegenerate(E: ETensor) -> dict[str, bool]:
    return {"left": _left_matrix(E).rank() == E.n, "right": _right_matrix(E).rank() == E.n}


def _right_inverse(M: Matrix, method: str) -> list[list[Scalar]]:
    """X with M @ X = I (X has M.cols rows)."""
    if method == "minnorm":
        try:
            return (M.transpose() @ mat_inverse(M @ M.transpose())).tolist()
        except Singular:
            if M.rank() < M.rows:
                raise Inconsistent("system has no solution") from None
            method = "particular"
    if method != "particular":
        raise ValueError(f"unknown method {method!r}")
    field = M.field
    cols = []
    for i in range(M.rows):
        rhs = [field.one() if k == i else field.zero() for k in range(M.rows)]
        cols.append(solve_rows(M.tolist(), rhs, M.cols, field).particular)
    return [[cols[i][t] for i in range(M.rows)] for t in range(M.cols)]


def solve_star(E: ETensor, method: str = "minnorm") -> dict[Index, Scalar]:
    """lambda with sum_{j'} lambda(i, j') E(j', k) = delta_ik.

    ``minnorm`` picks the solution in the row space of the system; it keeps the
    derived antipode identities provable at low degree.  ``particular`` is the
    leftmost-pivot solution.
    """
    X = _right_inverse(_left_matrix(E), method)
    return {(i,) + jp: X[t][i] for t, jp in enumerate(_tails(E)) for i in range(E.n)}


def solve_starstar(E: ETensor, method: str = "minnorm") -> dict[Index, Scalar]:
    """mu with sum_{j'} E(k, j') mu(j', i) = delta_ik."""
    X = _right_inverse(_right_matrix(E), method)
    return {jp + (i,): X[t][i] for t, jp in enumerate(_tails(E)) for i in range(E.n)}


def check_star(E: ETensor, lam: Mapping[Index, Scalar]) -> bool:
    for i, k in itertools.product(range(E.n), repeat=2):
        s = E.field.zero()
        for jp in _tails(E):
            s = s + lam[(i,) + jp] * E[jp + (k,)]
        if s != (E.field.one() if i == k else E.field.zero()):
            return False
    return True


def check_starstar(E: ETensor, mu: Mapping[Index, Scalar]) -> bool:
    for i, k in itertools.product(range(E.n), repeat=2):
        s = E.field.zero()
        for jp in _tails(E):
            s = s + E[(k,) + jp] * mu[jp + (i,)]
        if s != (E.field.one() if i == k else E.field.zero()):
            return False
    return True


def find_beta(E: ETensor) -> list[Scalar] | None:
    """beta with E(j', i) = beta_i E(i, j') for all i, j', or None."""
    beta = []
    for i in range(E.n):
        b = None
        for jp in _tails(E):
            lhs, rhs = E[jp + (i,)], E[(i,) + jp]
            if not rhs:
                if lhs:
                    return None
                continue
            ratio = lhs / rhs
            if b is None:
                b = ratio
            elif b != ratio:
                return None
        if b is None:
            b = E.field.one()
        if not b:
            return None
        beta.append(b)
    return beta


def build_Eq(n: int, N: int | None = None, field: FieldDesc | None = None, q=None) -> ETensor:
    """E_q: zero on repeated indices, (-q)^(number of inversions) otherwise.

    ``q`` defaults to the field variable; pass e.g. t^2 over Q(t) to have a
    square root of q available.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    N = n if N is None else N
    field = field or rational_functions("q")
    mq = -(field.gen() if q is None else scalar(field, q))
    vals = {}
    for idx in itertools.product(range(n), repeat=N):
        if len(set(idx)) == N:
            inv = sum(1 for a in range(N) for b in range(a + 1, N) if idx[a] > idx[b])
            vals[idx] = mq ** inv
    return ETensor(n, N, vals, field)


# ---------------------------------------------------------------------------


@dataclass
class SLEAlgebra:
    E: ETensor
    lam: dict
    mu: dict
    hopf: PresentedHopf
    corep_a: MatrixCorep
    beta: list | None = None
    char: GenCharacter | None = None

    @property
    def outside_hypotheses(self) -> bool:
        return self.E.n == 1 or self.E.N < 2


def gen_name(i: int, j: int, n: int) -> str:
    return f"a{i + 1}{j + 1}" if n < 10 else f"a{i + 1}_{j + 1}"


def build_SLE(E: ETensor, method: str = "minnorm") -> SLEAlgebra:
    nd = check_nondegenerate(E)
    if not (nd["left"] and nd["right"]):
        raise Degenerate(f"E is not non-degenerate: {nd}")
    n, N, field = E.n, E.N, E.field
    A = FreeAlgebra([gen_name(i, j, n) for i in range(n) for j in range(n)], field)
    a = [[A[gen_name(i, j, n)] for j in range(n)] for i in range(n)]
    one, zero = A.one, A.zero

    def word(rows: Index, cols: Index) -> NCPoly:
        m = one
        for r, c in zip(rows, cols):
            m = m * a[r][c]
        return m

    support = [j for j in itertools.product(range(n), repeat=N) if E[j]]
    rels = []
    for fam in ("left", "right"):
        for i in itertools.product(range(n), repeat=N):
            p = zero
            for j in support:
                p = p + (word(j, i) if fam == "left" else word(i, j)).scale(E[j])
            r = p - E[i]
            if not r.is_zero():
                rels.append(r)
    pres = Presentation(A.gens, rels, field)

    lam = solve_star(E, method)
    mu = solve_starstar(E, method)
    tails = _tails(E)
    anti, anti_inv, comult, counit = {}, {}, {}, {}
    for k in range(n):
        for j in range(n):
            s = zero
            for ip in tails:
                l = lam[(k,) + ip]
                if not l:
                    continue
                for jp in tails:
                    e = E[jp + (j,)]
                    if e:
                        s = s + word(jp, ip).scale(l * e)
            anti[gen_name(k, j, n)] = s
            t = zero
            for jp in tails:
                e = E[(j,) + jp]
                if not e:
                    continue
                for ip in tails:
                    m = mu[ip + (k,)]
                    if m:
                        t = t + word(jp, ip).scale(e * m)
            anti_inv[gen_name(k, j, n)] = t
            comult[gen_name(k, j, n)] = sum((TensorPoly.pure(a[k][m], a[m][j]) for m in range(n)),
                                            TensorPoly(A.gens, field))
            counit[gen_name(k, j, n)] = 1 if k == j else 0
    notes = ["antipode derived from the left-inverse construction"]
    if n == 1:
        notes.append("n = 1: outside the non-degeneracy hypotheses")
    hopf = PresentedHopf(pres, comult, counit, anti, anti_inv, name=f"SL(E), n={n}, N={N}", notes=notes)
    out = SLEAlgebra(E, lam, mu, hopf, MatrixCorep(hopf, a, "a"))
    beta = find_beta(E)
    if beta is not None:
        out.beta = beta
        out.char = GenCharacter({gen_name(i, j, n): (beta[i] if i == j else field.zero())
                                 for i in range(n) for j in range(n)}, "Phi_beta")
    return out


def check_inverse_relations(A: SLEAlgebra, degree: int | None = None) -> Verdict:
    """S(a) a = 1 = a S(a) entrywise modulo the ideal."""
    H = A.hopf
    n = A.E.n
    d = A.E.N + 1 if degree is None else degree
    a = A.corep_a
    S = [[H.antipode_of(a[i, j]) for j in range(n)] for i in range(n)]
    parts = []
    for i, j in itertools.product(range(n), repeat=2):
        delta = 1 if i == j else 0
        left = sum((S[i][k] * a[k, j] for k in range(n)), H.algebra_one().zero()) - delta
        right = sum((a[i, k] * S[k][j] for k in range(n)), H.algebra_one().zero()) - delta
        parts.append(H.zero_check(left, d).renamed(f"S(a)a ({i},{j})"))
        parts.append(H.zero_check(right, d).renamed(f"aS(a) ({i},{j})"))
    return Verdict.combine("inverse_relations", parts)


def sovereign_char_beta(A: SLEAlgebra, degree: int | None = None) -> Verdict:
    if A.char is None:
        raise BetaMissing("E has no beta")
    d = A.E.N + 1 if degree is None else degree
    return Verdict.combine("sovereign_char_beta", [check_character(A.hopf, A.char),
                                                   verify_sovereign(A.hopf, A.char, d)])
