"""Finite-dimensional Hopf algebras given by structure constants.

Conventions: ``mult[i][j][k]`` is the coefficient of ``e_k`` in
``e_i e_j``; ``comult[i][j][k]`` is the coefficient of ``e_j (x) e_k`` in
``Delta(e_i)``; matrices act on coordinate columns, so column ``j`` of
``antipode`` holds ``S(e_j)``.

Elements are handled as :class:`NCPoly` over the basis names.  Any word
is read as the product of its letters, so a single letter is a basis
vector and the empty word is the unit.
"""
from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from .exactmath import QQ, FieldDesc, Matrix, Scalar, Singular, mat_inverse, scalar
from .ncalg import GenSet, NCPoly, Status, TensorPoly, Verdict


class ShapeMismatch(ValueError):
    pass


class NotAGroup(ValueError):
    pass


Tensor3 = tuple[tuple[tuple[Scalar, ...], ...], ...]


def _tensor3(field: FieldDesc, data, n: int) -> Tensor3:
    if len(data) != n or any(len(r) != n or any(len(c) != n for c in r) for r in data):
        raise ShapeMismatch(f"expected an {n}x{n}x{n} tensor")
    return tuple(tuple(tuple(scalar(field, v) for v in c) for c in r) for r in data)


class FinHopf:
    """Hopf algebra data on a fixed ordered basis."""

    exact = True

    def __init__(self, basis: Sequence[str], mult, unit, comult, counit, antipode: Matrix,
                 antipode_inverse: Matrix | None = None, field: FieldDesc = QQ, name: str = ""):
        n = len(basis)
        self.field = field
        self.name = name
        self.gens = GenSet(basis)
        self.dim = n
        self.mult = _tensor3(field, mult, n)
        self.comult = _tensor3(field, comult, n)
        if len(unit) != n or len(counit) != n:
            raise ShapeMismatch("unit and counit must have length dim")
        self.unit = tuple(scalar(field, v) for v in unit)
        self.counit_vec = tuple(scalar(field, v) for v in counit)
        if (antipode.rows, antipode.cols) != (n, n):
            raise ShapeMismatch("antipode must be dim x dim")
        self.antipode_matrix = antipode
        if antipode_inverse is None:
            try:
                antipode_inverse = mat_inverse(antipode)
            except Singular:
                antipode_inverse = None
        elif (antipode_inverse.rows, antipode_inverse.cols) != (n, n):
            raise ShapeMismatch("antipode inverse must be dim x dim")
        self.antipode_inverse_matrix = antipode_inverse

    def __repr__(self):
        return f"FinHopf({self.name or 'anonymous'}, dim={self.dim})"

    def __eq__(self, other):
        return (isinstance(other, FinHopf) and self.gens == other.gens and self.field == other.field
                and self.mult == other.mult and self.comult == other.comult and self.unit == other.unit
                and self.counit_vec == other.counit_vec and self.antipode_matrix == other.antipode_matrix)

    __hash__ = None

    # -- vectors ------------------------------------------------------------
    def _zero_vec(self) -> list[Scalar]:
        return [self.field.zero()] * self.dim

    def _vmul(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> list[Scalar]:
        out = self._zero_vec()
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, m in enumerate(self.mult[i][j]):
                    if m:
                        out[k] = out[k] + xy * m
        return out

    def vector(self, p: NCPoly) -> list[Scalar]:
        if p.gens != self.gens:
            raise ShapeMismatch("element over a different basis")
        out = self._zero_vec()
        for w, c in p.terms.items():
            if len(w) == 1:
                v = [self.field.zero()] * self.dim
                v[w[0]] = self.field.one()
            else:
                v = list(self.unit)
                for i in w:
                    e = [self.field.zero()] * self.dim
                    e[i] = self.field.one()
                    v = self._vmul(v, e)
            out = [o + c * x for o, x in zip(out, v)]
        return out

    def element(self, vec: Sequence) -> NCPoly:
        return NCPoly(self.gens, self.field, {(i,): scalar(self.field, v) for i, v in enumerate(vec)})

    def basis_element(self, i: int) -> NCPoly:
        return NCPoly.monomial(self.gens, self.field, (i,))

    # -- the common Hopf interface (shared with PresentedHopf) ---------------
    def algebra_one(self) -> NCPoly:
        return self.element(self.unit)

    def mul(self, p: NCPoly, q: NCPoly) -> NCPoly:
        return self.element(self._vmul(self.vector(p), self.vector(q)))

    def comult_of(self, p: NCPoly) -> TensorPoly:
        v = self.vector(p)
        terms: dict = {}
        for i, x in enumerate(v):
            if not x:
                continue
            for j in range(self.dim):
                for k in range(self.dim):
                    c = self.comult[i][j][k]
                    if c:
                        key = ((j,), (k,))
                        terms[key] = terms.get(key, self.field.zero()) + x * c
        return TensorPoly(self.gens, self.field, terms)

    def counit_of(self, p: NCPoly) -> Scalar:
        total = self.field.zero()
        for x, e in zip(self.vector(p), self.counit_vec):
            if x and e:
                total = total + x * e
        return total

    def _apply_matrix(self, m: Matrix, p: NCPoly) -> NCPoly:
        v = self.vector(p)
        out = self._zero_vec()
        for j, x in enumerate(v):
            if x:
                for i in range(self.dim):
                    if m[i, j]:
                        out[i] = out[i] + m[i, j] * x
        return self.element(out)

    def antipode_of(self, p: NCPoly) -> NCPoly:
        return self._apply_matrix(self.antipode_matrix, p)

    def antipode_inv_of(self, p: NCPoly) -> NCPoly:
        if self.antipode_inverse_matrix is None:
            raise Singular("antipode is not invertible")
        return self._apply_matrix(self.antipode_inverse_matrix, p)

    @property
    def has_antipode_inverse(self) -> bool:
        return self.antipode_inverse_matrix is not None

    def zero_check(self, p: NCPoly, degree: int | None = None) -> Verdict:
        if all(not x for x in self.vector(p)):
            return Verdict(Status.MEMBER, degree)
        return Verdict(Status.FAIL, degree, witness=self.element(self.vector(p)))

    def tensor_vectors(self, t: TensorPoly) -> dict[tuple[int, int], Scalar]:
        out: dict[tuple[int, int], Scalar] = {}
        for (a, b), c in t.terms.items():
            va = self.vector(NCPoly.monomial(self.gens, self.field, a))
            vb = self.vector(NCPoly.monomial(self.gens, self.field, b))
            for i, x in enumerate(va):
                if x:
                    for j, y in enumerate(vb):
                        if y:
                            out[(i, j)] = out.get((i, j), self.field.zero()) + c * x * y
        return {k: v for k, v in out.items() if v}

    def tensor_zero_check(self, t: TensorPoly, degree: int | None = None) -> Verdict:
        rest = self.tensor_vectors(t)
        if not rest:
            return Verdict(Status.MEMBER, degree)
        return Verdict(Status.FAIL, degree, witness=rest)

    def spanning_words(self, degree: int | None = None) -> list[tuple[int, ...]]:
        return [(i,) for i in range(self.dim)]

    def generator_elements(self) -> list[NCPoly]:
        return [self.basis_element(i) for i in range(self.dim)]

    def character_value(self, values: Mapping[str, Scalar], p: NCPoly) -> Scalar:
        total = self.field.zero()
        for name, x in zip(self.gens.names, self.vector(p)):
            if x:
                total = total + x * values[name]
        return total

    def default_degree(self, *polys) -> int:
        return 1


# ---------------------------------------------------------------------------
# verifiers


def _check_shapes(a: FinHopf) -> None:
    if a.antipode_matrix.field != a.field:
        raise ShapeMismatch("antipode over a different field")


def verify_algebra(a: FinHopf) -> Verdict:
    """Associativity and two-sided unit, as exact tensor identities."""
    _check_shapes(a)
    n = a.dim
    basis = [[a.field.one() if i == j else a.field.zero() for j in range(n)] for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        left = a._vmul(a._vmul(basis[i], basis[j]), basis[k])
        right = a._vmul(basis[i], a._vmul(basis[j], basis[k]))
        if left != right:
            return Verdict.fail("verify_algebra", witness=("associativity", i, j, k))
    for i in range(n):
        if a._vmul(a.unit, basis[i]) != basis[i] or a._vmul(basis[i], a.unit) != basis[i]:
            return Verdict.fail("verify_algebra", witness=("unit", i))
    return Verdict.passed("verify_algebra")


def verify_coalgebra(a: FinHopf) -> Verdict:
    """Coassociativity and the counit property."""
    _check_shapes(a)
    n, c, z = a.dim, a.comult, a.field.zero()
    for i in range(n):
        for x, y, w in itertools.product(range(n), repeat=3):
            left = z
            right = z
            for j in range(n):
                if c[i][j][w] and c[j][x][y]:
                    left = left + c[i][j][w] * c[j][x][y]
                if c[i][x][j] and c[j][y][w]:
                    right = right + c[i][x][j] * c[j][y][w]
            if left != right:
                return Verdict.fail("verify_coalgebra", witness=("coassociativity", i, x, y, w))
        for k in range(n):
            left = z
            right = z
            for j in range(n):
                left = left + a.counit_vec[j] * c[i][j][k]
                right = right + a.counit_vec[j] * c[i][k][j]
            want = a.field.one() if i == k else z
            if left != want or right != want:
                return Verdict.fail("verify_coalgebra", witness=("counit", i, k))
    return Verdict.passed("verify_coalgebra")


def verify_bialgebra(a: FinHopf) -> Verdict:
    """Delta and epsilon are unital algebra maps."""
    _check_shapes(a)
    n = a.dim
    e = [a.basis_element(i) for i in range(n)]
    one = a.algebra_one()
    if a.tensor_vectors(a.comult_of(one)) != a.tensor_vectors(TensorPoly.pure(one, one)):
        return Verdict.fail("verify_bialgebra", witness=("comult unit",))
    if a.counit_of(one) != a.field.one():
        return Verdict.fail("verify_bialgebra", witness=("counit unit",))
    for i, j in itertools.product(range(n), repeat=2):
        lhs = a.tensor_vectors(a.comult_of(a.mul(e[i], e[j])))
        di, dj = a.comult_of(e[i]), a.comult_of(e[j])
        prod: dict = {}
        for (x1, x2), c1 in di.terms.items():
            for (y1, y2), c2 in dj.terms.items():
                l = a.vector(a.mul(NCPoly.monomial(a.gens, a.field, x1), NCPoly.monomial(a.gens, a.field, y1)))
                r = a.vector(a.mul(NCPoly.monomial(a.gens, a.field, x2), NCPoly.monomial(a.gens, a.field, y2)))
                for p, u in enumerate(l):
                    if u:
                        for q, v in enumerate(r):
                            if v:
                                prod[(p, q)] = prod.get((p, q), a.field.zero()) + c1 * c2 * u * v
        prod = {k: v for k, v in prod.items() if v}
        if lhs != prod:
            return Verdict.fail("verify_bialgebra", witness=("comult multiplicative", i, j))
        if a.counit_of(a.mul(e[i], e[j])) != a.counit_vec[i] * a.counit_vec[j]:
            return Verdict.fail("verify_bialgebra", witness=("counit multiplicative", i, j))
    return Verdict.passed("verify_bialgebra")


def verify_antipode(a: FinHopf) -> Verdict:
    """m(S (x) id)Delta = u epsilon = m(id (x) S)Delta on every basis vector."""
    _check_shapes(a)
    one = a.algebra_one()
    for i in range(a.dim):
        x = a.basis_element(i)
        want = one.scale(a.counit_vec[i])
        left = x.zero()
        right = x.zero()
        for (w1, w2), c in a.comult_of(x).terms.items():
            x1 = NCPoly.monomial(a.gens, a.field, w1)
            x2 = NCPoly.monomial(a.gens, a.field, w2)
            left = left + a.mul(a.antipode_of(x1), x2).scale(c)
            right = right + a.mul(x1, a.antipode_of(x2)).scale(c)
        if a.vector(left) != a.vector(want):
            return Verdict.fail("verify_antipode", witness=("S*id", i))
        if a.vector(right) != a.vector(want):
            return Verdict.fail("verify_antipode", witness=("id*S", i))
    return Verdict.passed("verify_antipode")


def verify_antipode_inverse(a: FinHopf) -> Verdict:
    if a.antipode_inverse_matrix is None:
        return Verdict.fail("verify_antipode_inverse", witness="antipode not invertible")
    prod = a.antipode_matrix @ a.antipode_inverse_matrix
    prod2 = a.antipode_inverse_matrix @ a.antipode_matrix
    if not (prod.is_identity() and prod2.is_identity()):
        return Verdict.fail("verify_antipode_inverse", witness="S S^-1 != id")
    return Verdict.passed("verify_antipode_inverse")


def verify_all(a: FinHopf) -> list[Verdict]:
    return [verify_algebra(a), verify_coalgebra(a), verify_bialgebra(a), verify_antipode(a),
            verify_antipode_inverse(a)]


def is_involutory(a: FinHopf) -> bool:
    return (a.antipode_matrix @ a.antipode_matrix).is_identity()


def dual_hopf(a: FinHopf) -> FinHopf:
    """The dual Hopf algebra on the dual basis; names toggle a ``^`` suffix."""
    n = a.dim
    mult = [[[a.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[a.mult[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    names = [nm[:-1] if nm.endswith("^") else nm + "^" for nm in a.gens.names]
    inv = a.antipode_inverse_matrix.transpose() if a.antipode_inverse_matrix is not None else None
    return FinHopf(names, mult, a.counit_vec, comult, a.unit, a.antipode_matrix.transpose(), inv,
                   field=a.field, name=f"dual({a.name})")


# ---------------------------------------------------------------------------
# builtins


def builtin_group_algebra(table: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                          field: FieldDesc = QQ, name: str = "") -> FinHopf:
    """Group algebra k[G] from a Cayley table ``table[i][j] = index of g_i g_j``.

    The basis is reordered so that the identity comes first.
    """
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise NotAGroup("table must be square and nonempty")
    if any(not isinstance(v, int) or not 0 <= v < n for r in table for v in r):
        raise NotAGroup("table is not closed")
    for i, j, k in itertools.product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAGroup(f"not associative at {(i, j, k)}")
    ident = next((e for e in range(n) if all(table[e][i] == i == table[i][e] for i in range(n))), None)
    if ident is None:
        raise NotAGroup("no identity element")
    for i in range(n):
        if not any(table[i][j] == ident for j in range(n)):
            raise NotAGroup(f"element {i} has no inverse")
    order = [ident] + [i for i in range(n) if i != ident]
    pos = {g: p for p, g in enumerate(order)}
    names = list(names) if names is not None else [f"g{i}" for i in range(n)]
    names = [names[g] for g in order]
    t = [[pos[table[order[i]][order[j]]] for j in range(n)] for i in range(n)]
    mult = [[[1 if t[i][j] == k else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[1 if (i == j == k) else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    inv = [next(j for j in range(n) if t[i][j] == 0) for i in range(n)]
    s = Matrix.from_rows(field, [[1 if inv[j] == i else 0 for j in range(n)] for i in range(n)])
    unit = [1] + [0] * (n - 1)
    return FinHopf(names, mult, unit, comult, [1] * n, s, field=field, name=name or f"k[G{n}]")


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def builtin_sweedler(field: FieldDesc = QQ) -> FinHopf:
    """Sweedler's 4-dimensional Hopf algebra on the basis (1, g, x, gx).

    g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g(x)g, Delta(x) = 1(x)x + x(x)g.
    """
    # basis element g^a x^b has index a + 2b
    def prod(i, j):
        a, b = i % 2, i // 2
        c, d = j % 2, j // 2
        if b + d > 1:
            return None, 0
        sign = -1 if (b and c) else 1
        return (a + c) % 2 + 2 * (b + d), sign

    n = 4
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            k, s = prod(i, j)
            if k is not None:
                mult[i][j][k] = s
    # coproducts of generators; products in A (x) A give the rest
    delta = {0: {(0, 0): 1}, 1: {(1, 1): 1}, 2: {(0, 2): 1, (2, 1): 1}}

    def tmul(s, t):
        out = {}
        for (a1, b1), c1 in s.items():
            for (a2, b2), c2 in t.items():
                ka, sa = prod(a1, a2)
                kb, sb = prod(b1, b2)
                if ka is None or kb is None:
                    continue
                out[(ka, kb)] = out.get((ka, kb), 0) + c1 * c2 * sa * sb
        return {k: v for k, v in out.items() if v}

    delta[3] = tmul(delta[1], delta[2])
    comult = [[[delta[i].get((j, k), 0) for k in range(n)] for j in range(n)] for i in range(n)]
    # S(1)=1, S(g)=g, S(x)=gx, S(gx)=-x
    s = Matrix.from_rows(field, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    return FinHopf(["1", "g", "x", "gx"], mult, [1, 0, 0, 0], comult, [1, 1, 0, 0], s,
                   field=field, name="sweedler")
