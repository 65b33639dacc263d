"""The universal cosovereign Hopf algebras H(F).

Generators ``u_ij`` and ``v_ij`` (named ``u11``, ``v12``, ...) subject to

    u tv = tv u = 1,    v F tu F^-1 = F tu F^-1 v = 1,

with matrix coproducts on ``u`` and ``v``, ``S(u) = tv``,
``S(v) = F tu F^-1`` and the character ``Phi_F(u) = tF``, ``Phi_F(v) = F^-1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .corep import DimensionPair, MatrixCorep, dims, verify_corep
from .exactmath import Matrix, Singular, kernel_basis, mat_inverse
from .forms import GenCharacter, check_character, verify_remark_38, verify_sovereign
from .hopf_pres import PresentedHopf, verify_presented
from .ncalg import FreeAlgebra, NCPoly, Presentation, TensorPoly, Verdict, apply_algebra_map


class NoSolution(ValueError):
    pass


class NoInvertibleSolution(ValueError):
    def __init__(self, message, kernel=()):
        super().__init__(message)
        self.kernel = kernel


def _name(letter: str, i: int, j: int, n: int) -> str:
    return f"{letter}{i + 1}{j + 1}" if n < 10 else f"{letter}{i + 1}_{j + 1}"


@dataclass
class HFAlgebra:
    F: Matrix
    hopf: PresentedHopf
    char: GenCharacter
    corep_u: MatrixCorep
    corep_v: MatrixCorep

    @property
    def n(self) -> int:
        return self.F.rows


def hf_generators(n: int) -> list[str]:
    return [_name("u", i, j, n) for i in range(n) for j in range(n)] + \
           [_name("v", i, j, n) for i in range(n) for j in range(n)]


def _matrices(A: FreeAlgebra, n: int):
    u = [[A[_name("u", i, j, n)] for j in range(n)] for i in range(n)]
    v = [[A[_name("v", i, j, n)] for j in range(n)] for i in range(n)]
    return u, v


def _sum(terms, zero):
    out = zero
    for t in terms:
        out = out + t
    return out


def hf_relations(A: FreeAlgebra, F: Matrix) -> list[NCPoly]:
    n = F.rows
    Fi = mat_inverse(F)
    u, v = _matrices(A, n)
    z, one = A.zero, A.one
    R = range(n)
    rels = []
    for i, j in itertools.product(R, R):
        d = one if i == j else z
        rels.append(_sum((u[i][k] * v[j][k] for k in R), z) - d)
    for i, j in itertools.product(R, R):
        d = one if i == j else z
        rels.append(_sum((v[k][i] * u[k][j] for k in R), z) - d)
    for i, j in itertools.product(R, R):
        d = one if i == j else z
        rels.append(_sum(((v[i][k] * u[m][l]).scale(F[k, l] * Fi[m, j])
                          for k in R for l in R for m in R if F[k, l] and Fi[m, j]), z) - d)
    for i, j in itertools.product(R, R):
        d = one if i == j else z
        rels.append(_sum(((u[l][k] * v[m][j]).scale(F[i, k] * Fi[l, m])
                          for k in R for l in R for m in R if F[i, k] and Fi[l, m]), z) - d)
    return rels


def build_HF(F: Matrix) -> HFAlgebra:
    if F.rows != F.cols:
        raise Singular("F must be square")
    n = F.rows
    Fi = mat_inverse(F)
    A = FreeAlgebra(hf_generators(n), F.field)
    u, v = _matrices(A, n)
    z = A.zero
    R = range(n)
    pres = Presentation(A.gens, hf_relations(A, F), F.field)
    comult, counit, anti, anti_inv, phi = {}, {}, {}, {}, {}
    for i, j in itertools.product(R, R):
        un, vn = _name("u", i, j, n), _name("v", i, j, n)
        comult[un] = _sum((TensorPoly.pure(u[i][k], u[k][j]) for k in R), TensorPoly(A.gens, A.field))
        comult[vn] = _sum((TensorPoly.pure(v[i][k], v[k][j]) for k in R), TensorPoly(A.gens, A.field))
        counit[un] = counit[vn] = 1 if i == j else 0
        anti[un] = v[j][i]
        anti[vn] = _sum((u[l][k].scale(F[i, k] * Fi[l, j]) for k in R for l in R if F[i, k] and Fi[l, j]), z)
        anti_inv[un] = _sum((v[l][k].scale(F[k, i] * Fi[j, l]) for k in R for l in R if F[k, i] and Fi[j, l]), z)
        anti_inv[vn] = u[j][i]
        phi[un] = F[j, i]
        phi[vn] = Fi[i, j]
    hopf = PresentedHopf(pres, comult, counit, anti, anti_inv, name=f"H(F), n={n}")
    return HFAlgebra(F, hopf, GenCharacter(phi, "Phi_F"), MatrixCorep(hopf, u, "u"), MatrixCorep(hopf, v, "v"))


@dataclass
class HFReport:
    verdicts: list[Verdict]
    dims: DimensionPair
    trace_flag: bool
    expected_dims: DimensionPair = field(default=None)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)


def verify_HF(H: HFAlgebra, degree: int = 3) -> HFReport:
    """Hopf suite, character and sovereign checks, corep invariants and dimensions.

    ``trace_flag`` is raised when Tr(F) = 0 or Tr(F^-1) = 0, the situation in
    which H(F) is not cosemisimple.
    """
    A = H.hopf
    out = list(verify_presented(A, degree))
    out.append(check_character(A, H.char))
    out.append(verify_sovereign(A, H.char, max(degree, 3)))
    out.append(verify_remark_38(A, H.char, max(degree, 3)))
    out.append(verify_corep(H.corep_u, degree).renamed("corep_u"))
    out.append(verify_corep(H.corep_v, degree).renamed("corep_v"))
    d = dims(H.corep_u, H.char)
    tr, tri = H.F.trace(), mat_inverse(H.F).trace()
    want = DimensionPair(tr, tri)
    out.append(Verdict.passed("dims_u") if d == want
               else Verdict.fail("dims_u", witness=(str(d.left), str(d.right))))
    return HFReport(out, d, (not tr) or (not tri), want)


def matrix_sovereign_shortcut(H: HFAlgebra) -> dict[str, NCPoly]:
    """Phi_F * S * Phi_F^-1 on generators via matrix products.

    With matrix coproducts the convolution is the product tF . S(u) . tF^-1
    (and F^-1 . S(v) . F on v), computed without any coproduct expansion.
    """
    n, F = H.n, H.F
    Fi = mat_inverse(F)
    A = H.hopf
    z = A.algebra_one().zero()
    out = {}
    for i, j in itertools.product(range(n), repeat=2):
        su = [[A.antipode_of(H.corep_u[k, l]) for l in range(n)] for k in range(n)]
        sv = [[A.antipode_of(H.corep_v[k, l]) for l in range(n)] for k in range(n)]
        # Phi_F(u) = tF, Phi_F^-1(u) = Phi_F(S(u)) = Phi_F(tv) = t(F^-1)
        out[_name("u", i, j, n)] = _sum((su[k][l].scale(F[k, i] * Fi[j, l])
                                         for k in range(n) for l in range(n) if F[k, i] and Fi[j, l]), z)
        # Phi_F(v) = F^-1, Phi_F^-1(v) = Phi_F(F tu F^-1) = F
        out[_name("v", i, j, n)] = _sum((sv[k][l].scale(Fi[i, k] * F[l, j])
                                         for k in range(n) for l in range(n) if Fi[i, k] and F[l, j]), z)
    return out


# ---------------------------------------------------------------------------
# isomorphisms


def _map_relations(source: HFAlgebra, target: HFAlgebra, images: dict[str, NCPoly], degree: int, name: str) -> Verdict:
    parts = []
    for k, r in enumerate(source.hopf.pres.relations):
        img = apply_algebra_map(images, r, target.hopf.algebra_one())
        v = target.hopf.zero_check(img, max(degree, img.degree))
        parts.append(v.renamed(f"relation {k}"))
    return Verdict.combine(name, parts)


def conjugate_images(H: HFAlgebra, target: HFAlgebra, K: Matrix) -> dict[str, NCPoly]:
    """phi(u) = tK u tK^-1, phi(v) = K^-1 v K."""
    n = H.n
    Ki = mat_inverse(K)
    u, v = target.corep_u, target.corep_v
    z = target.hopf.algebra_one().zero()
    R = range(n)
    out = {}
    for i, j in itertools.product(R, R):
        out[_name("u", i, j, n)] = _sum((u[k, l].scale(K[k, i] * Ki[j, l]) for k in R for l in R
                                         if K[k, i] and Ki[j, l]), z)
        out[_name("v", i, j, n)] = _sum((v[k, l].scale(Ki[i, k] * K[l, j]) for k in R for l in R
                                         if Ki[i, k] and K[l, j]), z)
    return out


def transpose_inverse_images(H: HFAlgebra, target: HFAlgebra) -> dict[str, NCPoly]:
    """psi(u) = v, psi(v) = F u F^-1."""
    n, F = H.n, H.F
    Fi = mat_inverse(F)
    u, v = target.corep_u, target.corep_v
    z = target.hopf.algebra_one().zero()
    R = range(n)
    out = {}
    for i, j in itertools.product(R, R):
        out[_name("u", i, j, n)] = v[i, j]
        out[_name("v", i, j, n)] = _sum((u[k, l].scale(F[i, k] * Fi[l, j]) for k in R for l in R
                                         if F[i, k] and Fi[l, j]), z)
    return out


def iso_conjugate(H: HFAlgebra, K: Matrix, degree: int = 2) -> Verdict:
    """Homomorphisms H(F) -> H(KFK^-1) and back (conjugation by K^-1)."""
    Ki = mat_inverse(K)
    G = K @ H.F @ Ki
    target = build_HF(G)
    fwd = _map_relations(H, target, conjugate_images(H, target, K), degree, "forward")
    back = _map_relations(target, H, conjugate_images(target, H, Ki), degree, "backward")
    return Verdict.combine("iso_conjugate", [fwd, back])


def iso_transpose_inverse(H: HFAlgebra, degree: int = 2) -> Verdict:
    """Homomorphisms H(F) -> H(tF^-1) and back (the same construction for tF^-1)."""
    target = build_HF(mat_inverse(H.F).transpose())
    fwd = _map_relations(H, target, transpose_inverse_images(H, target), degree, "forward")
    back = _map_relations(target, H, transpose_inverse_images(target, H), degree, "backward")
    return Verdict.combine("iso_transpose_inverse", [fwd, back])


def check_psi_composition(H: HFAlgebra, degree: int = 2) -> Verdict:
    """psi_G o psi_F (G = tF^-1) equals conjugation by K = F^-1 on generators."""
    G = build_HF(mat_inverse(H.F).transpose())
    first = transpose_inverse_images(H, G)
    second = transpose_inverse_images(G, H)
    conj = conjugate_images(H, H, mat_inverse(H.F))
    parts = []
    for name in H.hopf.gens.names:
        img = apply_algebra_map(second, first[name], H.hopf.algebra_one())
        diff = img - conj[name]
        parts.append(H.hopf.zero_check(diff, max(degree, diff.degree)).renamed(name))
    return Verdict.combine("psi_composition", parts)


# ---------------------------------------------------------------------------
# universality


@dataclass
class FindFResult:
    F: Matrix
    kernel: list
    certificate: Verdict
    morphism: Verdict | None = None


def _coords(A, p: NCPoly, degree: int | None) -> dict:
    if hasattr(A, "vector"):
        return {i: c for i, c in enumerate(A.vector(p)) if c}
    return dict(A.pres.reduce(p, max(degree or 0, p.degree)).terms)


_SCAN = (0, 1, -1, 2, -2)


def find_F(V: MatrixCorep, degree: int | None = None, scan_limit: int = 20000, certify_morphism: bool = True) -> FindFResult:
    """Solve tS(a) F = F tS^-1(a) for an invertible scalar matrix F.

    Each side is read coefficient-wise: in coordinates for a finite-dimensional
    algebra, and on canonical remainders modulo the truncated ideal for a
    presented one.
    """
    A = V.algebra
    n = V.size
    field = A.field
    S = [[_coords(A, A.antipode_of(V[i, j]), degree) for j in range(n)] for i in range(n)]
    Si = [[_coords(A, A.antipode_inv_of(V[i, j]), degree) for j in range(n)] for i in range(n)]
    rows = []
    for i, j in itertools.product(range(n), repeat=2):
        eq: dict = {}
        for k in range(n):
            for w, c in S[k][i].items():
                eq.setdefault(w, {})
                eq[w][k * n + j] = eq[w].get(k * n + j, field.zero()) + c
            for w, c in Si[j][k].items():
                eq.setdefault(w, {})
                eq[w][i * n + k] = eq[w].get(i * n + k, field.zero()) - c
        for w in sorted(eq, key=repr):
            row = [field.zero()] * (n * n)
            for col, c in eq[w].items():
                row[col] = c
            if any(row):
                rows.append(row)
    kernel = kernel_basis(rows, n * n, field) if rows else [
        [field.one() if t == s else field.zero() for t in range(n * n)] for s in range(n * n)]
    if not kernel:
        raise NoSolution("only the zero matrix solves the system")
    found = None
    for count, combo in enumerate(itertools.product(_SCAN, repeat=len(kernel))):
        if count >= scan_limit:
            break
        if not any(combo):
            continue
        vec = [field.zero()] * (n * n)
        for c, b in zip(combo, kernel):
            if c:
                vec = [x + y * c for x, y in zip(vec, b)]
        M = Matrix.from_rows(field, [vec[r * n:(r + 1) * n] for r in range(n)])
        try:
            mat_inverse(M)
        except Singular:
            continue
        found = M
        break
    if found is None:
        raise NoInvertibleSolution("no invertible solution in the scanned range", kernel)
    cert = _certify_F(V, found, degree)
    morph = certify_pi(V, found, degree) if certify_morphism else None
    return FindFResult(found, kernel, cert, morph)


def _certify_F(V: MatrixCorep, F: Matrix, degree: int | None) -> Verdict:
    A = V.algebra
    n = V.size
    parts = []
    z = A.algebra_one().zero()
    for i, j in itertools.product(range(n), repeat=2):
        lhs = _sum((A.antipode_of(V[k, i]).scale(F[k, j]) for k in range(n) if F[k, j]), z)
        rhs = _sum((A.antipode_inv_of(V[j, k]).scale(F[i, k]) for k in range(n) if F[i, k]), z)
        diff = lhs - rhs
        if diff.is_zero():
            continue
        d = degree if degree is not None else A.default_degree(diff)
        parts.append(A.zero_check(diff, max(d, diff.degree)).renamed(f"({i},{j})"))
    return Verdict.combine("find_F certificate", parts)


def certify_pi(V: MatrixCorep, F: Matrix, degree: int | None = None) -> Verdict:
    """pi: H(F) -> A with pi(u) = a, pi(v) = tS(a) kills every relation of H(F)."""
    A = V.algebra
    n = V.size
    names = hf_generators(n)
    images = {}
    for i, j in itertools.product(range(n), repeat=2):
        images[_name("u", i, j, n)] = V[i, j]
        images[_name("v", i, j, n)] = A.antipode_of(V[j, i])
    H = FreeAlgebra(names, F.field)
    parts = []
    for k, r in enumerate(hf_relations(H, F)):
        img = _image(A, images, r)
        d = degree if degree is not None else A.default_degree(img)
        parts.append(A.zero_check(img, max(d, img.degree)).renamed(f"relation {k}"))
    return Verdict.combine("pi", parts)


def _image(A, images: dict[str, NCPoly], r: NCPoly) -> NCPoly:
    if hasattr(A, "vector"):
        # finite-dimensional target: multiply in the algebra, not the free algebra
        out = A.algebra_one().zero()
        for w, c in r.terms.items():
            acc = A.algebra_one()
            for g in r.gens.word_names(w):
                acc = A.mul(acc, images[g])
            out = out + acc.scale(c)
        return out
    return apply_algebra_map(images, r, A.algebra_one())
