"""Hopf structures on finitely presented algebras.

Delta, epsilon and S are given on generators and extended multiplicatively
(S anti-multiplicatively).  Identities are decided modulo the two-sided
ideal of relations with the truncated membership oracle, so a shortfall is
``Inconclusive``.  When the relation set is itself a Groebner basis the
oracle is complete and a nonzero remainder is reported as ``Fail``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .exactmath import FieldDesc, QQ, Scalar, scalar
from .ncalg import (
    DegreeExceeded,
    FreeAlgebra,
    MissingImage,
    NCPoly,
    Presentation,
    Status,
    TensorPoly,
    Verdict,
    apply_anti_map,
    extend_multiplicative,
    groebner_certified,
    ideal_membership,
    tensor_ideal_membership,
    words_up_to,
)


class MissingInverse(ValueError):
    pass


@dataclass(frozen=True)
class GroupLikeElement:
    element: NCPoly
    inverse: NCPoly


class PresentedHopf:
    exact = False

    def __init__(self, pres: Presentation, comult: Mapping[str, TensorPoly], counit: Mapping[str, object],
                 antipode: Mapping[str, NCPoly], antipode_inv: Mapping[str, NCPoly] | None = None,
                 name: str = "", notes: Iterable[str] = ()):
        self.pres = pres
        self.gens = pres.gens
        self.field = pres.field
        self.name = name
        self.notes = tuple(notes)
        for label, table in (("comult", comult), ("counit", counit), ("antipode", antipode)):
            missing = [g for g in self.gens.names if g not in table]
            if missing:
                raise MissingImage(f"{label} has no image for {missing[0]}")
        if antipode_inv is not None:
            missing = [g for g in self.gens.names if g not in antipode_inv]
            if missing:
                raise MissingImage(f"antipode inverse has no image for {missing[0]}")
        self.comult = {g: comult[g] for g in self.gens.names}
        self.counit = {g: scalar(self.field, counit[g]) for g in self.gens.names}
        self.antipode = {g: antipode[g] for g in self.gens.names}
        self.antipode_inv = None if antipode_inv is None else {g: antipode_inv[g] for g in self.gens.names}
        self._comult_list = [self.comult[g] for g in self.gens.names]
        self._counit_list = [self.counit[g] for g in self.gens.names]

    def __repr__(self):
        return f"PresentedHopf({self.name or 'anonymous'}, gens={len(self.gens)}, relations={len(self.pres.relations)})"

    def algebra(self) -> FreeAlgebra:
        return self.pres.algebra()

    def __getitem__(self, name: str) -> NCPoly:
        return NCPoly.monomial(self.gens, self.field, (self.gens.index(name),))

    # -- the common Hopf interface (shared with FinHopf) ---------------------
    def algebra_one(self) -> NCPoly:
        return NCPoly.const(self.gens, self.field, 1)

    def mul(self, p: NCPoly, q: NCPoly) -> NCPoly:
        return p * q

    def comult_of(self, p: NCPoly) -> TensorPoly:
        return extend_multiplicative(p, self._comult_list, TensorPoly.one(self.gens, self.field),
                                     TensorPoly(self.gens, self.field))

    def counit_of(self, p: NCPoly) -> Scalar:
        return extend_multiplicative(p, self._counit_list, self.field.one(), self.field.zero())

    def antipode_of(self, p: NCPoly) -> NCPoly:
        return apply_anti_map(self.antipode, p)

    def antipode_inv_of(self, p: NCPoly) -> NCPoly:
        if self.antipode_inv is None:
            raise MissingInverse("no antipode inverse supplied")
        return apply_anti_map(self.antipode_inv, p)

    @property
    def has_antipode_inverse(self) -> bool:
        return self.antipode_inv is not None

    def zero_check(self, p: NCPoly, degree: int | None = None) -> Verdict:
        if degree is None:
            degree = self.default_degree(p)
        v = ideal_membership(p, self.pres, degree)
        if v.status is Status.INCONCLUSIVE and groebner_certified(self.pres):
            return Verdict(Status.FAIL, degree, witness=v.witness)
        return v

    def tensor_zero_check(self, t: TensorPoly, degree: int | None = None) -> Verdict:
        if degree is None:
            degree = max(t.degrees) + 2
        v = tensor_ideal_membership(t, self.pres, degree)
        if v.status is Status.INCONCLUSIVE and groebner_certified(self.pres):
            return Verdict(Status.FAIL, degree, witness=v.witness)
        return v

    def spanning_words(self, degree: int) -> list[tuple[int, ...]]:
        return list(words_up_to(len(self.gens), degree))

    def generator_elements(self) -> list[NCPoly]:
        return [NCPoly.monomial(self.gens, self.field, (i,)) for i in range(len(self.gens))]

    def character_value(self, values: Mapping[str, Scalar], p: NCPoly) -> Scalar:
        try:
            images = [values[g] for g in self.gens.names]
        except KeyError as e:
            raise MissingImage(f"no value for generator {e.args[0]}") from None
        return extend_multiplicative(p, images, self.field.one(), self.field.zero())

    def default_degree(self, *polys: NCPoly) -> int:
        return max((p.degree for p in polys), default=0) + 2


# ---------------------------------------------------------------------------
# checks


def _need(degree: int, *polys: NCPoly) -> None:
    d = max((p.degree for p in polys), default=0)
    if d > degree:
        raise DegreeExceeded(f"degree {d} exceeds bound {degree}", d)


def check_comult_well_defined(a: PresentedHopf, degree: int) -> Verdict:
    parts = []
    for k, r in enumerate(a.pres.relations):
        t = a.comult_of(r)
        if t.is_zero():
            parts.append(Verdict(Status.MEMBER, degree, name=f"relation {k}"))
            continue
        if max(t.degrees) > degree:
            raise DegreeExceeded(f"Delta(relation {k}) exceeds bound {degree}", max(t.degrees))
        parts.append(a.tensor_zero_check(t, degree).renamed(f"relation {k}"))
    return Verdict.combine("comult_well_defined", parts)


def check_counit_well_defined(a: PresentedHopf, degree: int | None = None) -> Verdict:
    for k, r in enumerate(a.pres.relations):
        val = a.counit_of(r)
        if val:
            return Verdict.fail("counit_well_defined", witness=(k, str(r), str(val)))
    return Verdict.passed("counit_well_defined", degree)


def _anti_well_defined(a: PresentedHopf, images: Mapping[str, NCPoly], degree: int, name: str) -> Verdict:
    parts = []
    for k, r in enumerate(a.pres.relations):
        s = apply_anti_map(images, r)
        _need(degree, s)
        parts.append(a.zero_check(s, degree).renamed(f"relation {k}"))
    return Verdict.combine(name, parts)


def check_antipode_well_defined(a: PresentedHopf, degree: int) -> Verdict:
    return _anti_well_defined(a, a.antipode, degree, "antipode_well_defined")


def check_antipode_inv_well_defined(a: PresentedHopf, degree: int) -> Verdict:
    if a.antipode_inv is None:
        raise MissingInverse("no antipode inverse supplied")
    return _anti_well_defined(a, a.antipode_inv, degree, "antipode_inv_well_defined")


def check_antipode_axiom(a: PresentedHopf, degree: int) -> Verdict:
    """m(S (x) id)Delta(g) = eps(g)1 = m(id (x) S)Delta(g) for every generator g."""
    parts = []
    one = a.algebra_one()
    for name, g in zip(a.gens.names, a.generator_elements()):
        target = one.scale(a.counit[name])
        left = g.zero()
        right = g.zero()
        for x1, x2, c in a.comult_of(g).legs():
            left = left + (a.antipode_of(x1) * x2).scale(c)
            right = right + (x1 * a.antipode_of(x2)).scale(c)
        for side, val in (("S*id", left), ("id*S", right)):
            diff = val - target
            _need(degree, diff)
            parts.append(a.zero_check(diff, degree).renamed(f"{side}({name})"))
    return Verdict.combine("antipode_axiom", parts)


def check_antipode_inverse(a: PresentedHopf, degree: int) -> Verdict:
    if a.antipode_inv is None:
        raise MissingInverse("no antipode inverse supplied")
    parts = []
    for name, g in zip(a.gens.names, a.generator_elements()):
        for side, val in (("S(S^-1)", a.antipode_of(a.antipode_inv_of(g))),
                          ("S^-1(S)", a.antipode_inv_of(a.antipode_of(g)))):
            diff = val - g
            _need(degree, diff)
            parts.append(a.zero_check(diff, degree).renamed(f"{side}({name})"))
    return Verdict.combine("antipode_inverse", parts)


def check_group_like(a: PresentedHopf, g: GroupLikeElement, degree: int) -> Verdict:
    x, xi = g.element, g.inverse
    one = a.algebra_one()
    parts = []
    if a.counit_of(x) != a.field.one():
        parts.append(Verdict.fail("counit", witness=str(a.counit_of(x))))
    t = a.comult_of(x) - TensorPoly.pure(x, x)
    if not t.is_zero():
        if max(t.degrees) > degree:
            raise DegreeExceeded(f"Delta of candidate exceeds bound {degree}", max(t.degrees))
        parts.append(a.tensor_zero_check(t, degree).renamed("comult"))
    for side, val in (("g*g^-1", x * xi - one), ("g^-1*g", xi * x - one)):
        _need(degree, val)
        parts.append(a.zero_check(val, degree).renamed(side))
    return Verdict.combine("group_like", parts)


def check_sovereign_element(a: PresentedHopf, g: GroupLikeElement, degree: int) -> Verdict:
    """S^-1(x) = g S(x) g^-1 for every generator x."""
    if a.antipode_inv is None:
        raise MissingInverse("no antipode inverse supplied")
    parts = []
    for name, x in zip(a.gens.names, a.generator_elements()):
        diff = a.antipode_inv_of(x) - g.element * a.antipode_of(x) * g.inverse
        _need(degree, diff)
        parts.append(a.zero_check(diff, degree).renamed(name))
    return Verdict.combine("sovereign_element", parts)


def at_least(check, *args, degree: int) -> Verdict:
    """Run ``check`` at ``degree``, raising it to the smallest admissible bound if needed."""
    while True:
        try:
            return check(*args, degree)
        except DegreeExceeded as e:
            if e.needed is None or e.needed <= degree:
                raise
            degree = e.needed


def verify_presented(a: PresentedHopf, degree: int) -> list[Verdict]:
    """Well-definedness and antipode checks, each at ``degree`` or the least bound it needs."""
    checks = [check_comult_well_defined, check_counit_well_defined, check_antipode_well_defined]
    if a.antipode_inv is not None:
        checks.append(check_antipode_inv_well_defined)
    checks.append(check_antipode_axiom)
    if a.antipode_inv is not None:
        checks.append(check_antipode_inverse)
    return [at_least(c, a, degree=degree) for c in checks]


# ---------------------------------------------------------------------------
# builtins


def builtin_Hn(n: int, field: FieldDesc = QQ) -> PresentedHopf:
    """The algebra k<X_1..X_n, Phi, Phi^-1> / (Phi Phi^-1 = 1 = Phi^-1 Phi).

    Delta(X_i) = 1(x)X_i + X_i(x)Phi, Delta(Phi) = Phi(x)Phi.  The antipode
    axiom then forces S(X_i) = -X_i Phi^-1, so S^-1(X_i) = -Phi^-1 X_i and
    S^2(a) = Phi a Phi^-1.  The sovereign element is Phi^-1, stored as
    ``sovereign_element``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    names = [f"X{i}" for i in range(1, n + 1)] + ["Phi", "Phi_inv"]
    A = FreeAlgebra(names, field)
    one, phi, phinv = A.one, A["Phi"], A["Phi_inv"]
    pres = Presentation(A.gens, [phi * phinv - 1, phinv * phi - 1], field)
    comult = {"Phi": TensorPoly.pure(phi, phi), "Phi_inv": TensorPoly.pure(phinv, phinv)}
    counit = {"Phi": 1, "Phi_inv": 1}
    anti = {"Phi": phinv, "Phi_inv": phi}
    anti_inv = {"Phi": phinv, "Phi_inv": phi}
    for i in range(1, n + 1):
        x = A[f"X{i}"]
        comult[f"X{i}"] = TensorPoly.pure(one, x) + TensorPoly.pure(x, phi)
        counit[f"X{i}"] = 0
        anti[f"X{i}"] = -(x * phinv)
        anti_inv[f"X{i}"] = -(phinv * x)
    h = PresentedHopf(pres, comult, counit, anti, anti_inv, name=f"H_{n}",
                      notes=("S, S^-1 derived from the antipode axiom", "sovereign element Phi^-1"))
    h.sovereign_element = GroupLikeElement(phinv, phi)
    return h


def builtin_sweedler_presented(field: FieldDesc = QQ) -> PresentedHopf:
    """Sweedler's algebra as k<g, x> / (g^2 = 1, x^2 = 0, xg = -gx)."""
    A = FreeAlgebra(["g", "x"], field)
    one, g, x = A.one, A["g"], A["x"]
    pres = Presentation(A.gens, [g * g - 1, x * x, x * g + g * x], field)
    h = PresentedHopf(
        pres,
        {"g": TensorPoly.pure(g, g), "x": TensorPoly.pure(one, x) + TensorPoly.pure(x, g)},
        {"g": 1, "x": 0},
        {"g": g, "x": g * x},
        {"g": g, "x": -(g * x)},
        name="sweedler",
    )
    h.sovereign_element = GroupLikeElement(g, g)
    return h


def builtin_laurent(field: FieldDesc = QQ) -> PresentedHopf:
    """k[t, t^-1] with t group-like."""
    A = FreeAlgebra(["t", "t_inv"], field)
    t, ti = A["t"], A["t_inv"]
    pres = Presentation(A.gens, [t * ti - 1, ti * t - 1], field)
    s = {"t": ti, "t_inv": t}
    return PresentedHopf(pres, {"t": TensorPoly.pure(t, t), "t_inv": TensorPoly.pure(ti, ti)},
                         {"t": 1, "t_inv": 1}, s, dict(s), name="laurent")
