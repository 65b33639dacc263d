"""Characters, their convolution group, and the sovereign-character checks.

A character is stored by its values on generators (basis vectors for a
finite-dimensional algebra).  Everything here is written against the
shared Hopf interface, so the same code serves ``FinHopf`` and
``PresentedHopf``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .exactmath import Scalar, scalar
from .ncalg import MissingImage, NCPoly, Verdict


class MissingValue(KeyError):
    pass


class InverseCheckFailed(ValueError):
    pass


@dataclass(frozen=True)
class GenCharacter:
    values: Mapping[str, Scalar]
    label: str = field(default="", compare=False)

    def __getitem__(self, name: str) -> Scalar:
        return self.values[name]


def make_character(A, values: Mapping[str, object], label: str = "") -> GenCharacter:
    missing = [g for g in A.gens.names if g not in values]
    if missing:
        raise MissingValue(f"no value for {missing[0]}")
    return GenCharacter({g: scalar(A.field, values[g]) for g in A.gens.names}, label)


def counit_character(A) -> GenCharacter:
    if hasattr(A, "counit_vec"):
        return GenCharacter(dict(zip(A.gens.names, A.counit_vec)), "epsilon")
    return GenCharacter(dict(A.counit), "epsilon")


def evaluate(A, phi: GenCharacter, p: NCPoly) -> Scalar:
    try:
        return A.character_value(phi.values, p)
    except (KeyError, MissingImage) as e:
        raise MissingValue(str(e)) from None


def check_character(A, phi: GenCharacter) -> Verdict:
    """Exact check that ``phi`` is an algebra map."""
    missing = [g for g in A.gens.names if g not in phi.values]
    if missing:
        raise MissingValue(f"no value for {missing[0]}")
    if hasattr(A, "pres"):
        for k, r in enumerate(A.pres.relations):
            val = evaluate(A, phi, r)
            if val:
                return Verdict.fail("check_character", witness=(f"relation {k}", str(val)))
        return Verdict.passed("check_character")
    if evaluate(A, phi, A.algebra_one()) != A.field.one():
        return Verdict.fail("check_character", witness="value on unit")
    e = A.generator_elements()
    for i, x in enumerate(e):
        for j, y in enumerate(e):
            if evaluate(A, phi, A.mul(x, y)) != phi.values[A.gens.names[i]] * phi.values[A.gens.names[j]]:
                return Verdict.fail("check_character", witness=(A.gens.names[i], A.gens.names[j]))
    return Verdict.passed("check_character")


def convolve_characters(A, phi: GenCharacter, psi: GenCharacter, label: str = "") -> GenCharacter:
    out = {}
    for name, g in zip(A.gens.names, A.generator_elements()):
        total = A.field.zero()
        for x1, x2, c in A.comult_of(g).legs():
            total = total + c * evaluate(A, phi, x1) * evaluate(A, psi, x2)
        out[name] = total
    return GenCharacter(out, label or f"{phi.label}*{psi.label}")


def character_inverse(A, phi: GenCharacter) -> GenCharacter:
    """phi o S, checked to be a two-sided convolution inverse on generators."""
    inv = GenCharacter({name: evaluate(A, phi, A.antipode_of(g))
                        for name, g in zip(A.gens.names, A.generator_elements())},
                       f"{phi.label}^-1" if phi.label else "")
    eps = counit_character(A)
    if convolve_characters(A, phi, inv).values != eps.values or convolve_characters(A, inv, phi).values != eps.values:
        raise InverseCheckFailed("phi * (phi o S) differs from epsilon")
    return inv


def _triple(A, x: NCPoly):
    """Terms (c, x1, x2, x3) of (Delta (x) id)Delta(x)."""
    for a, b, c in A.comult_of(x).legs():
        for a1, a2, c2 in A.comult_of(a).legs():
            yield c * c2, a1, a2, b


def sandwich(A, left: GenCharacter, right: GenCharacter, x: NCPoly, middle) -> NCPoly:
    """sum left(x1) middle(x2) right(x3)."""
    out = x.zero()
    for c, x1, x2, x3 in _triple(A, x):
        coeff = c * evaluate(A, left, x1)
        if not coeff:
            continue
        coeff = coeff * evaluate(A, right, x3)
        if coeff:
            out = out + middle(x2).scale(coeff)
    return out


def _sovereign_like(A, phi: GenCharacter, degree, name: str, build) -> Verdict:
    char = check_character(A, phi)
    if char.failed:
        return Verdict.fail(name, witness=("not a character", char.witness))
    try:
        inv = character_inverse(A, phi)
    except InverseCheckFailed as e:
        return Verdict.fail(name, witness=str(e))
    parts = []
    for gname, g in zip(A.gens.names, A.generator_elements()):
        lhs, rhs = build(g, inv)
        diff = lhs - rhs
        d = degree if degree is not None else A.default_degree(diff)
        v = A.zero_check(diff, d)
        parts.append(Verdict(v.status, v.degree, v.witness, gname))
    return Verdict.combine(name, parts)


def verify_sovereign(A, phi: GenCharacter, degree: int | None = None) -> Verdict:
    """S^-1 = phi * S * phi^-1, checked generator by generator."""
    if not A.has_antipode_inverse:
        return Verdict.fail("verify_sovereign", witness="antipode not invertible")
    return _sovereign_like(A, phi, degree, "verify_sovereign",
                           lambda g, inv: (sandwich(A, phi, inv, g, A.antipode_of), A.antipode_inv_of(g)))


def verify_remark_38(A, phi: GenCharacter, degree: int | None = None) -> Verdict:
    """S^2 = phi^-1 * id * phi, checked generator by generator."""
    return _sovereign_like(A, phi, degree, "verify_remark_38",
                           lambda g, inv: (A.antipode_of(A.antipode_of(g)), sandwich(A, inv, phi, g, lambda y: y)))


def verify_sovereign_fd(A, phi: GenCharacter) -> Verdict:
    return verify_sovereign(A, phi)


def verify_sovereign_pres(A, phi: GenCharacter, degree: int | None = None) -> Verdict:
    return verify_sovereign(A, phi, degree)

