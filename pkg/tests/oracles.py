"""Independent reference computations and random generators shared by the tests."""
from __future__ import annotations

import itertools
import random

from cosovereign.exactmath import QQ, Matrix, scalar
from cosovereign.forms import evaluate, make_character
from cosovereign.hopf_pres import builtin_laurent, builtin_sweedler_presented
from cosovereign.ncalg import NCPoly, words_up_to
from cosovereign.universal import build_HF


def random_poly(rng: random.Random, gens, field, max_deg: int, max_terms: int = 4) -> NCPoly:
    words = list(words_up_to(len(gens), max_deg))
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.choice(words)] = scalar(field, rng.randint(-3, 3))
    return NCPoly(gens, field, terms)


def random_member(rng: random.Random, pres, max_deg: int) -> tuple[NCPoly, int]:
    """A random sum of products x r y with r a relation.

    Returns the polynomial and the largest degree of a summand; the
    truncated membership test must find it at that degree.
    """
    one = NCPoly.const(pres.gens, pres.field, 1)
    total = NCPoly(pres.gens, pres.field)
    top = 0
    for _ in range(rng.randint(1, 3)):
        r = rng.choice(pres.relations)
        room = max(max_deg - r.degree, 0)
        left = rng.randint(0, room)
        x = random_poly(rng, pres.gens, pres.field, left, 2) or one
        y = random_poly(rng, pres.gens, pres.field, room - left, 2) or one
        top = max(top, x.degree + r.degree + y.degree)
        total = total + x * r * y
    return total, top


def member_presentations():
    """Presented Hopf algebras used for randomized membership tests."""
    return [builtin_sweedler_presented(), builtin_laurent(),
            build_HF(Matrix.from_rows(QQ, [[1, 0], [0, 2]])).hopf]


def random_character(A, rng: random.Random):
    """A character of one of the algebras from member_presentations.

    Sweedler: g -> +-1, x -> 0.  Laurent: t -> c, t_inv -> 1/c.  H(F) with
    diagonal F: u -> diag(a, b), v -> diag(1/a, 1/b).
    """
    names = set(A.gens.names)
    if names == {"g", "x"}:
        return make_character(A, {"g": rng.choice([1, -1]), "x": 0})
    if names == {"t", "t_inv"}:
        c = scalar(QQ, rng.choice([2, 3, -1, 5])) / rng.choice([1, 2, 7])
        return make_character(A, {"t": c, "t_inv": 1 / c})
    a = scalar(QQ, rng.choice([2, 3, -1, 5]))
    b = scalar(QQ, rng.choice([1, 4, -3]))
    vals = {n: 0 for n in names}
    vals.update({"u11": a, "u22": b, "v11": 1 / a, "v22": 1 / b})
    return make_character(A, vals)


def sweedler_characters_by_enumeration():
    """Characters of Sweedler's algebra found by scanning a grid of values."""
    A = builtin_sweedler_presented()
    grid = [scalar(QQ, n) / d for n in range(-3, 4) for d in (1, 2)]
    found = set()
    for gv, xv in itertools.product(grid, grid):
        phi = make_character(A, {"g": gv, "x": xv})
        if all(not evaluate(A, phi, r) for r in A.pres.relations):
            found.add((gv.to_fraction(), xv.to_fraction()))
    return found


def right_peel_sigma(A, table, u, w, cache=None):
    """sigma on words, peeling the last letter of the longer argument.

    Uses sigma(yx, z) = sum sigma(y, z1) sigma(x, z2) and
    sigma(x, zy) = sum sigma(x1, y) sigma(x2, z).
    """
    cache = {} if cache is None else cache
    key = (u, w)
    if key in cache:
        return cache[key]
    mono = lambda v: NCPoly.monomial(A.gens, A.field, v)
    if not u:
        val = A.counit_of(mono(w))
    elif not w:
        val = A.counit_of(mono(u))
    elif len(u) == 1 and len(w) == 1:
        val = table[(A.gens.names[u[0]], A.gens.names[w[0]])]
    elif len(u) >= len(w):
        val = A.field.zero()
        for (w1, w2), c in A.comult_of(mono(w)).terms.items():
            val = val + c * right_peel_sigma(A, table, u[:-1], w1, cache) * right_peel_sigma(A, table, u[-1:], w2, cache)
    else:
        val = A.field.zero()
        for (x1, x2), c in A.comult_of(mono(u)).terms.items():
            val = val + c * right_peel_sigma(A, table, x1, w[-1:], cache) * right_peel_sigma(A, table, x2, w[:-1], cache)
    cache[key] = val
    return val


def inversions(perm) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
