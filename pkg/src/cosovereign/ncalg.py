"""Free associative algebras, presentations and truncated ideal membership.

Membership of ``p`` in the two-sided ideal generated by the relations is
decided inside the finite-dimensional space of polynomials of degree
``<= D``: ``p`` is reported a member when it lies in the span of all
``x * r * y`` with ``deg(x r y) <= D``.  That answer is sound (a member at
some ``D`` is a member of the ideal) but not complete, so a negative
answer is only ever ``Inconclusive``.

Every presentation is graded by all integer weightings of the generators
that make its relations homogeneous.  The span above splits into graded
pieces, and each piece is echelonized separately and on demand.
"""
from __future__ import annotations

import enum
import heapq
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .exactmath import QQ, FieldDesc, FieldMismatch, Scalar, kernel_basis, scalar

Word = tuple[int, ...]


class GenSetMismatch(ValueError):
    pass


class MissingImage(KeyError):
    pass


class DegreeExceeded(ValueError):
    def __init__(self, message: str, needed: int | None = None):
        super().__init__(message)
        self.needed = needed


def word_key(w: Word) -> tuple[int, Word]:
    """Monomial order: degree, then lexicographic in generator index."""
    return (len(w), w)


def _desc_key(w: Word):
    return (-len(w), tuple(-i for i in w))


class GenSet:
    """Ordered tuple of distinct generator names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        for n in self.names:
            if not n or any(ch.isspace() for ch in n) or "*" in n:
                raise ValueError(f"bad generator name {n!r}")
        self._index = {n: i for i, n in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, names: Sequence[str]) -> Word:
        return tuple(self.index(n) for n in names)

    def word_names(self, w: Word) -> list[str]:
        return [self.names[i] for i in w]

    def __eq__(self, other):
        return isinstance(other, GenSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"GenSet({list(self.names)})"


def words_of_length(ngens: int, length: int) -> Iterator[Word]:
    return itertools.product(range(ngens), repeat=length)


def words_up_to(ngens: int, degree: int) -> Iterator[Word]:
    for d in range(degree + 1):
        yield from words_of_length(ngens, d)


class NCPoly:
    """Element of the free algebra: a map from words to nonzero scalars."""

    __slots__ = ("gens", "field", "terms")

    def __init__(self, gens: GenSet, field: FieldDesc, terms: Mapping[Word, Scalar] | None = None):
        self.gens = gens
        self.field = field
        self.terms: dict[Word, Scalar] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, gens, field, terms):
        p = cls.__new__(cls)
        p.gens, p.field, p.terms = gens, field, terms
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, gens: GenSet, field: FieldDesc, c=1) -> "NCPoly":
        return cls(gens, field, {(): scalar(field, c)})

    @classmethod
    def monomial(cls, gens: GenSet, field: FieldDesc, w: Word, c=1) -> "NCPoly":
        return cls(gens, field, {tuple(w): scalar(field, c)})

    def zero(self) -> "NCPoly":
        return NCPoly._raw(self.gens, self.field, {})

    def one(self) -> "NCPoly":
        return NCPoly.const(self.gens, self.field, 1)

    # -- inspection -------------------------------------------------------
    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, w: Word) -> Scalar:
        return self.terms.get(tuple(w), self.field.zero())

    def items(self) -> list[tuple[Word, Scalar]]:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def leading_word(self) -> Word | None:
        return max(self.terms, key=word_key) if self.terms else None

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "NCPoly"):
        if self.gens is not other.gens and self.gens != other.gens:
            raise GenSetMismatch(f"{self.gens} vs {other.gens}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return NCPoly.const(self.gens, self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            v = terms.get(w)
            if v is None:
                terms[w] = c
            else:
                v = v + c
                if v:
                    terms[w] = v
                else:
                    del terms[w]
        return NCPoly._raw(self.gens, self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw(self.gens, self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "NCPoly":
        c = scalar(self.field, c)
        if not c:
            return self.zero()
        return NCPoly._raw(self.gens, self.field, {w: c * a for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        terms: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = terms.get(w)
                terms[w] = c1 * c2 if v is None else v + c1 * c2
        return NCPoly._raw(self.gens, self.field, {w: c for w, c in terms.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = NCPoly.const(self.gens, self.field, other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.gens == other.gens and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def monic(self) -> "NCPoly":
        """Scaled so that the leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.terms[self.leading_word()].inverse())

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for w, c in self.items():
            mono = "*".join(self.gens.word_names(w))
            cs = str(c)
            neg = cs.startswith("-") and ("+" not in cs[1:] and "-" not in cs[1:])
            if neg:
                cs = cs[1:]
            if any(op in cs for op in "+-"):
                cs = f"({cs})"
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            out.append(("-" if neg else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


class FreeAlgebra:
    """Convenience factory for polynomials over a fixed generator set."""

    def __init__(self, names: Iterable[str] | GenSet, field: FieldDesc = QQ):
        self.gens = names if isinstance(names, GenSet) else GenSet(names)
        self.field = field

    def __getitem__(self, name: str) -> NCPoly:
        return NCPoly.monomial(self.gens, self.field, (self.gens.index(name),))

    def word(self, names: Sequence[str], c=1) -> NCPoly:
        return NCPoly.monomial(self.gens, self.field, self.gens.word(names), c)

    def const(self, c) -> NCPoly:
        return NCPoly.const(self.gens, self.field, c)

    @property
    def one(self) -> NCPoly:
        return NCPoly.const(self.gens, self.field, 1)

    @property
    def zero(self) -> NCPoly:
        return NCPoly(self.gens, self.field)

    def generators(self) -> list[NCPoly]:
        return [self[n] for n in self.gens]


class TensorPoly:
    """Element of F (x) F as a map from word pairs to nonzero scalars."""

    __slots__ = ("gens", "field", "terms")

    def __init__(self, gens: GenSet, field: FieldDesc, terms: Mapping[tuple[Word, Word], Scalar] | None = None):
        self.gens = gens
        self.field = field
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, gens, field, terms):
        t = cls.__new__(cls)
        t.gens, t.field, t.terms = gens, field, terms
        return t

    @classmethod
    def pure(cls, p: NCPoly, q: NCPoly) -> "TensorPoly":
        p._check(q)
        terms = {}
        for w1, c1 in p.terms.items():
            for w2, c2 in q.terms.items():
                terms[(w1, w2)] = c1 * c2
        return cls(p.gens, p.field, terms)

    @classmethod
    def one(cls, gens: GenSet, field: FieldDesc) -> "TensorPoly":
        return cls(gens, field, {((), ()): field.one()})

    def zero(self) -> "TensorPoly":
        return TensorPoly._raw(self.gens, self.field, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degrees(self) -> tuple[int, int]:
        return (max((len(a) for a, _ in self.terms), default=-1),
                max((len(b) for _, b in self.terms), default=-1))

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if not isinstance(other, TensorPoly):
            return NotImplemented
        if self.gens != other.gens:
            raise GenSetMismatch(f"{self.gens} vs {other.gens}")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = terms.get(k)
            if v is None:
                terms[k] = c
            else:
                v = v + c
                if v:
                    terms[k] = v
                else:
                    del terms[k]
        return TensorPoly._raw(self.gens, self.field, terms)

    def __neg__(self):
        return TensorPoly._raw(self.gens, self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorPoly":
        c = scalar(self.field, c)
        if not c:
            return self.zero()
        return TensorPoly._raw(self.gens, self.field, {k: c * a for k, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        if self.gens != other.gens:
            raise GenSetMismatch(f"{self.gens} vs {other.gens}")
        terms: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                v = terms.get(k)
                terms[k] = c1 * c2 if v is None else v + c1 * c2
        return TensorPoly._raw(self.gens, self.field, {k: c for k, c in terms.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def multiply(self) -> NCPoly:
        """The multiplication map m(a (x) b) = ab."""
        out: dict[Word, Scalar] = {}
        for (a, b), c in self.terms.items():
            w = a + b
            v = out.get(w)
            out[w] = c if v is None else v + c
        return NCPoly(self.gens, self.field, out)

    def legs(self) -> Iterator[tuple[NCPoly, NCPoly, Scalar]]:
        for (a, b), c in self.terms.items():
            yield (NCPoly._raw(self.gens, self.field, {a: self.field.one()}),
                   NCPoly._raw(self.gens, self.field, {b: self.field.one()}), c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda t: (word_key(t[0][0]), word_key(t[0][1]))):
            left = "*".join(self.gens.word_names(a)) or "1"
            right = "*".join(self.gens.word_names(b)) or "1"
            cs = str(c)
            if cs == "1":
                parts.append(f"{left}⊗{right}")
            elif cs == "-1":
                parts.append(f"-{left}⊗{right}")
            else:
                parts.append(f"({cs})*{left}⊗{right}")
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# homomorphisms


def extend_multiplicative(p: NCPoly, images: Sequence[Any], one: Any, zero: Any, *, reverse: bool = False):
    """Evaluate ``p`` under the (anti-)multiplicative extension of ``images``.

    ``images[i]`` is the value of generator ``i``; values only need ``*``,
    ``+`` and multiplication by a scalar, so this serves algebra maps,
    coproducts (TensorPoly values) and characters (Scalar values) alike.
    """
    result = zero
    cache: dict[Word, Any] = {(): one}
    for w, c in p.terms.items():
        letters = w[::-1] if reverse else w
        value = cache.get(letters)
        if value is None:
            k = len(letters) - 1
            while letters[:k] not in cache:
                k -= 1
            value = cache[letters[:k]]
            for j in range(k, len(letters)):
                img = images[letters[j]]
                if img is None:
                    raise MissingImage(p.gens.names[letters[j]])
                value = value * img
                cache[letters[:j + 1]] = value
        result = result + c * value
    return result


def _image_list(gens: GenSet, images: Mapping[str, Any]) -> list:
    return [images.get(n) for n in gens.names]


def apply_algebra_map(images: Mapping[str, NCPoly], p: NCPoly, target: NCPoly | None = None) -> NCPoly:
    """Multiplicative, linear extension of a generator assignment."""
    probe = target if target is not None else next(iter(images.values()))
    return extend_multiplicative(p, _image_list(p.gens, images), probe.one(), probe.zero())


def apply_anti_map(images: Mapping[str, NCPoly], p: NCPoly, target: NCPoly | None = None) -> NCPoly:
    """Like :func:`apply_algebra_map` but reverses every word first."""
    probe = target if target is not None else next(iter(images.values()))
    return extend_multiplicative(p, _image_list(p.gens, images), probe.one(), probe.zero(), reverse=True)


# ---------------------------------------------------------------------------
# verdicts


class Status(str, enum.Enum):
    MEMBER = "Member"
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    degree: int | None = None
    witness: Any = None
    name: str = ""
    parts: tuple["Verdict", ...] = ()

    @property
    def ok(self) -> bool:
        return self.status in (Status.MEMBER, Status.PASS)

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    @classmethod
    def passed(cls, name: str = "", degree: int | None = None, witness=None) -> "Verdict":
        return cls(Status.PASS, degree, witness, name)

    @classmethod
    def fail(cls, name: str = "", witness=None, degree: int | None = None) -> "Verdict":
        return cls(Status.FAIL, degree, witness, name)

    @classmethod
    def inconclusive(cls, name: str = "", degree: int | None = None, witness=None) -> "Verdict":
        return cls(Status.INCONCLUSIVE, degree, witness, name)

    @classmethod
    def combine(cls, name: str, verdicts: Iterable["Verdict"]) -> "Verdict":
        """Fail dominates Inconclusive, which dominates Pass."""
        parts = tuple(verdicts)
        degrees = [v.degree for v in parts if v.degree is not None]
        degree = max(degrees) if degrees else None
        for v in parts:
            if v.status is Status.FAIL:
                return cls(Status.FAIL, degree, v.witness if v.witness is not None else v.name, name, parts)
        for v in parts:
            if v.status is Status.INCONCLUSIVE:
                return cls(Status.INCONCLUSIVE, degree, v.witness if v.witness is not None else v.name, name, parts)
        return cls(Status.PASS, degree, None, name, parts)

    def renamed(self, name: str) -> "Verdict":
        return Verdict(self.status, self.degree, self.witness, name, self.parts)

    def __str__(self):
        d = f" (D={self.degree})" if self.degree is not None else ""
        return f"{self.name or 'check'}: {self.status.value}{d}"


# ---------------------------------------------------------------------------
# presentations and membership


class _Echelon:
    """Triangular basis of one graded piece of the truncated ideal.

    Pivot rows are keyed by their leading (largest) word and have leading
    coefficient one; tails are left unreduced.
    """

    def __init__(self):
        self.pivots: dict[Word, dict[Word, Scalar]] = {}

    def add(self, row: dict[Word, Scalar]) -> None:
        pivots = self.pivots
        while row:
            lead = max(row, key=word_key)
            piv = pivots.get(lead)
            if piv is None:
                inv = row[lead].inverse()
                pivots[lead] = {w: a * inv for w, a in row.items()}
                return
            c = row[lead]
            for w, a in piv.items():
                v = row.get(w)
                nv = -(c * a) if v is None else v - c * a
                if nv:
                    row[w] = nv
                else:
                    row.pop(w, None)

    def reduce(self, terms: Mapping[Word, Scalar]) -> dict[Word, Scalar]:
        """Canonical remainder: no word of the result is a pivot."""
        pivots = self.pivots
        work = dict(terms)
        heap = [(_desc_key(w), w) for w in work]
        heapq.heapify(heap)
        rem: dict[Word, Scalar] = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if c is None or not c:
                continue
            piv = pivots.get(w)
            if piv is None:
                rem[w] = c
                continue
            for w2, a in piv.items():
                if w2 == w:
                    continue
                v = work.get(w2)
                if v is None:
                    work[w2] = -(c * a)
                    heapq.heappush(heap, (_desc_key(w2), w2))
                else:
                    work[w2] = v - c * a
        return rem


class Presentation:
    """Generators plus relation polynomials (each meaning ``r = 0``)."""

    def __init__(self, gens: GenSet | Iterable[str], relations: Iterable[NCPoly], field: FieldDesc | None = None):
        self.gens = gens if isinstance(gens, GenSet) else GenSet(gens)
        rels = list(relations)
        if field is None:
            field = rels[0].field if rels else QQ
        self.field = field
        for r in rels:
            if r.gens != self.gens:
                raise GenSetMismatch("relation over a different generator set")
            if r.field != field:
                raise FieldMismatch("relation over a different field")
            if r.is_zero():
                raise ValueError("relations must be nonzero")
            if r.degree < 1:
                raise ValueError("relations must have degree >= 1")
        self.relations: tuple[NCPoly, ...] = tuple(rels)
        self._gen_grades: list[tuple[int, ...]] | None = None
        self._echelons: dict[tuple[int, tuple[int, ...]], _Echelon] = {}
        self._words_by_grade: dict[int, dict[tuple[int, ...], list[Word]]] = {}
        self._lock = threading.Lock()

    @property
    def max_relation_degree(self) -> int:
        return max((r.degree for r in self.relations), default=0)

    def algebra(self) -> FreeAlgebra:
        return FreeAlgebra(self.gens, self.field)

    def poly(self, terms: Mapping[Word, Scalar] | None = None) -> NCPoly:
        return NCPoly(self.gens, self.field, terms)

    # -- grading ----------------------------------------------------------
    @property
    def generator_grades(self) -> list[tuple[int, ...]]:
        """Integer weight vectors making every relation homogeneous."""
        if self._gen_grades is None:
            g = len(self.gens)
            rows = []
            for r in self.relations:
                counts = []
                for w in r.terms:
                    v = [0] * g
                    for i in w:
                        v[i] += 1
                    counts.append(v)
                for v in counts[1:]:
                    rows.append([QQ(a - b) for a, b in zip(v, counts[0])])
            basis = kernel_basis(rows, g, QQ)
            cols = []
            for vec in basis:
                fr = [x.to_fraction() for x in vec]
                m = lcm(*[f.denominator for f in fr]) if fr else 1
                cols.append([int(f * m) for f in fr])
            self._gen_grades = [tuple(c[i] for c in cols) for i in range(g)]
        return self._gen_grades

    def grade(self, w: Word) -> tuple[int, ...]:
        gg = self.generator_grades
        k = len(gg[0]) if gg else 0
        out = [0] * k
        for i in w:
            for j, x in enumerate(gg[i]):
                out[j] += x
        return tuple(out)

    def _words_graded(self, length: int) -> dict[tuple[int, ...], list[Word]]:
        got = self._words_by_grade.get(length)
        if got is None:
            got = {}
            for w in words_of_length(len(self.gens), length):
                got.setdefault(self.grade(w), []).append(w)
            self._words_by_grade[length] = got
        return got

    # -- truncated ideal --------------------------------------------------
    def _echelon(self, degree: int, grade: tuple[int, ...]) -> _Echelon:
        key = (degree, grade)
        ech = self._echelons.get(key)
        if ech is not None:
            return ech
        with self._lock:
            ech = self._echelons.get(key)
            if ech is not None:
                return ech
            ech = _Echelon()
            rows = []
            for r in self.relations:
                slack = degree - r.degree
                if slack < 0:
                    continue
                rg = self.grade(next(iter(r.terms)))
                for lx in range(slack + 1):
                    for gx, xs in self._words_graded(lx).items():
                        for ly in range(slack - lx + 1):
                            need = tuple(t - a - b for t, a, b in zip(grade, gx, rg))
                            ys = self._words_graded(ly).get(need)
                            if not ys:
                                continue
                            for x in xs:
                                for y in ys:
                                    rows.append((lx + ly, x, r, y))
            rows.sort(key=lambda t: t[0])
            for _, x, r, y in rows:
                ech.add({x + w + y: c for w, c in r.terms.items()})
            self._echelons[key] = ech
            return ech

    def reduce(self, p: NCPoly, degree: int) -> NCPoly:
        """Canonical representative of ``p`` modulo the degree-``degree`` span."""
        if p.gens != self.gens:
            raise GenSetMismatch("polynomial over a different generator set")
        if p.degree > degree:
            raise DegreeExceeded(f"degree {p.degree} exceeds bound {degree}", p.degree)
        pieces: dict[tuple[int, ...], dict[Word, Scalar]] = {}
        for w, c in p.terms.items():
            pieces.setdefault(self.grade(w), {})[w] = c
        out: dict[Word, Scalar] = {}
        for g, terms in pieces.items():
            out.update(self._echelon(degree, g).reduce(terms))
        return NCPoly(self.gens, self.field, out)

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.gens == other.gens
                and set(self.relations) == set(other.relations))

    def __hash__(self):
        return hash((self.gens, frozenset(self.relations)))


def ideal_membership(p: NCPoly, pres: Presentation, degree: int) -> Verdict:
    """``Member`` if ``p`` is in the degree-``degree`` span of ``x r y``."""
    if p.is_zero():
        return Verdict(Status.MEMBER, degree)
    rem = pres.reduce(p, degree)
    if rem.is_zero():
        return Verdict(Status.MEMBER, degree)
    return Verdict(Status.INCONCLUSIVE, degree, witness=rem)


def tensor_ideal_membership(t: TensorPoly, pres: Presentation, degree: int) -> Verdict:
    """Membership in ``I (x) F + F (x) I``, each leg truncated at ``degree``.

    Both legs are replaced by their canonical remainders; ``t`` is in the
    truncated subspace exactly when the resulting tensor vanishes.
    """
    if t.gens != pres.gens:
        raise GenSetMismatch("tensor over a different generator set")
    dl, dr = t.degrees
    if max(dl, dr) > degree:
        raise DegreeExceeded(f"tensor leg degree {max(dl, dr)} exceeds bound {degree}", max(dl, dr))
    if t.is_zero():
        return Verdict(Status.MEMBER, degree)
    one = pres.field.one()
    memo: dict[Word, dict[Word, Scalar]] = {}

    def nf(w: Word) -> dict[Word, Scalar]:
        got = memo.get(w)
        if got is None:
            got = pres.reduce(NCPoly._raw(pres.gens, pres.field, {w: one}), degree).terms
            memo[w] = got
        return got

    out: dict[tuple[Word, Word], Scalar] = {}
    for (a, b), c in t.terms.items():
        for a2, ca in nf(a).items():
            for b2, cb in nf(b).items():
                k = (a2, b2)
                v = out.get(k)
                out[k] = c * ca * cb if v is None else v + c * ca * cb
    rem = TensorPoly(pres.gens, pres.field, out)
    if rem.is_zero():
        return Verdict(Status.MEMBER, degree)
    return Verdict(Status.INCONCLUSIVE, degree, witness=rem)


# ---------------------------------------------------------------------------
# Groebner certificate


def _rewrite(rules: list[tuple[Word, dict[Word, Scalar]]], terms: Mapping[Word, Scalar]) -> dict[Word, Scalar]:
    """Full reduction by ``lead -> tail`` rules (lead largest in deg-lex order)."""
    work = {w: c for w, c in terms.items() if c}
    done: dict[Word, Scalar] = {}
    while work:
        w = max(work, key=word_key)
        c = work.pop(w)
        for lead, tail in rules:
            k = len(lead)
            pos = next((p for p in range(len(w) - k + 1) if w[p:p + k] == lead), None)
            if pos is not None:
                x, y = w[:pos], w[pos + k:]
                for t, a in tail.items():
                    v = x + t + y
                    nv = work.get(v, c.field.zero()) + c * a
                    if nv:
                        work[v] = nv
                    else:
                        work.pop(v, None)
                break
        else:
            done[w] = c
    return done


def groebner_certified(pres: Presentation) -> bool:
    """True when the relations already form a Groebner basis (deg-lex order).

    Every overlap and inclusion ambiguity of leading words must resolve.
    In that case a polynomial of degree <= D lies in the ideal exactly when
    it lies in the degree-D truncated span, so a nonzero remainder is a
    certificate of non-membership.
    """
    cached = getattr(pres, "_groebner", None)
    if cached is not None:
        return cached
    rules = []
    for r in pres.relations:
        m = r.monic()
        lead = m.leading_word()
        rules.append((lead, {w: -c for w, c in m.terms.items() if w != lead}))

    def resolve(word: Word, i: int, pos_i: int, j: int, pos_j: int) -> bool:
        def once(k, pos):
            lead, tail = rules[k]
            x, y = word[:pos], word[pos + len(lead):]
            return {x + t + y: c for t, c in tail.items()}
        a = _rewrite(rules, once(i, pos_i))
        b = _rewrite(rules, once(j, pos_j))
        keys = set(a) | set(b)
        return all(a.get(w, pres.field.zero()) == b.get(w, pres.field.zero()) for w in keys)

    ok = True
    for i, (a, _) in enumerate(rules):
        for j, (b, _) in enumerate(rules):
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k] and not resolve(a + b[k:], i, 0, j, len(a) - k):
                    ok = False
                    break
            if not ok:
                break
            if i != j and len(b) <= len(a):
                for p in range(len(a) - len(b) + 1):
                    if a[p:p + len(b)] == b and not resolve(a, i, 0, j, p):
                        ok = False
                        break
            if not ok:
                break
        if not ok:
            break
    pres._groebner = ok
    return ok
