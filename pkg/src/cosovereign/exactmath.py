"""Exact scalars over Q and Q(q), dense matrices, and Gaussian elimination.

A :class:`Scalar` is a reduced fraction ``num/den`` of polynomials with
rational coefficients; the denominator is monic and coprime to the
numerator, so two scalars are equal exactly when their stored parts are.
For the field of rationals both parts are constants.  Polynomial
arithmetic is delegated to ``flint.fmpq_poly``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from flint import fmpq, fmpq_poly


class FieldMismatch(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class Singular(ValueError):
    """Raised when a matrix that must be invertible is not."""


class DimensionMismatch(ValueError):
    pass


class Inconsistent(ValueError):
    """Raised by :func:`solve_linear` when the system has no solution."""


class ScalarParseError(ValueError):
    pass


@dataclass(frozen=True)
class FieldDesc:
    """Either the rationals (``variable is None``) or Q(variable)."""

    variable: str | None = None

    def __post_init__(self):
        if self.variable is not None and not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", self.variable):
            raise ValueError(f"bad field variable name {self.variable!r}")

    @property
    def kind(self) -> str:
        return "rationals" if self.variable is None else "rational_functions"

    def __call__(self, value) -> "Scalar":
        return scalar(self, value)

    def zero(self) -> "Scalar":
        return Scalar(self, _ZERO, _ONE)

    def one(self) -> "Scalar":
        return Scalar(self, _ONE, _ONE)

    def gen(self) -> "Scalar":
        if self.variable is None:
            raise FieldMismatch("the rationals have no generator")
        return Scalar(self, fmpq_poly([0, 1]), _ONE)

    def __str__(self):
        return "QQ" if self.variable is None else f"QQ({self.variable})"


QQ = FieldDesc()


def rational_functions(variable: str = "q") -> FieldDesc:
    return FieldDesc(variable)


_ZERO = fmpq_poly(0)
_ONE = fmpq_poly(1)


class Scalar:
    """Immutable exact element of a :class:`FieldDesc`."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: FieldDesc, num: fmpq_poly, den: fmpq_poly):
        # callers guarantee canonical form; use Scalar.make otherwise
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def make(cls, field: FieldDesc, num: fmpq_poly, den: fmpq_poly) -> "Scalar":
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if field.variable is None and (num.degree() > 0 or den.degree() > 0):
            raise FieldMismatch("non-constant polynomial in the rationals")
        return cls(field, *_normalize(num, den))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        c = fmpq(self.num[0]) / fmpq(self.den[0])
        return Fraction(int(c.p), int(c.q))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return scalar(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.field, self.num + other.num, _ONE)
        return Scalar(self.field, *_normalize(self.num * other.den + other.num * self.den, self.den * other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.field, self.num * other.num, _ONE)
        return Scalar(self.field, *_normalize(self.num * other.num, self.den * other.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return Scalar(self.field, *_normalize(self.den, self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar(self.field, self.num ** k, self.den ** k)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = scalar(self.field, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, tuple(self.num.coeffs()), tuple(self.den.coeffs())))
        return self._hash

    def evaluate(self, point) -> Fraction:
        """Value at ``variable = point``; raises on a pole."""
        x = fmpq(Fraction(point).numerator, Fraction(point).denominator)
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"pole at {point}")
        v = self.num(x) / d
        return Fraction(int(v.p), int(v.q))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r}, {self.field})"


def _normalize(num: fmpq_poly, den: fmpq_poly) -> tuple[fmpq_poly, fmpq_poly]:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if den.degree() > 0:
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
    lc = den[den.degree()]
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def scalar(field: FieldDesc, value) -> Scalar:
    """Coerce ints, Fractions, strings or Scalars into ``field``."""
    if isinstance(value, Scalar):
        if value.field != field:
            raise FieldMismatch(f"{value.field} vs {field}")
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Scalar(field, fmpq_poly(value) if value else _ZERO, _ONE)
    if isinstance(value, Fraction):
        return Scalar(field, fmpq_poly([fmpq(value.numerator, value.denominator)]) if value else _ZERO, _ONE)
    if isinstance(value, str):
        return parse_scalar(field, value)
    raise TypeError(f"cannot make a scalar from {type(value).__name__}")


# ---------------------------------------------------------------------------
# text form: "3*q^2-1", "(q+1)/q", "-1/2"


def _int_parts(s: Scalar) -> tuple[list[int], list[int]]:
    coeffs = [fmpq(c) for c in s.num.coeffs()] + [fmpq(c) for c in s.den.coeffs()]
    m = lcm(*[int(c.q) for c in coeffs])
    num = [int(fmpq(c) * m) for c in s.num.coeffs()]
    den = [int(fmpq(c) * m) for c in s.den.coeffs()]
    from math import gcd

    g = 0
    for c in num + den:
        g = gcd(g, c)
    return [c // g for c in num], [c // g for c in den]


def _poly_str(coeffs: Sequence[int], var: str | None) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _needs_parens(coeffs: Sequence[int], as_denominator: bool) -> bool:
    nonzero = [k for k, c in enumerate(coeffs) if c]
    if len(nonzero) > 1:
        return True
    k = nonzero[0]
    return as_denominator and k > 0 and coeffs[k] != 1


def format_scalar(s: Scalar) -> str:
    """Canonical text form, integer coefficients, ``num/den`` when needed."""
    if s.is_zero():
        return "0"
    num, den = _int_parts(s)
    var = s.field.variable
    n_str = _poly_str(num, var)
    if len(den) == 1 and den[0] == 1:
        return n_str
    d_str = _poly_str(den, var)
    if _needs_parens(num, False):
        n_str = f"({n_str})"
    if _needs_parens(den, True):
        d_str = f"({d_str})"
    return f"{n_str}/{d_str}"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def parse_scalar(field: FieldDesc, text: str) -> Scalar:
    """Parse ``text`` such as ``"(q^2+1)/(2*q)"`` into ``field``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ScalarParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            if m.group(2) != field.variable:
                raise ScalarParseError(f"unknown symbol {m.group(2)!r} in {text!r} for {field}")
            tokens.append(("var", None))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op))
    if not tokens:
        raise ScalarParseError("empty scalar")
    parser = _Parser(field, tokens, text)
    value = parser.expr()
    if parser.i != len(tokens):
        raise ScalarParseError(f"trailing input in {text!r}")
    return value


class _Parser:
    def __init__(self, field, tokens, text):
        self.field, self.tokens, self.text, self.i = field, tokens, text, 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, op):
        if self.peek() == ("op", op):
            self.i += 1
            return True
        return False

    def expr(self):
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif self.take("/"):
                value = value / self.unary()
            else:
                return value

    def unary(self):
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.take("^"):
            neg = self.take("-")
            kind, val = self.peek()
            if kind != "int":
                raise ScalarParseError(f"integer exponent expected in {self.text!r}")
            self.i += 1
            return base ** (-val if neg else val)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.i += 1
            return scalar(self.field, val)
        if kind == "var":
            self.i += 1
            return self.field.gen()
        if self.take("("):
            value = self.expr()
            if not self.take(")"):
                raise ScalarParseError(f"missing ')' in {self.text!r}")
            return value
        raise ScalarParseError(f"unexpected token in {self.text!r}")


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Scalar, ...]
    field: FieldDesc = dc_field(compare=False)

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionMismatch("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch("entry count does not match shape")
        for e in self.entries:
            if e.field != self.field:
                raise FieldMismatch("matrix entries from different fields")

    @classmethod
    def from_rows(cls, field: FieldDesc, rows: Sequence[Sequence]) -> "Matrix":
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged or empty rows")
        entries = tuple(scalar(field, v) for r in rows for v in r)
        return cls(len(rows), len(rows[0]), entries, field)

    @classmethod
    def identity(cls, field: FieldDesc, n: int) -> "Matrix":
        return cls.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, field: FieldDesc, values: Sequence) -> "Matrix":
        n = len(values)
        return cls.from_rows(field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)), self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        total = self.field.zero()
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        out = []
        zero = self.field.zero()
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self[i, k]
                    if a:
                        b = other[k, j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out), self.field)

    def scale(self, c) -> "Matrix":
        c = scalar(self.field, c)
        return Matrix(self.rows, self.cols, tuple(c * e for e in self.entries), self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def is_identity(self) -> bool:
        return self.is_square and all(
            (self[i, j].is_one() if i == j else self[i, j].is_zero())
            for i in range(self.rows) for j in range(self.cols))

    def inverse(self) -> "Matrix":
        return mat_inverse(self)

    def rank(self) -> int:
        return len(_rref([list(r) for r in self.tolist()], self.cols)[1])

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)) + "]"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_transpose(m: Matrix) -> Matrix:
    return m.transpose()


def mat_trace(m: Matrix) -> Scalar:
    return m.trace()


def _rref(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """In-place reduced row echelon form; pivot = leftmost nonzero column,
    pivot row = first remaining row with a nonzero entry there."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y if y else x for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return rows, pivots


def mat_inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    zero, one = m.field.zero(), m.field.one()
    aug = [list(m.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
    aug, pivots = _rref(aug, n)
    if pivots != list(range(n)):
        raise Singular("matrix is not invertible")
    return Matrix(n, n, tuple(x for i in range(n) for x in aug[i][n:]), m.field)


@dataclass(frozen=True)
class SolutionSpace:
    """Affine solution set ``particular + span(kernel)``."""

    particular: tuple[Scalar, ...]
    kernel: tuple[tuple[Scalar, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def point(self, coefficients: Sequence) -> tuple[Scalar, ...]:
        out = list(self.particular)
        for c, k in zip(coefficients, self.kernel):
            if c:
                out = [x + y * c for x, y in zip(out, k)]
        return tuple(out)


def solve_linear(a: Matrix, b: Matrix | Sequence) -> SolutionSpace:
    """Solve ``a x = b`` exactly.

    Free variables are zero in the particular solution; the kernel has one
    basis vector per free column (1 at that column).
    """
    field = a.field
    if isinstance(b, Matrix):
        if b.cols != 1:
            raise DimensionMismatch("right-hand side must be a column")
        rhs = [b[i, 0] for i in range(b.rows)]
    else:
        rhs = [scalar(field, v) for v in b]
    if len(rhs) != a.rows:
        raise DimensionMismatch("right-hand side length differs from row count")
    return solve_rows([list(a.row(i)) for i in range(a.rows)], rhs, a.cols, field)


def solve_rows(rows: list[list[Scalar]], rhs: list[Scalar], ncols: int, field: FieldDesc) -> SolutionSpace:
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    aug, pivots = _rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        raise Inconsistent("linear system has no solution")
    zero, one = field.zero(), field.one()
    particular = [zero] * ncols
    for r, c in enumerate(pivots):
        particular[c] = aug[r][ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    kernel = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = -aug[r][f]
        kernel.append(tuple(v))
    return SolutionSpace(tuple(particular), tuple(kernel))


def kernel_basis(rows: list[list[Scalar]], ncols: int, field: FieldDesc) -> list[tuple[Scalar, ...]]:
    if not rows:
        return [tuple(field.one() if i == j else field.zero() for i in range(ncols)) for j in range(ncols)]
    return list(solve_rows(rows, [field.zero()] * len(rows), ncols, field).kernel)


def as_scalars(field: FieldDesc, values: Iterable) -> tuple[Scalar, ...]:
    return tuple(scalar(field, v) for v in values)
