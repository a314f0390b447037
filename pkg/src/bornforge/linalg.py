"""Exact dense linear algebra over the rationals.

Every entry is a :class:`fractions.Fraction`; nothing in here ever rounds.
Matrices are small (the largest ones are the Chevalley-Eilenberg maps of a
six-dimensional algebra), so plain Gaussian elimination on nested tuples is
all that is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class ContractError(ValueError):
    """Raised when an operation is called outside its preconditions."""


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/2"`` or ``"-1"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(to_rational(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ContractError("ragged matrix rows")
        else:
            width = cols or 0
        if cols is not None and rows and width != cols:
            raise ContractError("column count mismatch")
        self.rows = len(rows)
        self.cols = width
        self._data = rows
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._data = rows
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, z = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        z = Fraction(0)
        vals = [to_rational(e) for e in entries]
        return cls._raw(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def column(cls, entries: Sequence) -> "Matrix":
        return cls._raw(tuple((to_rational(e),) for e in entries), 1)

    @classmethod
    def from_columns(cls, columns: Sequence["Matrix"], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        n = columns[0].rows
        return cls._raw(tuple(tuple(c._data[i][0] for c in columns) for i in range(n)), len(columns))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        out = []
        for brow in blocks:
            height = brow[0].rows
            for i in range(height):
                row = []
                for b in brow:
                    row.extend(b._data[i])
                out.append(tuple(row))
        return cls._raw(tuple(out), len(out[0]) if out else 0)

    # -- access ---------------------------------------------------------
    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> "Matrix":
        return Matrix._raw(tuple((r[j],) for r in self._data), 1)

    def to_list(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def entries(self) -> tuple:
        return self._data

    def flat(self) -> list[Fraction]:
        """Column vector entries (or all entries, row-major)."""
        return [x for r in self._data for x in r]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> "Matrix":
        if not self.rows:
            return Matrix.zeros(self.cols, 0)
        return Matrix._raw(tuple(zip(*self._data)), self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(self._data[i][j] for j in cols) for i in rows), len(cols))

    # -- arithmetic -----------------------------------------------------
    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ContractError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s))
                                 for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> "Matrix":
        c = to_rational(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ContractError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            out.append(tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols))
        return Matrix._raw(tuple(out), other.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._data)
        return f"Matrix[{body}]"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_antisymmetric(self) -> bool:
        return self.is_square() and self == -self.T

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    # -- elimination-based queries --------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns."""
        m = [list(r) for r in self._data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            p = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            piv = m[r][c]
            if piv != 1:
                m[r] = [x / piv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix._raw(tuple(tuple(x) for x in m), self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ContractError("determinant of a non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            piv = m[c][c]
            det *= piv
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / piv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ContractError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix.block([[self, Matrix.identity(n)]])
        red, piv = aug.rref()
        if piv[:n] != list(range(n)):
            raise ContractError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))


def kernel(a: Matrix) -> list[Matrix]:
    """Exact basis of the null space, one column vector per free variable."""
    red, pivots = a.rref()
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        basis.append(Matrix.column(v))
    return basis


def solve_linear(a: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution of ``a @ x == b`` (free variables zero) or None.

    Use :func:`kernel` for the homogeneous part when the system is
    underdetermined.
    """
    if a.rows != b.rows:
        raise ContractError(f"solve_linear: {a.rows} equations but right side has {b.rows} rows")
    red, pivots = Matrix.block([[a, b]]).rref()
    n = a.cols
    if any(p >= n for p in pivots):
        return None
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for r, p in enumerate(pivots):
        for k in range(b.cols):
            x[p][k] = red[r, n + k]
    return Matrix(x, cols=b.cols)


def column_space(vectors: Sequence[Matrix], dim: int) -> list[Matrix]:
    """Linearly independent subset spanning the same space (as columns)."""
    if not vectors:
        return []
    m = Matrix.from_columns(list(vectors))
    _, pivots = m.rref()
    return [vectors[p] for p in pivots]


def span_rank(vectors: Sequence[Matrix]) -> int:
    if not vectors:
        return 0
    return Matrix.from_columns(list(vectors)).rank()


def in_span(v: Matrix, vectors: Sequence[Matrix]) -> bool:
    if v.is_zero():
        return True
    return span_rank(list(vectors) + [v]) == span_rank(vectors)


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int
    zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.positive, self.negative, self.zero

    @property
    def is_neutral(self) -> bool:
        return self.zero == 0 and self.positive == self.negative


def congruence_diagonalize(s: Matrix) -> tuple[list[Fraction], Matrix]:
    """Return ``(d, P)`` with ``P.T @ s @ P == diag(d)`` and P invertible.

    Symmetric Gaussian elimination; when every remaining diagonal entry is
    zero a pair (i, j) with s[i, j] != 0 is mixed first.
    """
    if not s.is_symmetric():
        raise ContractError("congruence reduction needs a symmetric matrix")
    n = s.rows
    m = [list(r) for r in s.entries()]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_col(dst, src, f):
        # column op on m and P, then matching row op keeps m congruent
        for i in range(n):
            m[i][dst] += f * m[i][src]
            p[i][dst] += f * p[i][src]
        for j in range(n):
            m[dst][j] += f * m[src][j]

    def swap(a, b):
        for i in range(n):
            m[i][a], m[i][b] = m[i][b], m[i][a]
            p[i][a], p[i][b] = p[i][b], p[i][a]
        m[a], m[b] = m[b], m[a]

    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            add_col(i, j, Fraction(1))
            piv = i
        if piv != k:
            swap(piv, k)
        for i in range(k + 1, n):
            if m[k][i] != 0:
                add_col(i, k, -m[k][i] / m[k][k])
    d = [m[i][i] for i in range(n)]
    return d, Matrix(p)


def signature_of_symmetric(s: Matrix) -> Signature:
    """Sylvester signature by exact congruence reduction."""
    d, _ = congruence_diagonalize(s)
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return Signature(pos, neg, len(d) - pos - neg)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in r] for r in m.entries()]


def matrix_from_json(rows: Sequence[Sequence]) -> Matrix:
    return Matrix(rows)
