"""Exact rational matrices and Gaussian-elimination primitives.

All entries are ``fractions.Fraction``; nothing here ever rounds.  Matrices
are immutable so values can be shared freely between threads.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

Vector = tuple  # tuple of Fraction, used informally throughout


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vector(entries) -> Vector:
    return tuple(_frac(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    """Standard basis vector with a 1 in 0-based position i."""
    return tuple(Fraction(1 if t == i else 0) for t in range(n))


def add_vectors(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Vector) -> Vector:
    c = _frac(c)
    return tuple(c * a for a in v)


class Matrix:
    """Immutable rows x cols matrix of rationals, row-major storage."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_frac(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            return cls(0, 0, ())
        return cls.from_rows(zip(*cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, values) -> "Matrix":
        values = list(values)
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self._entries[j :: self.cols]

    def rows_list(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      (a + b for a, b in zip(self._entries, other._entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      (a - b for a, b in zip(self._entries, other._entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, (-a for a in self._entries))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            # accumulate rows, skipping zero entries: the complex matrices
            # this package produces are mostly sparse
            other_rows = [other.row(k) for k in range(other.rows)]
            zero = Fraction(0)
            out = []
            for i in range(self.rows):
                acc = [zero] * other.cols
                for k, a in enumerate(self.row(i)):
                    if a:
                        for j, b in enumerate(other_rows[k]):
                            if b:
                                acc[j] += a * b
                out.extend(acc)
            return Matrix(self.rows, other.cols, out)
        c = _frac(other)
        return Matrix(self.rows, self.cols, (c * a for a in self._entries))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power; use inverse() explicitly")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self._entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.rows)

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def rref(m: Matrix):
    """Reduced row echelon form.  Returns (R, pivot column list)."""
    rows = m.rows_list()
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix.from_rows(rows) if nrows else m, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def rank_and_kernel(m: Matrix):
    """Exact rank and a basis of the right kernel.

    The kernel basis is the standard one read off the reduced echelon form:
    one vector per free column, with a 1 in the free position.
    """
    R, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    kernel = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        kernel.append(tuple(v))
    return len(pivots), kernel


def det(m: Matrix) -> Fraction:
    """Determinant by rational Gaussian elimination."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = m.rows_list()
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        pv = rows[c][c]
        result *= pv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return sign * result


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises ValueError when singular."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, n):
            if aug[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            raise ValueError("matrix is singular")
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    return Matrix.from_rows([row[n:] for row in aug])


def solve(m: Matrix, b: Vector):
    """One solution of m x = b, or None when inconsistent."""
    aug = Matrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.rows)])
    R, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = R[r, m.cols]
    return tuple(x)


def submatrix(m: Matrix, row_idx, col_idx) -> Matrix:
    return Matrix(len(row_idx), len(col_idx),
                  (m[i, j] for i in row_idx for j in col_idx))


def exterior_power(m: Matrix, k: int) -> Matrix:
    """k-th exterior power on the lexicographic wedge basis.

    Entry at (J, I) is the minor det m[J, I]; for k = 0 this is the 1x1
    identity.
    """
    if not m.is_square():
        raise ValueError("exterior power of a non-square matrix")
    n = m.rows
    if k < 0 or k > n:
        return Matrix.zeros(0, 0)
    if k == 0:
        return Matrix.identity(1)
    subsets = list(itertools.combinations(range(n), k))
    entries = []
    for J in subsets:
        for I in subsets:
            entries.append(det(submatrix(m, J, I)))
    size = comb(n, k)
    return Matrix(size, size, entries)


class Echelon:
    """Growable row-echelon accumulator for span/membership questions."""

    def __init__(self, width: int):
        self.width = width
        self.rows = []  # reduced rows, each with recorded pivot column
        self.pivots = []

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return tuple(v)

    def add(self, v: Vector) -> bool:
        """Insert v; returns True when it enlarged the span."""
        v = self.reduce(v)
        for p, x in enumerate(v):
            if x != 0:
                v = tuple(e / x for e in v)
                # back-substitute into existing rows to stay fully reduced
                for idx, (row, q) in enumerate(zip(self.rows, self.pivots)):
                    if row[p] != 0:
                        f = row[p]
                        self.rows[idx] = tuple(a - f * b for a, b in zip(row, v))
                self.rows.append(v)
                self.pivots.append(p)
                order = sorted(range(len(self.pivots)), key=lambda t: self.pivots[t])
                self.rows = [self.rows[t] for t in order]
                self.pivots = [self.pivots[t] for t in order]
                return True
        return False

    def contains(self, v: Vector) -> bool:
        return all(x == 0 for x in self.reduce(v))

    @property
    def dim(self) -> int:
        return len(self.rows)
