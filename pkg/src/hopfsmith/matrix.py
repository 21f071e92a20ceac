"""Immutable exact matrices over a scalar field.

Row-major; the tensor-factor index convention for an n*n space is
(i, j) |-> i*n + j.  Everything is fraction-exact: rank, nullspace,
inverse, and determinant go through ordinary Gauss elimination.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Sequence, Tuple

from .field import Field, FieldError


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence):
        if len(data) != rows * cols:
            raise ValueError("data length does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(data)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(field(x) for x in row)
        return cls(field, r, c, flat)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = [field.zero] * (n * n)
        for i in range(n):
            m[i * n + i] = field.one
        return cls(field, n, n, m)

    @classmethod
    def build(cls, field: Field, rows: int, cols: int,
              f: Callable[[int, int], object]) -> "Matrix":
        return cls(field, rows, cols,
                   [field(f(i, j)) for i in range(rows) for j in range(cols)])

    # -- access -----------------------------------------------------------

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> Tuple:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.show(x) for x in self.row(i))
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        F = self.field
        return Matrix(F, self.rows, self.cols,
                      [F.add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        F = self.field
        return Matrix(F, self.rows, self.cols,
                      [F.sub(a, b) for a, b in zip(self.data, other.data)])

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F(c)
        return Matrix(F, self.rows, self.cols, [F.mul(c, a) for a in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        F = self.field
        out = [F.zero] * (self.rows * other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.data[i * self.cols + k]
                if F.is_zero(a):
                    continue
                for j in range(other.cols):
                    b = other.data[k * other.cols + j]
                    if F.is_zero(b):
                        continue
                    out[i * other.cols + j] = F.add(
                        out[i * other.cols + j], F.mul(a, b))
        return Matrix(F, self.rows, other.cols, out)

    def kron(self, other: "Matrix") -> "Matrix":
        """Tensor product with index convention (i, j) |-> i*n + j."""
        F = self.field
        R, C = self.rows * other.rows, self.cols * other.cols
        out = [F.zero] * (R * C)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.data[i * self.cols + j]
                if F.is_zero(a):
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        out[(i * other.rows + k) * C + (j * other.cols + l)] = \
                            F.mul(a, other.data[k * other.cols + l])
        return Matrix(F, R, C, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [self.data[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return Matrix.from_rows(self.field, rows) if rows else \
            Matrix(self.field, 0, self.cols + other.cols, [])

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- elimination --------------------------------------------------------

    def rref(self) -> Tuple["Matrix", List[int]]:
        """Reduced row echelon form and the pivot column list."""
        F = self.field
        m = [list(self.row(i)) for i in range(self.rows)]
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pivot = None
            for i in range(r, self.rows):
                if not F.is_zero(m[i][c]):
                    pivot = i
                    break
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = F.inv(m[r][c])
            m[r] = [F.mul(inv, x) for x in m[r]]
            for i in range(self.rows):
                if i != r and not F.is_zero(m[i][c]):
                    f = m[i][c]
                    m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        flat = [x for row in m for x in row]
        return Matrix(F, self.rows, self.cols, flat), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List["Matrix"]:
        """Column-vector basis of the kernel."""
        F = self.field
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [F.zero] * self.cols
            v[fc] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(R[r, fc])
            basis.append(Matrix(F, self.cols, 1, v))
        return basis

    def solve(self, rhs: "Matrix") -> Optional["Matrix"]:
        """One solution of self @ x = rhs, or None."""
        if rhs.rows != self.rows:
            raise ValueError("rhs shape mismatch")
        F = self.field
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        n = self.cols
        for r in range(R.rows):
            if all(F.is_zero(R[r, c]) for c in range(n)) and \
               any(not F.is_zero(R[r, c]) for c in range(n, R.cols)):
                return None
        out = [[F.zero] * rhs.cols for _ in range(n)]
        for r, pc in enumerate(pivots):
            if pc >= n:
                return None
            for j in range(rhs.cols):
                out[pc][j] = R[r, n + j]
        return Matrix.from_rows(F, out) if out else Matrix(F, 0, rhs.cols, [])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise FieldError("only square matrices invert")
        sol = self.solve(Matrix.identity(self.field, self.rows))
        if sol is None or (self @ sol) != Matrix.identity(self.field, self.rows):
            raise FieldError("singular matrix")
        return sol

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def det(self):
        if self.rows != self.cols:
            raise FieldError("determinant of a non-square matrix")
        F = self.field
        m = [list(self.row(i)) for i in range(self.rows)]
        det = F.one
        for c in range(self.cols):
            pivot = None
            for i in range(c, self.rows):
                if not F.is_zero(m[i][c]):
                    pivot = i
                    break
            if pivot is None:
                return F.zero
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = F.neg(det)
            det = F.mul(det, m[c][c])
            inv = F.inv(m[c][c])
            for i in range(c + 1, self.rows):
                if not F.is_zero(m[i][c]):
                    f = F.mul(m[i][c], inv)
                    m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[c])]
        return det


def flip_matrix(field: Field, n: int, m: int) -> Matrix:
    """The swap X (x) Y -> Y (x) X on basis vectors."""
    out = Matrix.zero(field, n * m, n * m)
    data = list(out.data)
    for i in range(n):
        for j in range(m):
            data[(j * n + i) * n * m + (i * m + j)] = field.one
    return Matrix(field, n * m, n * m, data)


def koszul_matrix(field: Field, deg_a: Sequence[int], deg_b: Sequence[int]) -> Matrix:
    """The graded swap: a sign -1 whenever both basis vectors are odd."""
    n, m = len(deg_a), len(deg_b)
    out = [field.zero] * (n * m) ** 2
    for i in range(n):
        for j in range(m):
            sign = field.one if (deg_a[i] * deg_b[j]) % 2 == 0 else field.neg(field.one)
            out[(j * n + i) * n * m + (i * m + j)] = sign
    return Matrix(field, n * m, n * m, out)
