"""Exact dense linear algebra over prime fields F_p and the rationals.

Every number in the engine lives here: matrices are numpy arrays of
int64 residues (prime fields) or Fraction objects (rationals), and all
arithmetic is exact.  Row reduction uses deterministic pivoting (first
nonzero column, then first nonzero row), so every basis produced
downstream is reproducible bit for bit.

Matrices are immutable after construction and safe to share between
threads; all operations return fresh objects.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """An exact coefficient field: F_p for a prime p, or Q."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @staticmethod
    def prime(p: int) -> "Field":
        return Field(p)

    @staticmethod
    def rationals() -> "Field":
        return Field(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"F{self.p}" if self.p is not None else "Q"

    # scalar helpers -------------------------------------------------

    def elem(self, x) -> object:
        """Coerce an int, Fraction or 'a/b' string into a field element."""
        if self.p is not None:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
                return (x.numerator * pow(x.denominator, self.p - 2, self.p)) % self.p
            if isinstance(x, str):
                return self.elem(Fraction(x))
            return int(x) % self.p
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def inv(self, x):
        if self.p is not None:
            x = int(x) % self.p
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(x, self.p - 2, self.p)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / x

    # array helpers --------------------------------------------------

    def _normalize(self, arr: np.ndarray) -> np.ndarray:
        if self.p is not None:
            return np.asarray(arr, dtype=np.int64) % self.p
        out = np.empty(arr.shape, dtype=object)
        flat_in = arr.ravel()
        flat_out = out.ravel()
        for i, v in enumerate(flat_in):
            flat_out[i] = v if isinstance(v, Fraction) else Fraction(v)
        return out

    def _zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.p is not None:
            return np.zeros((rows, cols), dtype=np.int64)
        out = np.empty((rows, cols), dtype=object)
        out[...] = Fraction(0)
        return out


class Matrix:
    """An immutable exact matrix over a Field, stored densely row-major."""

    __slots__ = ("field", "rows", "cols", "arr", "_rref")

    def __init__(self, field: Field, arr):
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        self.field = field
        self.arr = field._normalize(arr)
        self.arr.flags.writeable = False
        self.rows, self.cols = self.arr.shape
        self._rref = None

    # construction ---------------------------------------------------

    @staticmethod
    def from_rows(field: Field, rows: list, cols: int | None = None) -> "Matrix":
        if not rows:
            return Matrix.zeros(field, 0, cols or 0)
        return Matrix(field, [[field.elem(x) for x in r] for r in rows])

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        return Matrix(field, field._zeros(rows, cols))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        m = field._zeros(n, n)
        for i in range(n):
            m[i, i] = field.elem(1)
        return Matrix(field, m)

    @staticmethod
    def column(field: Field, entries) -> "Matrix":
        return Matrix(field, np.asarray([[field.elem(x)] for x in entries])) \
            if len(entries) else Matrix.zeros(field, 0, 1)

    @staticmethod
    def basis_vector(field: Field, n: int, i: int) -> "Matrix":
        m = field._zeros(n, 1)
        m[i, 0] = field.elem(1)
        return Matrix(field, m)

    # elementary ops -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.arr.shape == other.arr.shape
            and bool(np.all(self.arr == other.arr))
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.arr.tobytes()
                     if self.field.is_prime_field else tuple(self.arr.ravel())))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, self.arr + other.arr)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, self.arr - other.arr)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, -self.arr)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, np.dot(self.arr, other.arr))

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, self.arr * self.field.elem(c))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.arr.T)

    def kron(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if 0 in (self.rows, self.cols, other.rows, other.cols):
            return Matrix.zeros(self.field, self.rows * other.rows, self.cols * other.cols)
        return Matrix(self.field, np.kron(self.arr, other.arr))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.field, np.hstack([self.arr, other.arr]))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Matrix(self.field, np.vstack([self.arr, other.arr]))

    @staticmethod
    def stack_columns(field: Field, mats: list["Matrix"], rows: int) -> "Matrix":
        """Concatenate matrices side by side (empty list allowed)."""
        mats = [m for m in mats if m.cols > 0]
        if not mats:
            return Matrix.zeros(field, rows, 0)
        out = mats[0]
        for m in mats[1:]:
            out = out.hstack(m)
        return out

    @staticmethod
    def block_diag(field: Field, mats: list["Matrix"]) -> "Matrix":
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = field._zeros(rows, cols)
        r = c = 0
        for m in mats:
            if m.rows and m.cols:
                out[r:r + m.rows, c:c + m.cols] = m.arr
            r += m.rows
            c += m.cols
        return Matrix(field, out)

    def submatrix(self, row_slice, col_slice) -> "Matrix":
        return Matrix(self.field, self.arr[row_slice, col_slice])

    def column_vec(self, j: int) -> "Matrix":
        return Matrix(self.field, self.arr[:, j:j + 1])

    def is_zero(self) -> bool:
        return self.rows == 0 or self.cols == 0 or not np.any(self.arr != self.field.elem(0))

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    def _check_same_shape(self, other: "Matrix"):
        if self.field != other.field or self.arr.shape != other.arr.shape:
            raise ValueError("shape or field mismatch")

    # elimination ----------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form with deterministic pivoting."""
        if self._rref is not None:
            return self._rref
        field = self.field
        R = np.array(self.arr, copy=True)
        pivots: list[int] = []
        r = 0
        zero = field.elem(0)
        for c in range(self.cols):
            if r == self.rows:
                break
            nz = np.nonzero(R[r:, c] != zero)[0] if field.is_prime_field else \
                np.nonzero([x != zero for x in R[r:, c]])[0]
            if len(nz) == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                R[[r, i]] = R[[i, r]]
            inv = field.inv(R[r, c])
            if field.is_prime_field:
                R[r] = (R[r] * inv) % field.p
                col = R[:, c].copy()
                col[r] = 0
                R -= np.outer(col, R[r])
                R %= field.p
            else:
                R[r] = R[r] * inv
                for i2 in range(self.rows):
                    if i2 != r and R[i2, c] != zero:
                        R[i2] = R[i2] - R[i2, c] * R[r]
            pivots.append(c)
            r += 1
        out = Matrix(field, R)
        result = (out, tuple(pivots))
        self._rref = result
        out._rref = result
        return result

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "Matrix":
        """Columns form the canonical basis of the right kernel."""
        R, pivots = self.rref()
        field = self.field
        free = [c for c in range(self.cols) if c not in set(pivots)]
        out = field._zeros(self.cols, len(free))
        one = field.elem(1)
        for j, fc in enumerate(free):
            out[fc, j] = one
            for i, pc in enumerate(pivots):
                out[pc, j] = -R.arr[i, fc] if not field.is_prime_field else (-R.arr[i, fc]) % field.p
        return Matrix(field, out)

    def image_basis(self) -> "Matrix":
        """Original columns at the pivot positions: a basis of the column space."""
        _, pivots = self.rref()
        return Matrix(self.field, self.arr[:, list(pivots)]) if pivots else \
            Matrix.zeros(self.field, self.rows, 0)

    def solve(self, b: "Matrix") -> "Matrix | None":
        """Solve self @ x = b exactly (b may have several columns).

        Returns None when inconsistent; free variables are set to zero
        under the reduced echelon pivoting order.
        """
        if b.rows != self.rows:
            raise ValueError(f"rhs has {b.rows} rows, expected {self.rows}")
        aug = self.hstack(b)
        R, pivots = aug.rref()
        field = self.field
        for p in pivots:
            if p >= self.cols:
                return None
        out = field._zeros(self.cols, b.cols)
        for i, pc in enumerate(pivots):
            out[pc, :] = R.arr[i, self.cols:]
        return Matrix(field, out)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        x = self.solve(Matrix.identity(self.field, self.rows))
        if x is None or (self * x) != Matrix.identity(self.field, self.rows):
            raise ValueError("matrix is singular")
        return x

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


def reduce(m: Matrix) -> tuple[int, list[Matrix], list[Matrix]]:
    """Rank, kernel basis and image basis of a matrix, all exact.

    Returns (rank, kernel_basis, image_basis) where the bases are lists
    of column vectors; rank + len(kernel_basis) == m.cols.
    """
    rank = m.rank()
    ker = m.nullspace()
    img = m.image_basis()
    return (
        rank,
        [ker.column_vec(j) for j in range(ker.cols)],
        [img.column_vec(j) for j in range(img.cols)],
    )


def solve(m: Matrix, b: Matrix) -> Matrix | None:
    """Deterministic exact solve of m @ x = b (single column)."""
    return m.solve(b)
