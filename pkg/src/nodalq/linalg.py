"""Exact linear algebra over small prime fields and the rationals.

No floating point anywhere.  Prime-field elements are ints in
``range(p)``; rational entries are ``fractions.Fraction``.  Matrices are
immutable and carry their field; zero-by-n shapes are first-class
citizens because representation spaces are often zero-dimensional.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

SUPPORTED_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"characteristic must be one of {SUPPORTED_PRIMES}, got {self.p}")

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    @property
    def size(self):
        return self.p

    def elements(self):
        return tuple(range(self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalField:
    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    @property
    def size(self):
        return None  # infinite

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class Matrix:
    field: object
    nrows: int
    ncols: int
    rows: tuple  # tuple of row tuples; empty dims give empty structure

    @staticmethod
    def from_rows(field, rows: Sequence[Sequence]) -> "Matrix":
        coerced = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        nrows = len(coerced)
        ncols = len(coerced[0]) if nrows else 0
        for r in coerced:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return Matrix(field, nrows, ncols, coerced)

    @staticmethod
    def zeros(field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @staticmethod
    def identity(field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(
            field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        f = self.field
        return Matrix(
            f,
            self.nrows,
            self.ncols,
            tuple(
                tuple(f.add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        f = self.field
        return Matrix(
            f,
            self.nrows,
            self.ncols,
            tuple(
                tuple(f.sub(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        z = f.zero()
        out = []
        for i in range(self.nrows):
            ri = self.rows[i]
            row = []
            for j in range(other.ncols):
                s = z
                for k in range(self.ncols):
                    s = f.add(s, f.mul(ri[k], other.rows[k][j]))
                row.append(s)
            out.append(tuple(row))
        return Matrix(f, self.nrows, other.ncols, tuple(out))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(
            f, self.nrows, self.ncols, tuple(tuple(f.mul(c, x) for x in r) for r in self.rows)
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.ncols,
            self.nrows,
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
        )

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for r in self.rows for x in r)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix(
            self.field,
            self.nrows,
            self.ncols + other.ncols,
            tuple(r1 + r2 for r1, r2 in zip(self.rows, other.rows)),
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot column indices."""
        f = self.field
        z = f.zero()
        rows = [list(r) for r in self.rows]
        pivots = []
        pr = 0
        for pc in range(self.ncols):
            sel = None
            for r in range(pr, len(rows)):
                if rows[r][pc] != z:
                    sel = r
                    break
            if sel is None:
                continue
            rows[pr], rows[sel] = rows[sel], rows[pr]
            inv = f.inv(rows[pr][pc])
            rows[pr] = [f.mul(inv, x) for x in rows[pr]]
            for r in range(len(rows)):
                if r != pr and rows[r][pc] != z:
                    c = rows[r][pc]
                    rows[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[r], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == len(rows):
                break
        return Matrix(f, self.nrows, self.ncols, tuple(tuple(r) for r in rows)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> tuple[tuple, ...]:
        """Basis of the right kernel, one vector per free column.

        The basis is in echelon convention: vector ``t`` has a one in
        the ``t``-th free column and zeros in the other free columns.
        """
        f = self.field
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [f.zero()] * self.ncols
            v[fc] = f.one()
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.rows[r][fc])
            basis.append(tuple(v))
        return tuple(basis)

    def column_space_basis(self) -> "Matrix":
        """Matrix whose columns are the pivot columns (echelon convention)."""
        _, pivots = self.transpose().rref()  # row space of transpose = column space
        # pivot rows of the transpose rref give an echelon basis
        R, piv = self.transpose().rref()
        rows = [R.rows[i] for i in range(len(piv))]
        if not rows:
            return Matrix.zeros(self.field, self.nrows, 0)
        return Matrix(self.field, len(rows), self.nrows, tuple(rows)).transpose()

    def solve(self, b: "Matrix"):
        """One solution ``x`` of ``self @ x = b`` or None (column-wise)."""
        if b.nrows != self.nrows:
            raise ValueError("shape mismatch in solve")
        f = self.field
        aug = self.hstack(b)
        R, pivots = aug.rref()
        n = self.ncols
        # inconsistent if a pivot lands in the b-part
        for pc in pivots:
            if pc >= n:
                return None
        z = f.zero()
        cols = []
        for j in range(b.ncols):
            x = [z] * n
            for r, pc in enumerate(pivots):
                x[pc] = R.rows[r][n + j]
            cols.append(x)
        return Matrix(f, b.ncols, n, tuple(tuple(c) for c in cols)).transpose()

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        aug = self.hstack(Matrix.identity(self.field, self.nrows))
        R, pivots = aug.rref()
        if len(pivots) != self.nrows or any(p >= self.nrows for p in pivots):
            raise ValueError("matrix is singular")
        rows = tuple(r[self.nrows:] for r in R.rows)
        return Matrix(self.field, self.nrows, self.nrows, rows)


def block_diag(field, blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    z = field.zero()
    rows = []
    r0, c0 = 0, 0
    grid = [[z] * nc for _ in range(nr)]
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                grid[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(field, nr, nc, tuple(tuple(r) for r in grid))


def all_matrices(field, nrows: int, ncols: int):
    """All matrices of a shape over a finite field, lexicographically."""
    cells = nrows * ncols
    for flat in itertools.product(field.elements(), repeat=cells):
        rows = tuple(flat[i * ncols:(i + 1) * ncols] for i in range(nrows))
        yield Matrix(field, nrows, ncols, rows)
