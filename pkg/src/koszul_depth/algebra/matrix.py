"""Dense matrices of polynomials.

A matrix with ``nrows`` rows and ``ncols`` columns represents a map
``R^ncols -> R^nrows``; column ``j`` is the image of the ``j``-th basis vector.
"""

from __future__ import annotations

from .poly import Poly, PolynomialRing


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "rows", "_hash")

    def __init__(self, ring: PolynomialRing, nrows: int, ncols: int, rows=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            z = ring.zero
            rows = tuple((z,) * ncols for _ in range(nrows))
        else:
            rows = tuple(tuple(r) for r in rows)
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise ValueError("matrix shape does not match its entries")
        self.rows = rows
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls(ring, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ring, nrows, columns):
        columns = [tuple(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise ValueError("column length does not match row count")
        rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(ring, nrows, len(columns), rows)

    @classmethod
    def from_strings(cls, ring, rows):
        from .grammar import parse_poly
        rows = [[parse_poly(s, ring) if isinstance(s, str) else ring(s) for s in r] for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(ring, len(rows), ncols, rows)

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.ncols, self.nrows, [self.column(j) for j in range(self.ncols)])

    # -- algebra ----------------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        z = self.ring.zero
        ocols = other.columns()
        rows = []
        for r in self.rows:
            row = []
            for c in ocols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return Matrix(self.ring, self.nrows, other.ncols, rows)

    def apply(self, vec) -> tuple:
        z = self.ring.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(self.ring, self.nrows, self.ncols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(self.ring, self.nrows, self.ncols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.ring, self.nrows, self.ncols, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix(self.ring, self.nrows, self.ncols, [[a * c for a in r] for r in self.rows])

    def map_entries(self, fn) -> "Matrix":
        return Matrix(self.ring, self.nrows, self.ncols, [[fn(a) for a in r] for r in self.rows])

    def _check_same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("matrix shapes differ")

    def hstack(self, *others) -> "Matrix":
        rows = [list(r) for r in self.rows]
        ncols = self.ncols
        for o in others:
            if o.nrows != self.nrows:
                raise ValueError("hstack needs equal row counts")
            for r, s in zip(rows, o.rows):
                r.extend(s)
            ncols += o.ncols
        return Matrix(self.ring, self.nrows, ncols, rows)

    def vstack(self, *others) -> "Matrix":
        rows = list(self.rows)
        nrows = self.nrows
        for o in others:
            if o.ncols != self.ncols:
                raise ValueError("vstack needs equal column counts")
            rows.extend(o.rows)
            nrows += o.nrows
        return Matrix(self.ring, nrows, self.ncols, rows)

    def select_columns(self, idx) -> "Matrix":
        idx = list(idx)
        return Matrix(self.ring, self.nrows, len(idx), [[r[j] for j in idx] for r in self.rows])

    def select_rows(self, idx) -> "Matrix":
        idx = list(idx)
        return Matrix(self.ring, len(idx), self.ncols, [self.rows[i] for i in idx])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self.rows))
        return self._hash

    def to_strings(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.to_strings()})"


def block_diagonal(ring, blocks) -> Matrix:
    nrows = sum(b.nrows for b in blocks)
    ncols = sum(b.ncols for b in blocks)
    z = ring.zero
    rows = [[z] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return Matrix(ring, nrows, ncols, rows)


def kron_identity(ring, mat: Matrix, n: int, left: bool = True) -> Matrix:
    """``mat (x) I_n`` when ``left`` else ``I_n (x) mat``, with the usual index conventions."""
    z = ring.zero
    rows = [[z] * (mat.ncols * n) for _ in range(mat.nrows * n)]
    for i in range(mat.nrows):
        for j in range(mat.ncols):
            a = mat.rows[i][j]
            if not a:
                continue
            for k in range(n):
                if left:
                    rows[i * n + k][j * n + k] = a
                else:
                    rows[k * mat.nrows + i][k * mat.ncols + j] = a
    return Matrix(ring, mat.nrows * n, mat.ncols * n, rows)
