"""Exact sparse linear algebra over the rationals.

Entries are :class:`fractions.Fraction`.  Matrices are immutable; every
operation returns a new matrix.  Storage is a tuple of row dictionaries
holding the nonzero entries only.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class NoSolution(ValueError):
    """Raised by :func:`solve` when the right-hand side is not in the image."""


class SingularMatrix(ValueError):
    pass


def scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Matrix:
    """Immutable matrix stored as a tuple of sparse rows ``{column: nonzero}``."""

    __slots__ = ("rows", "cols", "_rows", "__dict__")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._rows = tuple({} for _ in range(rows))
            return
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not match shape {rows}x{cols}")
        out = []
        for r in data:
            d = {}
            for j, x in enumerate(r):
                x = scalar(x)
                if x:
                    d[j] = x
            out.append(d)
        self._rows = tuple(out)

    @classmethod
    def _from_sparse_rows(cls, cols: int, srows: Sequence[dict]) -> "Matrix":
        # rows must already be free of explicit zeros
        m = cls.__new__(cls)
        m.rows, m.cols, m._rows = len(srows), cols, tuple(srows)
        return m

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        if not data:
            return cls(0, cols or 0)
        return cls(len(data), len(data[0]), data)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls(len(values), 1, [[v] for v in values])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return _identity(n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: dict) -> "Matrix":
        """Build from ``{(i, j): value}``; missing entries are zero."""
        out = [{} for _ in range(rows)]
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = scalar(v)
            if v:
                out[i][j] = v
            else:
                out[i].pop(j, None)
        return cls._from_sparse_rows(cols, out)

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= j < self.cols):
            raise IndexError(j)
        return self._rows[i].get(j, ZERO)

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def row(self, i: int) -> tuple:
        r = self._rows[i]
        return tuple(r.get(j, ZERO) for j in range(self.cols))

    def col(self, j: int) -> "Matrix":
        return Matrix._from_sparse_rows(1, [{0: r[j]} if j in r else {} for r in self._rows])

    def entries(self) -> list[Fraction]:
        """Row-major flat list of entries."""
        return [x for i in range(self.rows) for x in self.row(i)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def sparse_rows(self) -> tuple:
        return self._rows

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    @cached_property
    def digest(self) -> str:
        h = hashlib.sha256(f"{self.rows}x{self.cols}:".encode())
        for r in self._rows:
            h.update(",".join(f"{j}={r[j]}" for j in sorted(r)).encode())
            h.update(b";")
        return h.hexdigest()[:24]

    # -- algebra ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self.digest)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.tolist())
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return not any(self._rows)

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        out = []
        for r, s in zip(self._rows, other._rows):
            d = dict(r)
            for j, b in s.items():
                v = d.get(j, ZERO) + b if sign > 0 else d.get(j, ZERO) - b
                if v:
                    d[j] = v
                else:
                    d.pop(j, None)
            out.append(d)
        return Matrix._from_sparse_rows(self.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return self._combine(other, 1)

    def __neg__(self) -> "Matrix":
        return Matrix._from_sparse_rows(self.cols, [{j: -a for j, a in r.items()} for r in self._rows])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return self._combine(other, -1)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        if not c:
            return Matrix(self.rows, self.cols)
        return Matrix._from_sparse_rows(self.cols, [{j: c * a for j, a in r.items()} for r in self._rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        right = other._rows
        out = []
        for r in self._rows:
            acc: dict[int, Fraction] = {}
            for k, a in r.items():
                rk = right[k]
                if a == 1:
                    for j, b in rk.items():
                        acc[j] = acc[j] + b if j in acc else b
                else:
                    for j, b in rk.items():
                        acc[j] = acc[j] + a * b if j in acc else a * b
            out.append({j: v for j, v in acc.items() if v})
        return Matrix._from_sparse_rows(other.cols, out)

    @property
    def T(self) -> "Matrix":
        out = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._rows):
            for j, a in r.items():
                out[j][i] = a
        return Matrix._from_sparse_rows(self.rows, out)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row/column (i, k) sits at ``i * other.dim + k``."""
        rows, cols = self.rows * other.rows, self.cols * other.cols
        out = [dict() for _ in range(rows)]
        osr = other._rows
        for i, r in enumerate(self._rows):
            for j, a in r.items():
                base = j * other.cols
                for k, orow in enumerate(osr):
                    target = out[i * other.rows + k]
                    if a == 1:
                        for l, b in orow.items():
                            target[base + l] = b
                    else:
                        for l, b in orow.items():
                            target[base + l] = a * b
        return Matrix._from_sparse_rows(cols, out)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("hstack row mismatch")
        c = self.cols
        out = []
        for r, s in zip(self._rows, other._rows):
            d = dict(r)
            for j, v in s.items():
                d[c + j] = v
            out.append(d)
        return Matrix._from_sparse_rows(self.cols + other.cols, out)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("vstack column mismatch")
        return Matrix._from_sparse_rows(self.cols, self._rows + other._rows)

    def select_rows(self, idx: Iterable[int]) -> "Matrix":
        return Matrix._from_sparse_rows(self.cols, [self._rows[i] for i in idx])

    def select_cols(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        pos = {j: n for n, j in enumerate(idx)}
        if len(pos) == len(idx):
            return Matrix._from_sparse_rows(len(idx), [
                {pos[j]: v for j, v in r.items() if j in pos} for r in self._rows])
        return Matrix._from_sparse_rows(len(idx), [
            {n: r[j] for n, j in enumerate(idx) if j in r} for r in self._rows])


@lru_cache(maxsize=256)
def _identity(n: int) -> Matrix:
    return Matrix._from_sparse_rows(n, [{i: ONE} for i in range(n)])


def hstack_all(blocks: Sequence[Matrix], rows: int) -> Matrix:
    out = Matrix(rows, 0)
    for b in blocks:
        out = out.hstack(b)
    return out


def vstack_all(blocks: Sequence[Matrix], cols: int) -> Matrix:
    data: list = []
    for b in blocks:
        if b.cols != cols:
            raise ValueError("vstack column mismatch")
        data.extend(b.sparse_rows)
    return Matrix._from_sparse_rows(cols, data)


def _rref_rows(m: Matrix) -> tuple[list[dict], list[int]]:
    """Gauss-Jordan on sparse rows; returns the nonzero rref rows and pivots."""
    pending = [dict(r) for r in m.sparse_rows if r]
    done: list[dict] = []
    pivots: list[int] = []
    for c in range(m.cols):
        if not pending:
            break
        best = None
        for idx, r in enumerate(pending):
            if c in r and (best is None or len(r) < len(pending[best])):
                best = idx
        if best is None:
            continue
        prow = pending.pop(best)
        inv = ONE / prow[c]
        prow = {j: v * inv for j, v in prow.items()}
        items = list(prow.items())
        for group in (pending, done):
            for r in group:
                f = r.get(c)
                if f is None:
                    continue
                for j, v in items:
                    nv = r.get(j, ZERO) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
        pending = [r for r in pending if r]
        done.append(prow)
        pivots.append(c)
    return done, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the sorted pivot columns.

    The rref of a matrix is unique, so the choice of pivot row (sparsest
    candidate) only affects speed, never the result.
    """
    rows, pivots = _rref_rows(m)
    rows += [{} for _ in range(m.rows - len(rows))]
    return Matrix._from_sparse_rows(m.cols, rows), pivots


def rank(m: Matrix) -> int:
    return len(_rref_rows(m)[1])


def nullspace(m: Matrix) -> tuple[Matrix, list[int]]:
    """Kernel basis (as columns) together with the free columns.

    Basis vector ``k`` has a 1 at free column ``free[k]`` and a 0 at every
    other free column.
    """
    rows, pivots = _rref_rows(m)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    basis: list[dict] = [{} for _ in range(m.cols)]
    for k, f in enumerate(free):
        basis[f][k] = ONE
        for prow, p in zip(rows, pivots):
            v = prow.get(f)
            if v:
                basis[p][k] = -v
    return Matrix._from_sparse_rows(len(free), basis), free


def kernel_basis(m: Matrix) -> Matrix:
    return nullspace(m)[0]


def solve(m: Matrix, b: Matrix) -> Matrix:
    """Some ``x`` with ``m @ x == b``; free variables are set to zero."""
    if b.rows != m.rows or b.cols != 1:
        raise ValueError("right-hand side must be a column with m.rows entries")
    rows, pivots = _rref_rows(m.hstack(b))
    if pivots and pivots[-1] == m.cols:
        raise NoSolution("right-hand side is not in the image")
    x: list[dict] = [{} for _ in range(m.cols)]
    for prow, p in zip(rows, pivots):
        v = prow.get(m.cols)
        if v:
            x[p] = {0: v}
    return Matrix._from_sparse_rows(1, x)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise SingularMatrix(f"cannot invert non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    rows, pivots = _rref_rows(m.hstack(Matrix.identity(n)))
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    out = [{j - n: v for j, v in r.items() if j >= n} for r in rows]
    return Matrix._from_sparse_rows(n, out)
