"""Dense linear algebra over GF(p).

Matrices wrap a read-only ``int64`` numpy array of canonical residues.
Entries stay below ``p <= 2**16``, so products of two entries fit in int64
and every reduction can be done with a plain ``%``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import FieldElement, PrimeField


class Matrix:
    """Immutable ``rows x cols`` matrix over a prime field."""

    __slots__ = ("field", "_a")

    def __init__(self, field: PrimeField, entries, shape: tuple[int, int] | None = None):
        if isinstance(entries, Matrix):
            entries = entries._a
        if isinstance(entries, np.ndarray):
            a = entries.astype(np.int64, copy=True)
        else:
            rows = [[int(x) for x in row] for row in entries]
            if rows and len({len(r) for r in rows}) > 1:
                raise ValueError("ragged rows")
            a = np.array(rows, dtype=np.int64)
            if not rows:
                a = a.reshape(0, 0)
        if shape is not None:
            a = a.reshape(shape)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {a.shape}")
        a %= field.p
        a.setflags(write=False)
        self.field = field
        self._a = a

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_columns(cls, field: PrimeField, columns: Sequence, length: int | None = None) -> Matrix:
        cols = [np.asarray(c, dtype=np.int64).reshape(-1) for c in columns]
        if not cols:
            if length is None:
                raise ValueError("length is required for an empty column list")
            return cls(field, np.zeros((length, 0), dtype=np.int64))
        return cls(field, np.stack(cols, axis=1))

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self._a.T)

    def row(self, i: int) -> np.ndarray:
        return self._a[i]

    def column(self, j: int) -> np.ndarray:
        return self._a[:, j]

    def take_rows(self, idx) -> Matrix:
        return Matrix(self.field, self._a[list(idx), :].reshape(len(idx), self.cols))

    def take_cols(self, idx) -> Matrix:
        return Matrix(self.field, self._a[:, list(idx)].reshape(self.rows, len(idx)))

    def hstack(self, other: Matrix) -> Matrix:
        self._check_field(other)
        return Matrix(self.field, np.hstack([self._a, other._a]))

    def vstack(self, other: Matrix) -> Matrix:
        self._check_field(other)
        return Matrix(self.field, np.vstack([self._a, other._a]))

    def entry(self, i: int, j: int) -> FieldElement:
        return self.field(self._a[i, j])

    def is_zero(self) -> bool:
        return not self._a.any()

    def _check_field(self, other: Matrix):
        if other.field != self.field:
            raise ValueError(f"mixed-field operands: {self.field} and {other.field}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check_field(other)
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
            return Matrix(self.field, (self._a @ other._a) % self.field.p)
        v = np.asarray(other, dtype=np.int64)
        if v.shape[0] != self.cols:
            raise ValueError(f"shape mismatch: {self.shape} @ {v.shape}")
        return (self._a @ (v % self.field.p)) % self.field.p

    def __add__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        return Matrix(self.field, self._a + other._a)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        return Matrix(self.field, self._a - other._a)

    def __neg__(self) -> Matrix:
        return Matrix(self.field, -self._a)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.field.p, self.shape, self._a.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field}, {self._a.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def to_text(self) -> str:
        """Serialize as ``p rows cols`` followed by one line per row."""
        from .formats import dumps

        return dumps(self)

    @classmethod
    def from_text(cls, text: str) -> Matrix:
        from .formats import parse_matrix

        return parse_matrix(text)


# -- elimination core on raw arrays ------------------------------------------


def _rref_array(a: np.ndarray, p: int, stop_col: int | None = None):
    """Row-reduce a copy of ``a``; pivots are searched only before ``stop_col``."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    limit = ncols if stop_col is None else stop_col
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        if a[r, c] != 1:
            a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rank_array(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(_rref_array(a, p)[1])


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the (increasing) pivot columns."""
    a, pivots = _rref_array(M.array, M.field.p)
    return Matrix(M.field, a), tuple(pivots)


def rank(M: Matrix) -> int:
    return _rank_array(M.array, M.field.p)


def kernel_basis(M: Matrix) -> Matrix:
    """Basis of ``{x : M x = 0}`` as the columns of a ``cols x nullity`` matrix.

    One basis vector per free column, in increasing order of that column,
    with the free variable set to 1.
    """
    p = M.field.p
    a, pivots = _rref_array(M.array, p)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = np.zeros((M.cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = -a[i, f]
    return Matrix(M.field, basis)


def image_basis(M: Matrix) -> Matrix:
    """The columns of ``M`` at its pivot positions; they span the column space."""
    _, pivots = _rref_array(M.array, M.field.p)
    return M.take_cols(pivots)


def row_basis(M: Matrix) -> Matrix:
    """Nonzero rows of the RREF: the canonical basis of the row space."""
    a, pivots = _rref_array(M.array, M.field.p)
    return Matrix(M.field, a[: len(pivots)].reshape(len(pivots), M.cols))


def solve(A: Matrix, b) -> np.ndarray | None:
    """Some ``x`` with ``A x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    p = A.field.p
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.shape[0] != A.rows:
        raise ValueError(f"right-hand side has length {b.shape[0]}, expected {A.rows}")
    aug = np.hstack([A.array, (b % p).reshape(-1, 1)])
    a, pivots = _rref_array(aug, p, stop_col=A.cols)
    r = len(pivots)
    if a[r:, -1].any():
        return None
    x = np.zeros(A.cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = a[i, -1]
    return x


def solvable_columns(A: Matrix, B: Matrix) -> np.ndarray:
    """Boolean mask: which columns ``b`` of ``B`` admit a solution of ``A x = b``."""
    p = A.field.p
    aug = np.hstack([A.array, B.array])
    a, pivots = _rref_array(aug, p, stop_col=A.cols)
    return ~a[len(pivots):, A.cols:].any(axis=0)


def complete_basis(B: Matrix, ambient) -> Matrix:
    """Extend independent columns ``B`` to a generator matrix of ``ambient``.

    ``ambient`` is a :class:`~zkcss.code.LinearCode` or any matrix whose
    columns span it. The result keeps ``B`` verbatim as its last columns.
    The columns placed in front are the canonical (RREF) basis vectors of the
    ambient space whose pivot position is not a leading position of any
    vector in ``span(B)``, in increasing pivot order. Distinct leading
    positions make the combined set independent.
    """
    G = getattr(ambient, "generator", ambient)
    if G.field != B.field:
        raise ValueError(f"mixed-field operands: {B.field} and {G.field}")
    if B.rows != G.rows:
        raise ValueError(f"length mismatch: B has {B.rows} rows, ambient has length {G.rows}")
    p = B.field.p
    if _rank_array(B.array.T, p) != B.cols:
        raise ValueError("columns of B are not linearly independent")
    dim = _rank_array(G.array.T, p)
    if B.cols and _rank_array(np.hstack([G.array, B.array]).T, p) != dim:
        raise ValueError("span of B is not contained in the ambient code")
    canon, amb_pivots = _rref_array(G.array.T, p)
    b_pivots = set(_rref_array(B.array.T, p)[1]) if B.cols else set()
    front = [canon[i] for i, c in enumerate(amb_pivots) if c not in b_pivots]
    cols = front + [B.array[:, j] for j in range(B.cols)]
    return Matrix.from_columns(B.field, cols, length=B.rows)


def all_vectors(p: int, k: int) -> np.ndarray:
    """Every vector of GF(p)^k as rows, in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(p**k, dtype=np.int64)
    powers = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def vector_chunks(p: int, k: int, chunk: int = 1 << 15):
    """Yield ``(offset, block)`` pairs covering :func:`all_vectors` in order."""
    total = p**k
    powers = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        yield start, (idx[:, None] // powers[None, :]) % p
