"""
Exact arithmetic and dense linear algebra over GF(2) and GF(3).

Matrices are held as small unsigned numpy arrays with entries in
``{0, ..., q-1}``.  Every public operation returns fresh values and never
mutates its inputs, so a ``CodeMatrix`` can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedMatrix, NotSystematic, RankDeficient, UnsupportedField

SUPPORTED_FIELDS = (2, 3)

# multiplicative inverses, indexed by q then value
_INVERSE = {2: (0, 1), 3: (0, 1, 2)}


def check_field(q: int) -> int:
    if q not in SUPPORTED_FIELDS:
        raise UnsupportedField(f"only GF(2) and GF(3) are supported, got q={q}")
    return q


@dataclass(frozen=True)
class FieldElement:
    """A scalar of GF(q), q in {2, 3}."""

    value: int
    q: int

    def __post_init__(self):
        check_field(self.q)
        if not 0 <= self.value < self.q:
            raise ValueError(f"{self.value} is not an element of GF({self.q})")

    @classmethod
    def elements(cls, q: int) -> list["FieldElement"]:
        return [cls(v, q) for v in range(check_field(q))]

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.q != self.q:
                raise ValueError("mixing elements of different fields")
            return other.value
        return int(other) % self.q

    def __add__(self, other):
        return FieldElement((self.value + self._other(other)) % self.q, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement((self.value - self._other(other)) % self.q, self.q)

    def __rsub__(self, other):
        return FieldElement((self._other(other) - self.value) % self.q, self.q)

    def __mul__(self, other):
        return FieldElement((self.value * self._other(other)) % self.q, self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement((-self.value) % self.q, self.q)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldElement(_INVERSE[self.q][self.value], self.q)

    def __truediv__(self, other):
        return self * FieldElement(self._other(other), self.q).inverse()

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0


class CodeMatrix:
    """Immutable rows x cols matrix over GF(q)."""

    __slots__ = ("q", "_a")

    def __init__(self, q: int, entries, cols: int | None = None):
        check_field(q)
        try:
            a = np.array(entries, dtype=np.int64)
        except (TypeError, ValueError):
            raise MalformedMatrix("rows must be equal-length integer sequences") from None
        if a.size == 0:
            rows = a.shape[0] if a.ndim == 2 else 0
            width = cols if cols is not None else (a.shape[1] if a.ndim == 2 else 0)
            a = np.zeros((rows, width), dtype=np.int64)
        if a.ndim != 2:
            raise MalformedMatrix(f"expected a 2-d array, got shape {a.shape}")
        if cols is not None and a.shape[1] != cols:
            raise MalformedMatrix(f"expected {cols} columns, got {a.shape[1]}")
        if a.size and (a.min() < 0 or a.max() >= q):
            raise MalformedMatrix(f"entries must lie in 0..{q - 1}")
        a = a.astype(np.uint8)
        a.setflags(write=False)
        self.q = q
        self._a = a

    @classmethod
    def _wrap(cls, q: int, a: np.ndarray) -> "CodeMatrix":
        # trusted constructor for arrays already reduced mod q
        m = cls.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.uint8)
        a.setflags(write=False)
        m.q = q
        m._a = a
        return m

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[str | Sequence[int]], cols: int | None = None):
        parsed = [[int(ch) for ch in r] if isinstance(r, str) else list(r) for r in rows]
        if not parsed:
            return cls(q, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(q, parsed, cols=cols)

    @classmethod
    def identity(cls, q: int, k: int) -> "CodeMatrix":
        return cls._wrap(check_field(q), np.eye(k, dtype=np.uint8))

    @classmethod
    def zeros(cls, q: int, rows: int, cols: int) -> "CodeMatrix":
        return cls._wrap(check_field(q), np.zeros((rows, cols), dtype=np.uint8))

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
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

    def __getitem__(self, idx):
        return self._a[idx]

    def column_subset(self, columns: Sequence[int]) -> "CodeMatrix":
        return CodeMatrix._wrap(self.q, self._a[:, list(columns)])

    def hstack(self, other: "CodeMatrix") -> "CodeMatrix":
        if other.q != self.q or other.rows != self.rows:
            raise MalformedMatrix("hstack needs equal q and row counts")
        return CodeMatrix._wrap(self.q, np.hstack([self._a, other._a]))

    def vstack(self, other: "CodeMatrix") -> "CodeMatrix":
        if other.q != self.q or other.cols != self.cols:
            raise MalformedMatrix("vstack needs equal q and column counts")
        return CodeMatrix._wrap(self.q, np.vstack([self._a, other._a]))

    def transpose(self) -> "CodeMatrix":
        return CodeMatrix._wrap(self.q, self._a.T)

    def matmul(self, other: "CodeMatrix") -> "CodeMatrix":
        prod = self._a.astype(np.int64) @ other._a.astype(np.int64)
        return CodeMatrix._wrap(self.q, prod % self.q)

    def to_strings(self) -> list[str]:
        return ["".join(str(int(x)) for x in row) for row in self._a]

    def is_zero(self) -> bool:
        return not self._a.any()

    def __eq__(self, other):
        if not isinstance(other, CodeMatrix):
            return NotImplemented
        return self.q == other.q and self._a.shape == other._a.shape and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.q, self._a.shape, self._a.tobytes()))

    def __repr__(self):
        body = ", ".join(self.to_strings())
        return f"CodeMatrix(q={self.q}, {self.rows}x{self.cols}, [{body}])"


# --- array-level kernels (no validation; callers pass reduced arrays) ---------


def rref_array(a: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of ``a`` over GF(q); returns (R, pivots)."""
    r = np.array(a, dtype=np.int16)
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        p = row + int(nz[0])
        if p != row:
            r[[row, p]] = r[[p, row]]
        if r[row, col] != 1:
            # only q = 3 reaches this branch; 2 is its own inverse
            r[row] = (r[row] * 2) % 3
        f = r[:, col].copy()
        f[row] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            r[hit] = (r[hit] - f[hit, None] * r[row]) % q
        pivots.append(col)
        row += 1
    return r.astype(np.uint8), pivots


def rank_array(a: np.ndarray, q: int) -> int:
    return len(rref_array(a, q)[1])


def nullspace_array(a: np.ndarray, q: int) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : a x^T = 0}``."""
    ncols = a.shape[1]
    r, pivots = rref_array(a, q)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for j, p in enumerate(pivots):
            basis[i, p] = (-int(r[j, f])) % q
    return basis


def row_space_key(a: np.ndarray, q: int) -> bytes:
    """Bytes identifying the row space of ``a`` (its nonzero RREF rows)."""
    r, pivots = rref_array(a, q)
    r = r[: len(pivots)]
    return bytes([r.shape[1]]) + r.tobytes()


def encode_vectors(vectors: np.ndarray, q: int) -> np.ndarray:
    """Mixed-radix index of each row, first coordinate most significant."""
    vectors = np.atleast_2d(vectors)
    width = vectors.shape[1]
    weights = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return vectors.astype(np.int64) @ weights


def decode_indices(indices: np.ndarray, width: int, q: int) -> np.ndarray:
    indices = np.asarray(indices, dtype=np.int64)
    out = np.zeros((indices.size, width), dtype=np.uint8)
    rem = indices.ravel().copy()
    for j in range(width - 1, -1, -1):
        out[:, j] = rem % q
        rem //= q
    return out


def all_vectors(width: int, q: int) -> np.ndarray:
    """Every vector of GF(q)^width, in index order."""
    return decode_indices(np.arange(q**width, dtype=np.int64), width, q)


# --- public matrix operations --------------------------------------------------


def rref(m: CodeMatrix) -> tuple[CodeMatrix, list[int], int]:
    r, pivots = rref_array(m.array, m.q)
    return CodeMatrix._wrap(m.q, r), pivots, len(pivots)


def rank(m: CodeMatrix) -> int:
    return rank_array(m.array, m.q)


def same_row_space(a: CodeMatrix, b: CodeMatrix) -> bool:
    if a.q != b.q or a.cols != b.cols:
        return False
    return row_space_key(a.array, a.q) == row_space_key(b.array, b.q)


def systematize(g: CodeMatrix) -> tuple[CodeMatrix, tuple[int, ...]]:
    """Bring a full-rank generator to the form [I_k | A].

    Returns the systematic matrix together with ``perm``: output column ``j``
    is input coordinate ``perm[j]``.  When the leading k x k block is already
    invertible the permutation is the identity.
    """
    r, pivots = rref_array(g.array, g.q)
    if len(pivots) < g.rows:
        raise RankDeficient(f"generator has rank {len(pivots)} < {g.rows} rows")
    pivot_set = set(pivots)
    perm = tuple(pivots) + tuple(c for c in range(g.cols) if c not in pivot_set)
    return CodeMatrix._wrap(g.q, r[:, list(perm)]), perm


def is_systematic(g: CodeMatrix) -> bool:
    k = g.rows
    return g.cols >= k and np.array_equal(g.array[:, :k], np.eye(k, dtype=np.uint8))


def parity_check(g_systematic: CodeMatrix) -> CodeMatrix:
    """H = [-A^T | I_{n-k}] for a generator [I_k | A]."""
    if not is_systematic(g_systematic):
        raise NotSystematic("leading k x k block is not the identity")
    q = g_systematic.q
    k, n = g_systematic.shape
    a = g_systematic.array[:, k:].astype(np.int16)
    h = np.hstack([(-a.T) % q, np.eye(n - k, dtype=np.int16)])
    return CodeMatrix._wrap(q, h.reshape(n - k, n))


def dual(g: CodeMatrix) -> CodeMatrix:
    """Generator of the dual code; a 0 x n matrix for the full space."""
    if rank(g) < g.rows:
        raise RankDeficient("dual needs a full-rank generator")
    return CodeMatrix._wrap(g.q, nullspace_array(g.array, g.q))
