"""
Linear codes over GF(2)/GF(3) and their combinatorial profile.

A ``LinearCode`` is a value: two instances compare equal when they span the
same subspace, whatever generator matrix they were built from.  Codeword
enumeration is guarded at ``q**k <= 2**24``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import ceil, comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DegenerateResidual,
    DimensionDrop,
    EmptyCode,
    MalformedMatrix,
    NotACodeword,
    PreconditionViolated,
    RankDeficient,
    TooLarge,
)
from .gf import CodeMatrix, check_field, nullspace_array, rref_array

MAX_ENUMERATION = 2**24
_BLOCK_ROWS = 2**16


class LinearCode:
    """A k-dimensional subspace of GF(q)^n, k >= 1, given by a generator."""

    def __init__(self, generator: CodeMatrix):
        if not isinstance(generator, CodeMatrix):
            raise TypeError("LinearCode expects a CodeMatrix generator")
        if generator.cols < 1:
            raise MalformedMatrix("codes of length 0 are not supported")
        if generator.rows < 1:
            raise EmptyCode("a linear code needs dimension k >= 1")
        r, pivots = rref_array(generator.array, generator.q)
        if len(pivots) < generator.rows:
            raise RankDeficient(f"generator has rank {len(pivots)} < {generator.rows} rows")
        self._generator = generator
        self._rref = r
        self._rref.setflags(write=False)
        self._pivots = tuple(pivots)
        # per-instance memo for derived tables (syndrome distances etc.)
        self._cache: dict = {}

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[str | Sequence[int]]) -> "LinearCode":
        return cls(CodeMatrix.from_rows(check_field(q), list(rows)))

    @classmethod
    def from_array(cls, q: int, a) -> "LinearCode":
        return cls(CodeMatrix(q, a))

    @classmethod
    def _from_reduced(cls, q: int, a: np.ndarray) -> "LinearCode":
        """Build from an array already reduced mod q; drops zero rows."""
        r, pivots = rref_array(a, q)
        r = r[: len(pivots)]
        if len(pivots) == 0:
            raise EmptyCode("only the zero word remains")
        return cls(CodeMatrix._wrap(q, r))

    @property
    def q(self) -> int:
        return self._generator.q

    @property
    def n(self) -> int:
        return self._generator.cols

    @property
    def k(self) -> int:
        return self._generator.rows

    @property
    def generator(self) -> CodeMatrix:
        return self._generator

    @property
    def rref(self) -> np.ndarray:
        return self._rref

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    @cached_property
    def parity_check(self) -> CodeMatrix:
        """(n-k) x n matrix whose kernel is the code (0 x n for the full space)."""
        return CodeMatrix._wrap(self.q, nullspace_array(self._rref, self.q))

    def dual(self) -> "LinearCode":
        if self.k == self.n:
            raise EmptyCode("the dual of the full space is the zero code")
        return LinearCode(self.parity_check)

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64)
        if w.shape != (self.n,):
            return False
        h = self.parity_check.array.astype(np.int64)
        return not ((h @ w) % self.q).any()

    def zero_coordinates(self) -> list[int]:
        return [int(j) for j in np.flatnonzero(~self._rref.any(axis=0))]

    @cached_property
    def codewords(self) -> np.ndarray:
        """All q^k codewords as a (q^k, n) uint8 array."""
        check_enumerable(self.q, self.k)
        return _span(self._rref, self.q)

    def iter_codeword_blocks(self) -> Iterator[np.ndarray]:
        """Codewords in blocks of bounded size; covers the code exactly once."""
        check_enumerable(self.q, self.k)
        g = self._rref
        inner = 0
        while inner < self.k and self.q ** (inner + 1) <= _BLOCK_ROWS:
            inner += 1
        base = _span(g[self.k - inner :], self.q)
        outer = g[: self.k - inner]
        for offset in _span(outer, self.q) if outer.shape[0] else [np.zeros(self.n, dtype=np.uint8)]:
            yield (base + offset) % self.q

    @cached_property
    def weight_distribution(self) -> "WeightDistribution":
        r = self.n - self.k
        if 0 < r < self.k:
            # high rate: enumerate the smaller dual and transform back
            check_enumerable(self.q, r)
            dual_counts = np.zeros(self.n + 1, dtype=np.int64)
            words = _span(self.parity_check.array, self.q)
            dual_counts += np.bincount(np.count_nonzero(words, axis=1), minlength=self.n + 1)
            return WeightDistribution(
                macwilliams_transform(tuple(int(x) for x in dual_counts), self.n, r, self.q)
            )
        counts = np.zeros(self.n + 1, dtype=np.int64)
        for block in self.iter_codeword_blocks():
            counts += np.bincount(np.count_nonzero(block, axis=1), minlength=self.n + 1)
        return WeightDistribution(tuple(int(c) for c in counts))

    @cached_property
    def min_distance(self) -> int:
        return self.weight_distribution.min_distance

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.q == other.q
            and self._rref.shape == other._rref.shape
            and np.array_equal(self._rref, other._rref)
        )

    def __hash__(self):
        return hash((self.q, self._rref.shape, self._rref.tobytes()))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q})"


@dataclass(frozen=True)
class WeightDistribution:
    """``counts[i]`` is the number of codewords of Hamming weight i."""

    counts: tuple[int, ...]

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int:
        for i in range(1, len(self.counts)):
            if self.counts[i]:
                return i
        raise EmptyCode("no nonzero codewords")


def check_enumerable(q: int, k: int, limit: int = MAX_ENUMERATION) -> None:
    if q**k > limit:
        raise TooLarge(f"enumerating {q}^{k} codewords exceeds the guard of {limit}")


def _span(rows: np.ndarray, q: int) -> np.ndarray:
    # Each new row multiplies the list by q; the block added for multiplier a
    # differs from the existing list by a single row update.
    words = np.zeros((1, rows.shape[1]), dtype=np.uint8)
    for g in rows[::-1]:
        g = g.astype(np.uint8)
        words = np.concatenate([(words + a * g) % q for a in range(q)])
    return words


def weight(v) -> int:
    """Number of nonzero coordinates."""
    return int(np.count_nonzero(np.asarray(v)))


def min_distance(c: LinearCode) -> int:
    return c.min_distance


def weight_distribution(c: LinearCode) -> WeightDistribution:
    return c.weight_distribution


def puncture(c: LinearCode, positions: Iterable[int]) -> LinearCode:
    """Delete the given coordinates; the dimension must survive."""
    drop = _check_positions(c, positions)
    keep = [j for j in range(c.n) if j not in drop]
    if not keep:
        raise DimensionDrop("puncturing every coordinate leaves nothing")
    sub = c.rref[:, keep]
    r, pivots = rref_array(sub, c.q)
    if len(pivots) < c.k:
        raise DimensionDrop(
            f"puncturing {sorted(drop)} drops the dimension from {c.k} to {len(pivots)}"
        )
    return LinearCode(CodeMatrix._wrap(c.q, sub))


def shorten(c: LinearCode, positions: Iterable[int]) -> LinearCode:
    """Keep the codewords vanishing on ``positions`` and delete those coordinates."""
    drop = _check_positions(c, positions)
    keep = [j for j in range(c.n) if j not in drop]
    g = c.rref
    cols = sorted(drop)
    if cols:
        msgs = nullspace_array(g[:, cols].T, c.q)
    else:
        msgs = np.eye(c.k, dtype=np.uint8)
    if msgs.shape[0] == 0 or not keep:
        raise EmptyCode(f"shortening on {cols} leaves only the zero word")
    sub = (msgs.astype(np.int64) @ g.astype(np.int64)) % c.q
    return LinearCode._from_reduced(c.q, sub[:, keep].astype(np.uint8))


def residual(c: LinearCode, word, d: int | None = None) -> LinearCode:
    """Residual code: the generator restricted to the zero positions of ``word``.

    Requires ``d > wt*(q-1)/q`` so that the dimension drops by exactly one, and
    checks the lower bound ``d' >= d - wt + ceil(wt/q)`` on the result.
    """
    w = np.asarray(word, dtype=np.uint8)
    if not c.contains(w):
        raise NotACodeword("residual taken with respect to a vector outside the code")
    wt = weight(w)
    if wt == 0:
        raise PreconditionViolated("residual needs a nonzero codeword")
    if d is None:
        d = c.min_distance
    q = c.q
    if d * q <= wt * (q - 1):
        raise PreconditionViolated(f"need d > wt(q-1)/q, got d={d}, wt={wt}, q={q}")
    zeros = np.flatnonzero(w == 0)
    if c.k - 1 == 0 or zeros.size == 0:
        raise DegenerateResidual(f"residual of a [{c.n},{c.k}] code would have dimension 0")
    r, pivots = rref_array(c.rref[:, zeros], q)
    if len(pivots) != c.k - 1:
        raise AssertionError(f"residual dimension {len(pivots)} != k-1 = {c.k - 1}")
    res = LinearCode(CodeMatrix._wrap(q, r[: len(pivots)]))
    bound = d - wt + ceil(wt / q)
    if res.min_distance < bound:
        raise AssertionError(f"residual distance {res.min_distance} below bound {bound}")
    return res


def dual_shortening(c: LinearCode, dual_word_weight: int) -> LinearCode | None:
    """[n-i, >=k-i+1, >=d] code from a weight-i word of the dual, or None.

    The code is shortened on the support of the first dual word of weight
    ``i`` in enumeration order.  ``None`` when no such word exists (and for
    ``i <= 0``, since only nonzero dual words are considered).
    """
    i = dual_word_weight
    if i <= 0 or c.k == c.n:
        return None
    dual_code = c.dual()
    for block in dual_code.iter_codeword_blocks():
        hits = np.flatnonzero(np.count_nonzero(block, axis=1) == i)
        if hits.size:
            support = np.flatnonzero(block[hits[0]])
            out = shorten(c, support.tolist())
            if out.k < c.k - i + 1:
                raise AssertionError("dual shortening lost too much dimension")
            return out
    return None


def _check_positions(c: LinearCode, positions: Iterable[int]) -> set[int]:
    drop = {int(p) for p in positions}
    bad = [p for p in drop if not 0 <= p < c.n]
    if bad:
        raise IndexError(f"positions {bad} outside 0..{c.n - 1}")
    return drop


def macwilliams_transform(weights: Sequence[int], n: int, k: int, q: int) -> tuple[int, ...]:
    """Weight distribution of the dual code from that of a code of dimension k."""
    total = q**k
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a in enumerate(weights):
            if a:
                acc += a * _krawtchouk(n, q, j, i)
        if acc % total:
            raise AssertionError("MacWilliams transform produced a non-integer count")
        out.append(acc // total)
    return tuple(out)


@lru_cache(maxsize=None)
def _krawtchouk(n: int, q: int, j: int, i: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
        for s in range(0, min(i, j) + 1)
    )


def dual_weight_distribution(c: LinearCode) -> WeightDistribution:
    return WeightDistribution(macwilliams_transform(c.weight_distribution.counts, c.n, c.k, c.q))
