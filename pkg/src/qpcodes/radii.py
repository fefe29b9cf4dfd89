"""
Packing radius, covering radius and coset-leader statistics.

The covering radius is computed over the syndrome space: a syndrome's
distance is the least number of parity-check columns (with nonzero field
coefficients) that sum to it, which is the weight of the leader of the
corresponding coset.  A breadth-first sweep from the zero syndrome fills the
whole table in O(q^(n-k) * n * (q-1)).

``covering_radius_by_coset_reps`` is the independent cross-check: it takes
the representatives (0, ..., 0, a) of a systematic code and minimises the
weight over each coset explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .code import LinearCode, WeightDistribution, check_enumerable
from .errors import TooLarge
from .gf import CodeMatrix, all_vectors, encode_vectors, systematize

MAX_SYNDROMES = 2**26
MAX_ORACLE = 2**16
_CHUNK = 1 << 22


@dataclass(frozen=True)
class CosetLeaderDistribution:
    """``alpha[i]`` is the number of cosets whose leaders have weight i."""

    alpha: tuple[int, ...]

    @property
    def covering_radius(self) -> int:
        return len(self.alpha) - 1

    R = covering_radius

    @property
    def total(self) -> int:
        return sum(self.alpha)

    def __getitem__(self, i):
        return self.alpha[i]

    def __len__(self):
        return len(self.alpha)


@dataclass(frozen=True)
class CodeReport:
    q: int
    n: int
    k: int
    d: int
    e: int
    R: int
    weights: WeightDistribution = field(repr=False)
    cosets: CosetLeaderDistribution = field(repr=False)
    is_perfect: bool
    is_quasi_perfect: bool

    @property
    def trivial_qp(self) -> bool:
        """QP with covering radius 1: d is 1 or 2, uninteresting."""
        return self.is_quasi_perfect and self.R == 1

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "e": self.e,
            "R": self.R,
            "weights": list(self.weights.counts),
            "alpha": list(self.cosets.alpha),
            "perfect": self.is_perfect,
            "quasi_perfect": self.is_quasi_perfect,
            "trivial_qp": self.trivial_qp,
        }


def packing_radius(d: int) -> int:
    if d < 1:
        raise ValueError("minimum distance must be at least 1")
    return (d - 1) // 2


def syndrome_distances(c: LinearCode) -> np.ndarray:
    """Leader weight of every coset, indexed by the mixed-radix syndrome H x^T.

    Syndromes are taken with respect to ``c.parity_check``; index 0 is the
    code itself.
    """
    cached = c._cache.get("syndrome_distances")
    if cached is not None:
        return cached
    dist = _bfs(c.parity_check)
    dist.setflags(write=False)
    c._cache["syndrome_distances"] = dist
    return dist


def _bfs(h: CodeMatrix) -> np.ndarray:
    q = h.q
    r = h.rows
    size = q**r
    if size > MAX_SYNDROMES:
        raise TooLarge(f"syndrome table of {q}^{r} entries exceeds {MAX_SYNDROMES}")
    dist = np.full(size, -1, dtype=np.int16)
    dist[0] = 0
    if r == 0:
        return dist
    cols = h.array.T
    cols = cols[cols.any(axis=1)]
    steps = np.concatenate([(a * cols.astype(np.int64)) % q for a in range(1, q)])
    step_codes = np.unique(encode_vectors(steps, q))
    if q == 3:
        step_digits = all_vectors(r, q)[step_codes].astype(np.int64)
        digits = all_vectors(r, q).astype(np.int64)
        place = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    frontier = np.zeros(1, dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        found = []
        per = max(1, _CHUNK // max(1, step_codes.size))
        for start in range(0, frontier.size, per):
            f = frontier[start : start + per]
            if q == 2:
                nxt = (f[:, None] ^ step_codes[None, :]).ravel()
            else:
                summed = (digits[f][:, None, :] + step_digits[None, :, :]) % q
                nxt = (summed @ place).ravel()
            nxt = np.unique(nxt)
            nxt = nxt[dist[nxt] < 0]
            dist[nxt] = level
            found.append(nxt)
        frontier = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
    if (dist < 0).any():
        raise AssertionError("parity-check matrix does not have full row rank")
    return dist


def coset_leader_distribution(c: LinearCode) -> CosetLeaderDistribution:
    dist = syndrome_distances(c)
    return CosetLeaderDistribution(tuple(int(x) for x in np.bincount(dist)))


def covering_radius(c: LinearCode) -> int:
    return int(syndrome_distances(c).max())


def classify_radius_class(c: LinearCode) -> CodeReport:
    """Full profile of a code: distances, radii and perfect/QP verdicts."""
    weights = c.weight_distribution
    d = weights.min_distance
    e = packing_radius(d)
    cosets = coset_leader_distribution(c)
    R = cosets.covering_radius
    if R < e:
        raise AssertionError(f"covering radius {R} below packing radius {e}")
    return CodeReport(
        q=c.q,
        n=c.n,
        k=c.k,
        d=d,
        e=e,
        R=R,
        weights=weights,
        cosets=cosets,
        is_perfect=R == e,
        is_quasi_perfect=R == e + 1,
    )


def coset_test_budget(n: int, k: int, e: int, q: int) -> int:
    """Upper bound on the coset representatives (0, a) that need testing."""
    r = n - k
    if e < 0 or e > r:
        raise ValueError("need 0 <= e <= n-k")
    return sum(comb(r, i + 1) * (q - 1) ** (i + 1) for i in range(e, r + 1))


def coset_leader_weights_by_reps(c: LinearCode) -> np.ndarray:
    """Leader weight of the coset of (0^k, a) for every a, in index order of a.

    Works on the systematic form; each coset is minimised over every codeword,
    so nothing here depends on the syndrome sweep.
    """
    s, _ = systematize(c.generator)
    _check_oracle(c)
    words = LinearCode(s).codewords
    k, n = c.k, c.n
    reps = np.zeros((c.q ** (n - k), n), dtype=np.uint8)
    reps[:, k:] = all_vectors(n - k, c.q)
    return _min_coset_weights(words, reps, c.q)


def covering_radius_by_coset_reps(c: LinearCode) -> int:
    return int(coset_leader_weights_by_reps(c).max())


def is_quasi_perfect_fast(c: LinearCode) -> bool:
    """QP verdict with the early stop on the first coset leader heavier than e+1.

    Only representatives of weight above e are tested; lighter ones are
    their own unique leaders.
    """
    _check_oracle(c)
    e = packing_radius(c.min_distance)
    s, _ = systematize(c.generator)
    words = LinearCode(s).codewords
    k, n, q = c.k, c.n, c.q
    tails = all_vectors(n - k, q)
    tails = tails[np.count_nonzero(tails, axis=1) > e]
    seen_e1 = False
    batch = max(1, _CHUNK // max(1, words.shape[0] * n))
    for start in range(0, tails.shape[0], batch):
        reps = np.zeros((min(batch, tails.shape[0] - start), n), dtype=np.uint8)
        reps[:, k:] = tails[start : start + batch]
        w = _min_coset_weights(words, reps, q)
        if (w > e + 1).any():
            return False
        seen_e1 = seen_e1 or bool((w == e + 1).any())
    return seen_e1


def _check_oracle(c: LinearCode) -> None:
    if c.q ** (c.n - c.k) > MAX_ORACLE or c.q**c.k > MAX_ORACLE:
        raise TooLarge("coset-representative scan is limited to q^k, q^(n-k) <= 2^16")
    check_enumerable(c.q, c.k)


def _min_coset_weights(words: np.ndarray, reps: np.ndarray, q: int) -> np.ndarray:
    n = words.shape[1]
    if q == 2 and n <= 62:
        place = (1 << np.arange(n, dtype=np.int64))
        wi = words.astype(np.int64) @ place
        ri = reps.astype(np.int64) @ place
        out = np.empty(ri.size, dtype=np.int64)
        per = max(1, _CHUNK // wi.size)
        for start in range(0, ri.size, per):
            x = ri[start : start + per, None] ^ wi[None, :]
            out[start : start + per] = np.bitwise_count(x).min(axis=1)
        return out
    out = np.empty(reps.shape[0], dtype=np.int64)
    per = max(1, _CHUNK // (words.shape[0] * n))
    for start in range(0, reps.shape[0], per):
        chunk = reps[start : start + per]
        diff = chunk[:, None, :] != words[None, :, :]
        out[start : start + per] = diff.sum(axis=2).min(axis=1)
    return out
