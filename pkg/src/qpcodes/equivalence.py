"""
Monomial equivalence of codes and a complete canonical form.

Equivalence means equality up to a permutation of coordinates and, for
GF(3), a nonzero rescaling of each coordinate.  The canonical form is found
by an individualisation/refinement search over orderings of the columns:

* columns are coloured by Weisfeiler-Leman style refinement on the incidence
  between coordinates and (projective) codewords, which depends only on
  supports and is therefore unchanged by scalings;
* each leaf of the search tree is a total order of the columns, and its
  certificate is the reduced row-echelon form of the reordered code read
  column by column, with coordinate scalings chosen greedily to be minimal;
* the canonical leaf minimises (path invariants, certificate).  Automorphisms
  discovered as coinciding leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import LinearCode, macwilliams_transform
from .errors import ParameterMismatch, SearchBudgetExceeded, TooLarge
from .gf import CodeMatrix, rref_array

DEFAULT_NODE_LIMIT = 10**8
MAX_CANON_N = 30
MAX_CANON_K = 14
_WORD_CAP = 2**13
_WORD_TARGET = 2**11


@dataclass(frozen=True)
class CanonicalKey:
    """Invariant fingerprint plus the canonical systematic generator."""

    fingerprint: str
    canonical_generator: CodeMatrix

    def sort_key(self) -> tuple:
        g = self.canonical_generator
        return (g.q, g.cols, g.rows, g.array.tobytes())


def fingerprint(c: LinearCode) -> str:
    """Hash of cheap equivalence invariants.

    Covers (q, n, k), the weight distributions of the code and of its dual,
    and the profile of projectively repeated columns.
    """
    weights = c.weight_distribution.counts
    dual = macwilliams_transform(weights, c.n, c.k, c.q)
    blob = repr((c.q, c.n, c.k, weights, dual, column_multiplicity_profile(c)))
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def column_multiplicity_profile(c: LinearCode) -> tuple[int, tuple[int, ...]]:
    """(number of zero columns, sorted sizes of classes of proportional columns)."""
    cols = _normalise_columns(c.rref.T, c.q)
    nonzero = [bytes(col) for col in cols if col.any()]
    zeros = c.n - len(nonzero)
    return zeros, tuple(sorted(Counter(nonzero).values(), reverse=True))


def _normalise_columns(cols: np.ndarray, q: int) -> np.ndarray:
    # scale every vector so its first nonzero entry is 1
    out = cols.astype(np.uint8).copy()
    if q == 3:
        first = np.argmax(out != 0, axis=1)
        lead = out[np.arange(out.shape[0]), first]
        flip = lead == 2
        out[flip] = (out[flip] * 2) % 3
    return out


def apply_monomial(c: LinearCode, perm: Sequence[int], scales: Sequence[int] | None = None) -> LinearCode:
    """Code whose coordinate ``j`` is coordinate ``perm[j]`` of ``c`` times ``scales[j]``."""
    g = c.generator.array[:, list(perm)].astype(np.int64)
    if scales is not None:
        g = g * np.asarray(scales, dtype=np.int64)[None, :]
    return LinearCode(CodeMatrix._wrap(c.q, (g % c.q).astype(np.uint8)))


def random_monomial(c: LinearCode, rng: np.random.Generator) -> LinearCode:
    perm = rng.permutation(c.n)
    scales = rng.integers(1, c.q, size=c.n)
    return apply_monomial(c, perm, scales)


def canonical_form(c: LinearCode, node_limit: int = DEFAULT_NODE_LIMIT) -> CanonicalKey:
    if c.n > MAX_CANON_N or c.k > MAX_CANON_K:
        raise TooLarge(f"canonical form limited to n <= {MAX_CANON_N}, k <= {MAX_CANON_K}")
    cached = c._cache.get("canonical_key")
    if cached is not None:
        return cached
    cert = _Canonizer(c, node_limit).run()
    key = CanonicalKey(fingerprint(c), _systematic_from_certificate(cert, c.q))
    c._cache["canonical_key"] = key
    return key


def canonical_code(c: LinearCode, node_limit: int = DEFAULT_NODE_LIMIT) -> LinearCode:
    return LinearCode(canonical_form(c, node_limit).canonical_generator)


def equivalent(a: LinearCode, b: LinearCode, node_limit: int = DEFAULT_NODE_LIMIT) -> bool:
    if (a.q, a.n, a.k) != (b.q, b.n, b.k):
        raise ParameterMismatch(f"cannot compare {a!r} with {b!r}")
    if fingerprint(a) != fingerprint(b):
        return False
    return canonical_form(a, node_limit) == canonical_form(b, node_limit)


def _systematic_from_certificate(r: np.ndarray, q: int) -> CodeMatrix:
    # pivots first (stable), then the rest in canonical order
    k = r.shape[0]
    pivots = [int(np.flatnonzero(r[i])[0]) for i in range(k)]
    rest = [j for j in range(r.shape[1]) if j not in set(pivots)]
    return CodeMatrix._wrap(q, r[:, pivots + rest])


# --- search ----------------------------------------------------------------------


class _Canonizer:
    def __init__(self, c: LinearCode, node_limit: int):
        self.q = c.q
        self.n = c.n
        self.g = c.rref
        self.node_limit = node_limit
        self.nodes = 0
        words = _refinement_words(c)
        self.nwords = words.shape[0]
        self.w_idx, self.c_idx = np.nonzero(words)
        self.word_weight = np.count_nonzero(words, axis=1)[:, None]
        self.best_key: tuple | None = None
        self.best_cert: np.ndarray | None = None
        self.first_key: tuple | None = None
        self.first_perm: np.ndarray | None = None
        self.first_prefix: tuple[int, ...] = ()
        self.best_perm: np.ndarray | None = None
        self.generators: list[np.ndarray] = []

    def run(self) -> np.ndarray:
        zero = (~self.g.any(axis=0)).astype(np.int64)
        colors, sig = self.refine(zero)
        self.search(colors, (), (sig,))
        return self.best_cert

    # refinement

    def refine(self, colors: np.ndarray) -> tuple[np.ndarray, tuple]:
        colors = _relabel(colors)
        ncolors = int(colors.max()) + 1
        n, nw = self.n, self.nwords
        while True:
            if nw:
                wsig = np.bincount(
                    self.w_idx * ncolors + colors[self.c_idx], minlength=nw * ncolors
                ).reshape(nw, ncolors)
                wkey = np.hstack([self.word_weight, wsig])
                _, wcolors = np.unique(wkey, axis=0, return_inverse=True)
                wcolors = wcolors.ravel()
                mw = int(wcolors.max()) + 1
                csig = np.bincount(
                    self.c_idx * mw + wcolors[self.w_idx], minlength=n * mw
                ).reshape(n, mw)
                ckey = np.hstack([colors[:, None], csig])
            else:
                ckey = colors[:, None]
            _, new = np.unique(ckey, axis=0, return_inverse=True)
            new = new.ravel()
            m = int(new.max()) + 1
            if m == ncolors:
                break
            colors, ncolors = new, m
        return colors, tuple(np.bincount(colors).tolist())

    # tree

    def search(self, colors: np.ndarray, prefix: tuple[int, ...], path: tuple):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise SearchBudgetExceeded(f"canonical form exceeded {self.node_limit} nodes")
        sizes = np.bincount(colors)
        if sizes.max() == 1:
            return self.leaf(colors, prefix, path)
        cell_label = int(np.argmin(np.where(sizes > 1, sizes, self.n + 1)))
        cell = np.flatnonzero(colors == cell_label)
        depth = len(prefix)
        tried: list[int] = []
        for v in cell.tolist():
            if tried and self.same_orbit(v, tried, prefix):
                continue
            key = colors * 2 + 1
            key[v] -= 1
            child, sig = self.refine(key)
            child_path = path + (sig,)
            if self.best_key is not None and child_path > self.best_key[0][: len(child_path)]:
                tried.append(v)
                continue
            jump = self.search(child, prefix + (v,), child_path)
            tried.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    def leaf(self, colors: np.ndarray, prefix: tuple[int, ...], path: tuple):
        perm = np.argsort(colors)
        cert = _certificate(self.g, perm, self.q)
        key = (path, cert.T.tobytes())
        if self.first_key is None:
            self.first_key = self.best_key = key
            self.first_perm = self.best_perm = perm
            self.first_prefix = prefix
            self.best_cert = cert
            return None
        if key == self.first_key:
            self.add_generator(self.first_perm, perm)
            common = 0
            for a, b in zip(self.first_prefix, prefix):
                if a != b:
                    break
                common += 1
            return common
        if key == self.best_key:
            self.add_generator(self.best_perm, perm)
            return None
        if key < self.best_key:
            self.best_key, self.best_perm, self.best_cert = key, perm, cert
        return None

    def add_generator(self, src: np.ndarray, dst: np.ndarray) -> None:
        gamma = np.empty(self.n, dtype=np.int64)
        gamma[src] = dst
        if not np.array_equal(gamma, np.arange(self.n)):
            self.generators.append(gamma)

    def same_orbit(self, v: int, tried: list[int], prefix: tuple[int, ...]) -> bool:
        gens = [g for g in self.generators if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for x in range(self.n):
                a, b = find(x), find(int(g[x]))
                if a != b:
                    parent[a] = b
        root = find(v)
        return any(find(t) == root for t in tried)


def _relabel(colors: np.ndarray) -> np.ndarray:
    _, inv = np.unique(colors, return_inverse=True)
    return inv.ravel()


def _refinement_words(c: LinearCode) -> np.ndarray:
    """Nonzero codewords up to scalar multiples, restricted to low weights if many."""
    words = _projective_words(c)
    if words.shape[0] <= _WORD_CAP:
        return words
    wts = np.count_nonzero(words, axis=1)
    counts = np.bincount(wts)
    cum = np.cumsum(counts)
    cutoff = int(np.searchsorted(cum, _WORD_TARGET))
    return words[wts <= cutoff]


def _projective_words(c: LinearCode) -> np.ndarray:
    blocks = []
    for block in c.iter_codeword_blocks():
        nz = block.any(axis=1)
        block = block[nz]
        if c.q == 3:
            first = np.argmax(block != 0, axis=1)
            block = block[block[np.arange(block.shape[0]), first] == 1]
        blocks.append(block)
    return np.concatenate(blocks) if blocks else np.zeros((0, c.n), dtype=np.uint8)


def _certificate(g: np.ndarray, perm: np.ndarray, q: int) -> np.ndarray:
    r, pivots = rref_array(g[:, perm], q)
    if q == 2:
        return r
    return _minimise_scaling(r, set(pivots))


def _minimise_scaling(r: np.ndarray, pivots: set[int]) -> np.ndarray:
    """Choose row and column scalings of a ternary RREF matrix greedily.

    Row i is scaled by s_i in {+1, -1} (the pivot column absorbs it); every
    other column is scaled so its top nonzero entry is 1.  Reading the matrix
    column by column, each undetermined relation between two row signs is
    fixed the first time it affects an entry, in the way that makes that
    entry 1.
    """
    k, n = r.shape
    parent = list(range(k))
    parity = [0] * k  # sign of row relative to its parent, 0 = same

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    out = r.copy()
    for j in range(n):
        if j in pivots:
            continue
        rows = np.flatnonzero(r[:, j])
        if rows.size == 0:
            continue
        i0 = int(rows[0])
        s0 = 1 if r[i0, j] == 2 else 0
        out[i0, j] = 1
        root0, p0 = find(i0)
        for i in rows[1:].tolist():
            si = 1 if r[i, j] == 2 else 0
            root, p = find(i)
            if root != root0:
                # relation s_i * s_i0 chosen so that the entry becomes +1
                parent[root] = root0
                parity[root] = p ^ p0 ^ si ^ s0
                out[i, j] = 1
            else:
                sign = si ^ s0 ^ p ^ p0
                out[i, j] = 2 if sign else 1
    return out
