"""
Classification of [n,k,d]_q codes up to equivalence and quasi-perfect search.

Every [n,k,>=d] code with k >= 2 is obtained from an [n-1,k-1,>=d] code by
adding one row and one column,

    [ x   | 0 | 1 ]
    [ G_1 | I | 0 ]

(the base written as [G_1 | I_k]).  Codewords using the new row have weight
1 + wt(x + c), so x only matters through its coset of the base code and the
new minimum distance is min(d_base, 1 + leader weight of that coset).  The
classifier therefore walks up from length n-k+1, dimension 1, keeping one
canonical representative per equivalence class at every level and only
trying cosets whose leaders are heavy enough.  Codimension n-k is fixed
along the way, so one syndrome table size serves all levels.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .code import LinearCode
from .equivalence import DEFAULT_NODE_LIMIT, canonical_form
from .errors import BudgetExceeded, HypothesisViolated, NoColumnAvailable, TooLarge
from .gf import CodeMatrix, all_vectors, encode_vectors, nullspace_array, systematize
from .radii import (
    MAX_ORACLE,
    MAX_SYNDROMES,
    CodeReport,
    _bfs,
    classify_radius_class,
    covering_radius_by_coset_reps,
)

EXACT = "exact"
AT_LEAST = "at_least"
RAW_LIMIT = 2**24


@dataclass(frozen=True)
class ClassificationTask:
    q: int
    n: int
    k: int
    d_min: int
    mode: str = EXACT
    include_degenerate: bool = False
    node_limit: int = DEFAULT_NODE_LIMIT
    max_candidates: int | None = None
    max_seconds: float | None = None
    cross_check: bool = True
    jobs: int = 1

    def __post_init__(self):
        if self.q not in (2, 3):
            raise ValueError("q must be 2 or 3")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")
        if self.d_min < 3:
            raise ValueError("classification targets d >= 3 (covering radius above 1)")
        if self.mode not in (EXACT, AT_LEAST):
            raise ValueError(f"mode must be {EXACT!r} or {AT_LEAST!r}")
        if self.q ** (self.n - self.k) > MAX_SYNDROMES:
            raise TooLarge("codimension too large for the syndrome table")

    @property
    def label(self) -> str:
        return f"[{self.n},{self.k},{self.d_min}]_{self.q}"


@dataclass(frozen=True)
class ClassificationResult:
    task: ClassificationTask
    representatives: tuple[LinearCode, ...]
    reports: tuple[CodeReport, ...]
    qp_subset: tuple[int, ...]
    exhaustive: bool = True
    candidates: int = 0
    seconds: float = 0.0

    @property
    def count_all(self) -> int:
        return len(self.representatives)

    @property
    def count_qp(self) -> int:
        return len(self.qp_subset)

    @property
    def quasi_perfect(self) -> list[LinearCode]:
        return [self.representatives[i] for i in self.qp_subset]


@dataclass(frozen=True)
class ChainResult:
    steps: tuple[tuple[LinearCode, CodeReport], ...]

    @property
    def parameters(self) -> list[tuple[int, int, int, int]]:
        return [(r.n, r.k, r.d, r.R) for _, r in self.steps]

    @property
    def last(self) -> tuple[LinearCode, CodeReport]:
        return self.steps[-1]


@dataclass(frozen=True)
class ScanRow:
    n: int
    d: int | None
    count_all: int
    count_qp: int
    skipped: bool = False


# --- one-step extension ------------------------------------------------------------


def identity_right(code: LinearCode) -> np.ndarray:
    """Generator of an equivalent code in the form [G_1 | I_k]."""
    s, _ = systematize(code.generator)
    k = code.k
    return np.hstack([s.array[:, k:], s.array[:, :k]])


def extend_enumerate(
    base: LinearCode, i: int, variant: str = "plain", limit: int = RAW_LIMIT
) -> Iterator[LinearCode]:
    """Every completion of the starred block over a base written as [G_1 | I_k].

    ``plain`` yields [n+i, k+i] codes

        [ * | 0 | I_i ]
        [G_1| I | 0   ]

    and ``all-one`` inserts a fixed all-one column before I_i, giving
    [n+i+1, k+i] codes.  Equivalent outputs are not filtered here.
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    if variant not in ("plain", "all-one"):
        raise ValueError("variant is 'plain' or 'all-one'")
    if i == 0:
        yield base
        return
    q, k, n = base.q, base.k, base.n
    g = identity_right(base)
    star_cols = n - k
    raw = q ** (i * star_cols)
    if raw > limit:
        raise BudgetExceeded(f"{raw} raw completions exceed the limit of {limit}")
    ones = [np.ones((i, 1), dtype=np.uint8)] if variant == "all-one" else []
    right_top = np.hstack([np.zeros((i, k), dtype=np.uint8), *ones, np.eye(i, dtype=np.uint8)])
    bottom = np.hstack([g, np.zeros((k, right_top.shape[1] - k), dtype=np.uint8)])
    for flat in product(range(q), repeat=i * star_cols):
        star = np.array(flat, dtype=np.uint8).reshape(i, star_cols)
        top = np.hstack([star, right_top])
        yield LinearCode(CodeMatrix._wrap(q, np.vstack([top, bottom])))


# --- level-wise classification ------------------------------------------------------

_LEVELS: dict[tuple[int, int, int, int], tuple[LinearCode, ...]] = {}


class _Budget:
    def __init__(self, task: ClassificationTask):
        self.max_candidates = task.max_candidates
        self.deadline = None if task.max_seconds is None else time.monotonic() + task.max_seconds
        self.candidates = 0

    def tick(self, count: int = 1) -> None:
        self.candidates += count
        if self.max_candidates is not None and self.candidates > self.max_candidates:
            raise BudgetExceeded(f"more than {self.max_candidates} candidates")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")


def _bottom_level(q: int, r: int, d: int) -> tuple[LinearCode, ...]:
    # [r+1, 1, >=d]: one class per weight of the generating word
    m = r + 1
    return tuple(
        LinearCode(CodeMatrix._wrap(q, np.array([[1] * w + [0] * (m - w)], dtype=np.uint8)))
        for w in range(max(d, 1), m + 1)
    )


def extension_candidates(base: LinearCode, d: int) -> Iterator[tuple[LinearCode, int]]:
    """One-step extensions of ``base`` with minimum distance >= d, up to row scaling.

    Yields (code, exact minimum distance of the code), knowing d(base) >= d.
    """
    q, k, n = base.q, base.k, base.n
    r = n - k
    g = identity_right(base)
    # with the base as [G_1 | I_k] the parity check is [I_r | -G_1^T] and the
    # syndrome of (x, 0) is x itself
    h = np.hstack([np.eye(r, dtype=np.int16), (-g[:, :r].T.astype(np.int16)) % q])
    dist = _bfs(CodeMatrix._wrap(q, h))
    vecs = all_vectors(r, q)
    base_d = base._cache.get("min_distance_hint") or base.min_distance
    bottom = np.hstack([g, np.zeros((k, 1), dtype=np.uint8)])
    for idx in np.flatnonzero(dist >= d - 1).tolist():
        x = vecs[idx]
        nz = np.flatnonzero(x)
        if nz.size and x[nz[0]] != 1:
            continue  # scalar multiples give equivalent codes
        top = np.concatenate([x, np.zeros(k, dtype=np.uint8), [1]]).astype(np.uint8)
        code = LinearCode(CodeMatrix._wrap(q, np.vstack([top, bottom])))
        new_d = min(base_d, 1 + int(dist[idx]))
        code._cache["min_distance_hint"] = new_d
        yield code, new_d


def _canon_bytes(args) -> bytes:
    q, arr, node_limit = args
    key = canonical_form(LinearCode(CodeMatrix._wrap(q, arr)), node_limit)
    return key.fingerprint.encode() + key.canonical_generator.array.tobytes()


def _dedup(codes: list[LinearCode], task: ClassificationTask, pool) -> list[LinearCode]:
    seen: dict = {}
    if pool is None:
        for c in codes:
            seen.setdefault(canonical_form(c, task.node_limit), c)
        return list(seen.values())
    args = [(c.q, c.generator.array, task.node_limit) for c in codes]
    for c, key in zip(codes, pool.map(_canon_bytes, args, chunksize=16)):
        seen.setdefault(key, c)
    return list(seen.values())


def classify_levels(
    q: int, r: int, d: int, k: int, task: ClassificationTask | None = None, pool=None
) -> tuple[LinearCode, ...]:
    """All [r+k, k, >=d]_q codes, degenerate ones included, one per class."""
    if task is None:
        task = ClassificationTask(q, r + k, k, max(d, 3))
    budget = _Budget(task)
    return _levels(q, r, d, k, task, budget, pool)


def _levels(q, r, d, k, task, budget, pool) -> tuple[LinearCode, ...]:
    key = (q, r, d, k)
    if key in _LEVELS:
        return _LEVELS[key]
    if k == 1:
        reps = _bottom_level(q, r, d)
    else:
        parents = _levels(q, r, d, k - 1, task, budget, pool)
        cands = []
        for p in parents:
            for code, _ in extension_candidates(p, d):
                budget.tick()
                cands.append(code)
        reps = tuple(_dedup(cands, task, pool))
    _LEVELS[key] = reps
    return reps


def _sorted_reps(codes: Iterable[LinearCode], node_limit: int) -> list[LinearCode]:
    keyed = [(canonical_form(c, node_limit), c) for c in codes]
    keyed.sort(key=lambda kc: kc[0].sort_key())
    return [LinearCode(k.canonical_generator) for k, _ in keyed]


def _finish(task: ClassificationTask, codes, exhaustive, candidates, started) -> ClassificationResult:
    keep = []
    for c in codes:
        if task.mode == EXACT and c.min_distance != task.d_min:
            continue
        if c.min_distance < task.d_min:
            continue
        if not task.include_degenerate and c.zero_coordinates():
            continue
        keep.append(c)
    reps = _sorted_reps(keep, task.node_limit)
    reports = tuple(classify_radius_class(c) for c in reps)
    qp = []
    for i, (c, rep) in enumerate(zip(reps, reports)):
        if rep.is_quasi_perfect and not rep.trivial_qp:
            if task.cross_check and c.q ** (c.n - c.k) <= MAX_ORACLE and c.q**c.k <= MAX_ORACLE:
                if covering_radius_by_coset_reps(c) != rep.R:
                    raise AssertionError(f"covering radius methods disagree on {c!r}")
            qp.append(i)
    return ClassificationResult(
        task=task,
        representatives=tuple(reps),
        reports=reports,
        qp_subset=tuple(qp),
        exhaustive=exhaustive,
        candidates=candidates,
        seconds=time.monotonic() - started,
    )


def classify(task: ClassificationTask) -> ClassificationResult:
    """Every inequivalent [n,k,d]_q code (exact d or at least d) with its report."""
    started = time.monotonic()
    r = task.n - task.k
    budget = _Budget(task)
    pool = ProcessPoolExecutor(task.jobs) if task.jobs > 1 else None
    try:
        if task.k == 1:
            codes = _bottom_level(task.q, r, task.d_min)
        else:
            parents = _levels(task.q, r, task.d_min, task.k - 1, task, budget, pool)
            cands = []
            try:
                for p in parents:
                    for code, new_d in extension_candidates(p, task.d_min):
                        budget.tick()
                        if task.mode == EXACT and new_d != task.d_min:
                            continue
                        cands.append(code)
            except BudgetExceeded as exc:
                partial = _finish(task, _dedup(cands, task, None), False, budget.candidates, started)
                raise BudgetExceeded(str(exc), partial=partial) from None
            codes = _dedup(cands, task, pool)
    except BudgetExceeded as exc:
        if exc.partial is None:
            exc.partial = _finish(task, [], False, budget.candidates, started)
        raise
    finally:
        if pool is not None:
            pool.shutdown()
    return _finish(task, codes, True, budget.candidates, started)


def clear_cache() -> None:
    _LEVELS.clear()


# --- residual inversion (cross-check route) ---------------------------------------


def classify_via_residuals(task: ClassificationTask) -> ClassificationResult:
    """Same classification built from residual codes instead of extensions.

    A minimum-weight word c of an [n,k,d] code can be moved to (1^d, 0) by a
    monomial map, and the code then has a generator

        [ 1^d | 0     ]
        [  X  | G_res ]

    with G_res generating the [n-d, k-1, >= ceil(d/q)] residual.  All residual
    classes are enumerated with the extension route, and X runs over all
    matrices with a zero first column (adding the top row to a lower row
    changes X only by a multiple of 1^d).  Only exact-d mode makes sense here.
    """
    if task.mode != EXACT:
        raise ValueError("residual route classifies exact minimum distance only")
    started = time.monotonic()
    q, n, k, d = task.q, task.n, task.k, task.d_min
    if k < 2 or n - d < k - 1:
        return _finish(task, [], True, 0, started)
    dres = -(-d // q)
    m, kr = n - d, k - 1
    parents = classify_levels(q, m - kr, dres, kr, task) if kr >= 1 else ()
    budget = _Budget(task)
    found: dict = {}
    top = np.concatenate([np.ones(d, dtype=np.uint8), np.zeros(m, dtype=np.uint8)])
    free = kr * (d - 1)
    if q**free > RAW_LIMIT:
        raise BudgetExceeded(f"{q}^{free} residual completions exceed the limit")
    for p in parents:
        if p.n != m:
            continue
        gres = p.rref
        for flat in product(range(q), repeat=free):
            budget.tick()
            x = np.zeros((kr, d), dtype=np.uint8)
            x[:, 1:] = np.array(flat, dtype=np.uint8).reshape(kr, d - 1)
            g = np.vstack([top, np.hstack([x, gres])])
            code = LinearCode(CodeMatrix._wrap(q, g))
            if code.min_distance != d:
                continue
            if not task.include_degenerate and code.zero_coordinates():
                continue
            found.setdefault(canonical_form(code, task.node_limit), code)
    return _finish(task, list(found.values()), True, budget.candidates, started)


# --- scanning a dimension -------------------------------------------------------------


def qp_scan(
    q: int,
    k: int,
    n_range: Iterable[int],
    d_min: int = 3,
    max_candidates: int | None = None,
    max_seconds: float | None = None,
) -> list[ScanRow]:
    """QP rows (n, d, all, qp) for a fixed dimension over a range of lengths."""
    rows = []
    for n in n_range:
        if n - k + 1 < d_min:
            continue
        task = ClassificationTask(
            q, n, k, d_min, mode=AT_LEAST,
            max_candidates=max_candidates, max_seconds=max_seconds,
        )
        try:
            result = classify(task)
        except (BudgetExceeded, TooLarge):
            rows.append(ScanRow(n, None, 0, 0, skipped=True))
            continue
        by_d: dict[int, list[int]] = {}
        for i, rep in enumerate(result.reports):
            by_d.setdefault(rep.d, []).append(i)
        qp = set(result.qp_subset)
        for d in sorted(by_d):
            idx = by_d[d]
            nqp = sum(1 for i in idx if i in qp)
            if nqp:
                rows.append(ScanRow(n, d, len(idx), nqp))
    return rows


# --- parity-check chains -------------------------------------------------------------


def chain_length_bound(q: int, r: int) -> int:
    """Largest n for which an [n, n-r] code with R=2 admits the extension."""
    return (q**r - 1) // (q - 1) - 2


def _check_chain_hypothesis(code: LinearCode, report: CodeReport) -> None:
    if not report.is_quasi_perfect or report.R != 2:
        raise HypothesisViolated(f"{code!r} is not a quasi-perfect code with R = 2")
    if not 3 <= report.d <= 4:
        raise HypothesisViolated(f"need 3 <= d <= 4, got d = {report.d}")
    r = code.n - code.k
    if code.n > chain_length_bound(code.q, r):
        raise HypothesisViolated(
            f"length {code.n} exceeds (q^{r}-1)/(q-1) - 2 = {chain_length_bound(code.q, r)}"
        )


def chain_extend(code: LinearCode, report: CodeReport | None = None) -> LinearCode:
    """Append a new projective point to the parity-check matrix.

    The added column is the first point of PG(n-k-1, q) (in index order of
    normalised vectors) that is not proportional to an existing column; the
    result is re-verified to be an [n+1, k+1, 3] code with R = 2.
    """
    if report is None:
        report = classify_radius_class(code)
    _check_chain_hypothesis(code, report)
    q = code.q
    h = code.parity_check.array
    r = h.shape[0]
    used = set(encode_vectors(_normalise(h.T, q), q).tolist())
    points = all_vectors(r, q)[1:]
    points = points[points[np.arange(points.shape[0]), np.argmax(points != 0, axis=1)] == 1]
    fresh = [p for p in points if int(encode_vectors(p[None, :], q)[0]) not in used]
    if not fresh:
        raise NoColumnAvailable("every projective point already occurs in H")
    h_new = np.hstack([h, fresh[0][:, None]])
    g_new = nullspace_array(h_new, q)
    new = LinearCode(CodeMatrix._wrap(q, g_new))
    rep = classify_radius_class(new)
    if (rep.n, rep.k, rep.d, rep.R) != (code.n + 1, code.k + 1, 3, 2):
        raise AssertionError(f"extension gave [{rep.n},{rep.k},{rep.d}] R={rep.R}")
    return new


def _normalise(vectors: np.ndarray, q: int) -> np.ndarray:
    out = vectors.astype(np.uint8).copy()
    if q == 3:
        lead = out[np.arange(out.shape[0]), np.argmax(out != 0, axis=1)]
        out[lead == 2] = (out[lead == 2] * 2) % 3
    return out


def chain_run(code: LinearCode, max_steps: int | None = None) -> ChainResult:
    """Apply ``chain_extend`` until the length hypothesis fails or max_steps is hit.

    Every step's report is recomputed from scratch.
    """
    report = classify_radius_class(code)
    _check_chain_hypothesis(code, report)
    steps = [(code, report)]
    while max_steps is None or len(steps) <= max_steps:
        cur, rep = steps[-1]
        if cur.n > chain_length_bound(cur.q, cur.n - cur.k):
            break
        nxt = chain_extend(cur, rep)
        steps.append((nxt, classify_radius_class(nxt)))
    return ChainResult(tuple(steps))
