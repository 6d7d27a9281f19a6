"""Exhaustive search over connected graphs of small order.

Candidate structures are encoded as bitmasks over the C(n, 2) possible
edges, enumerated in ascending mask order. Enumeration is over labeled
graphs: correctness is easy to audit against the 2^C(n,2) subset count,
and the balance measure is invariant under relabeling anyway, so the only
effect is that maximizer sets list every labeling of a shape.

The mask space may be partitioned into fixed-size chunks processed by
parallel workers; chunk boundaries never depend on the worker count and
results are merged in chunk order, so any worker count yields bit-identical
results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._parallel import run_chunks
from .graph import Graph, build_graph
from .measures import SecrecyParams, balance, make_structure

#: Orders above this need allow_large=True; 8 is the hard cap (2^28 subsets).
DEFAULT_MAX_ORDER = 7
HARD_MAX_ORDER = 8

_CHUNK_MASKS = 1 << 12


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive balance maximization."""

    n: int
    p: float
    best_mu: float
    argmax_graphs: tuple[Graph, ...]
    graphs_enumerated: int
    tolerance: float


@dataclass(frozen=True)
class LemmaCheckRow:
    """Verification outcome for one detection probability."""

    p: float
    passed: bool
    mu_claimed: float
    max_mu_other: float
    counterexample: Graph | None


@dataclass(frozen=True)
class LemmaReport:
    """Verification outcomes for one claimed-optimal structure."""

    which: str
    n: int
    tolerance: float
    rows: tuple[LemmaCheckRow, ...]

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.rows)


def _check_order(n: int, allow_large: bool) -> None:
    cap = HARD_MAX_ORDER if allow_large else DEFAULT_MAX_ORDER
    if not isinstance(n, int) or not 2 <= n <= cap:
        raise ValueError(
            f"order must be an integer in [2, {cap}]"
            f"{' (pass allow_large=True for 8)' if not allow_large else ''}, got {n}"
        )


def _edge_slots(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


def _mask_stats(mask: int, n: int, slots: tuple[tuple[int, int], ...]):
    """(total distance, degrees) for a connected mask, else None."""
    adj = [0] * n
    mm = mask
    while mm:
        low = mm & -mm
        i, j = slots[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        mm ^= low
    full = (1 << n) - 1
    total = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        level = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
            level += 1
            total += level * frontier.bit_count()
        if seen != full:
            return None
    return total, [a.bit_count() for a in adj]


def _graph_from_mask(mask: int, n: int, slots: tuple[tuple[int, int], ...]) -> Graph:
    edges = [slots[k] for k in range(len(slots)) if mask >> k & 1]
    return build_graph(n, directed=False, edges=edges)


def enumerate_connected(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Yield every connected labeled simple graph on n vertices once.

    Deterministic order: ascending edge-subset bitmask, with edge slots in
    lexicographic pair order. The order cap is checked eagerly, before the
    first graph is requested.
    """
    _check_order(n, allow_large)
    slots = _edge_slots(n)

    def generate() -> Iterator[Graph]:
        for mask in range(1 << len(slots)):
            if _mask_stats(mask, n, slots) is not None:
                yield _graph_from_mask(mask, n, slots)

    return generate()


def _chunk_stats(n: int, lo: int, hi: int):
    """Stats arrays for connected masks in [lo, hi)."""
    slots = _edge_slots(n)
    masks: list[int] = []
    totals: list[int] = []
    degrees: list[list[int]] = []
    for mask in range(lo, hi):
        stats = _mask_stats(mask, n, slots)
        if stats is None:
            continue
        masks.append(mask)
        totals.append(stats[0])
        degrees.append(stats[1])
    return (
        np.asarray(masks, dtype=np.int64),
        np.asarray(totals, dtype=np.float64),
        np.asarray(degrees, dtype=np.float64).reshape(len(masks), n),
    )


def _mu_vector(n: int, totals: np.ndarray, degrees: np.ndarray, p: float, weights: np.ndarray) -> np.ndarray:
    """Balance for each stats row; mirrors the per-graph measure arithmetic."""
    hidden = (1.0 - (p * degrees + 1.0) / n) @ weights
    return (n * (n - 1) / totals) * hidden


def _chunk_ranges(n: int) -> list[tuple[int, int]]:
    space = 1 << len(_edge_slots(n))
    return [(lo, min(lo + _CHUNK_MASKS, space)) for lo in range(0, space, _CHUNK_MASKS)]


def _scan_optimal_chunk(args) -> tuple[int, float | None, list[int], list[float]]:
    n, lo, hi, p, weights, tolerance = args
    masks, totals, degrees = _chunk_stats(n, lo, hi)
    if len(masks) == 0:
        return 0, None, [], []
    mu = _mu_vector(n, totals, degrees, p, np.asarray(weights))
    local_best = float(mu.max())
    keep = mu >= local_best - tolerance
    return len(masks), local_best, masks[keep].tolist(), mu[keep].tolist()


def find_optimal(
    n: int,
    params: SecrecyParams,
    tolerance: float = 1e-12,
    allow_large: bool = False,
    workers: int = 1,
) -> SearchResult:
    """Maximize the balance over every connected labeled graph on n vertices.

    Returns the maximum together with all maximizers within ``tolerance``
    of it; ties are reported, not broken, because at p = 1/2 the tie
    between the complete graph and the star is genuine.
    """
    _check_order(n, allow_large)
    if tolerance < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tolerance}")
    weights = tuple(params.weights_for(n))
    jobs = [(n, lo, hi, params.p, weights, tolerance) for lo, hi in _chunk_ranges(n)]
    results = run_chunks(_scan_optimal_chunk, jobs, workers)

    enumerated = sum(r[0] for r in results)
    bests = [r[1] for r in results if r[1] is not None]
    best = max(bests)
    slots = _edge_slots(n)
    argmax = [
        _graph_from_mask(mask, n, slots)
        for _, _, masks, mus in results
        for mask, mu in zip(masks, mus)
        if mu >= best - tolerance
    ]
    return SearchResult(
        n=n,
        p=params.p,
        best_mu=best,
        argmax_graphs=tuple(argmax),
        graphs_enumerated=enumerated,
        tolerance=tolerance,
    )


_LEMMA_INTERVALS = {
    "complete_optimal": (0.0, 0.5),
    "star_optimal": (0.5, 1.0),
}


def _scan_lemma_chunk(args) -> tuple[int, list[tuple[float, int] | None]]:
    n, lo, hi, p_grid, claimed_mask, weights = args
    masks, totals, degrees = _chunk_stats(n, lo, hi)
    count = len(masks)
    if count == 0:
        return 0, [None] * len(p_grid)
    other = masks != claimed_mask
    if not other.any():
        return count, [None] * len(p_grid)
    masks, totals, degrees = masks[other], totals[other], degrees[other]
    w = np.asarray(weights)
    out: list[tuple[float, int] | None] = []
    for p in p_grid:
        mu = _mu_vector(n, totals, degrees, p, w)
        top = int(np.argmax(mu))
        out.append((float(mu[top]), int(masks[top])))
    return count, out


def verify_lemma(
    which: str,
    n: int,
    p_grid: list[float],
    tolerance: float = 1e-12,
    allow_large: bool = False,
    workers: int = 1,
) -> LemmaReport:
    """Check a claimed-optimal structure against every connected graph.

    ``which`` selects the claim: ``complete_optimal`` (complete graph best
    for p in [0, 1/2]) or ``star_optimal`` (star best for p in [1/2, 1]).
    Each grid probability must lie in the claim's interval. A row passes
    when the claimed structure's balance is at least every competitor's
    balance minus ``tolerance``; on failure the row carries the strongest
    counterexample graph.
    """
    if which not in _LEMMA_INTERVALS:
        raise ValueError(
            f"unknown claim {which!r}; expected 'complete_optimal' or 'star_optimal'"
        )
    _check_order(n, allow_large)
    if tolerance < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tolerance}")
    lo_p, hi_p = _LEMMA_INTERVALS[which]
    p_grid = [float(p) for p in p_grid]
    for p in p_grid:
        if not lo_p <= p <= hi_p:
            raise ValueError(
                f"p={p} outside the stated interval [{lo_p}, {hi_p}] for {which}"
            )

    slots = _edge_slots(n)
    kind = "complete" if which == "complete_optimal" else "star"
    claimed = make_structure(kind, n)
    claimed_edges = {(s, t) for s, t, _ in claimed.edges}
    claimed_mask = sum(1 << k for k, pair in enumerate(slots) if pair in claimed_edges)
    # the optimality claims are stated for uniform sharing weights
    weights = tuple(np.full(n, 1.0 / n))

    jobs = [(n, lo, hi, tuple(p_grid), claimed_mask, weights) for lo, hi in _chunk_ranges(n)]
    results = run_chunks(_scan_lemma_chunk, jobs, workers)

    best_other: list[tuple[float, int] | None] = [None] * len(p_grid)
    for _, per_p in results:
        for idx, entry in enumerate(per_p):
            if entry is None:
                continue
            if best_other[idx] is None or entry[0] > best_other[idx][0]:
                best_other[idx] = entry

    rows = []
    for idx, p in enumerate(p_grid):
        mu_claimed = balance(claimed, SecrecyParams(p)).mu
        entry = best_other[idx]
        max_other = entry[0] if entry is not None else float("-inf")
        passed = mu_claimed >= max_other - tolerance
        counterexample = None
        if not passed:
            counterexample = _graph_from_mask(entry[1], n, slots)
        rows.append(
            LemmaCheckRow(
                p=p,
                passed=passed,
                mu_claimed=mu_claimed,
                max_mu_other=max_other,
                counterexample=counterexample,
            )
        )
    return LemmaReport(which=which, n=n, tolerance=tolerance, rows=tuple(rows))
