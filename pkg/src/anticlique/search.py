"""Search variants: threshold runs, currentmax branch and bound, bipartite setup.

All of them reuse the imposition engine but prune rows by the cheap bound
w_max (or its weighted generalization) instead of finalizing everything.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping

from .enumerator import (
    ImpositionOrder,
    SearchStats,
    TraceHook,
    _resolve_order,
    cover_order,
)
from .errors import ConfigurationError, SearchTimeout
from .graph import Graph, bipartition
from .imposition import Mutated, Unchanged, anti_implication_holds, impose
from .rows import ONE, TWO, Row, full_row


@dataclass(frozen=True)
class SearchOptions:
    """Knobs for the currentmax search.

    ``initial_bound`` must be realizable; whenever it is positive an
    ``initial_witness`` anticlique achieving it has to accompany it so the
    returned witness is always concrete.  ``weights`` switches the search to
    maximum weight (strictly positive integer weights, missing vertices
    weigh 1).
    """

    order: ImpositionOrder | None = None
    initial_bound: int = 0
    weights: Mapping[int, int] | None = None
    initial_witness: frozenset[int] | None = None


@dataclass(frozen=True)
class MaxResult:
    """Best value found, a witness achieving it, and the run counters."""

    alpha: int
    witness: frozenset[int]
    stats: SearchStats


def threshold_search(
    g: Graph,
    k: int,
    mode: str = "all",
    *,
    order: ImpositionOrder | None = None,
    trace: TraceHook | None = None,
    timeout_s: float | None = None,
):
    """Standard run that throws away every row whose w_max drops to <= k.

    mode="all": returns (finalized rows, stats); the members of size > k of
    those rows are exactly the anticliques of size > k.  mode="first": stops
    at the first finalized row and returns (its largest member, stats), or
    (None, stats) when no anticlique exceeds k.
    """
    if k < 0:
        raise ConfigurationError(f"threshold must be non-negative, got {k}")
    if mode not in ("all", "first"):
        raise ConfigurationError(f"unknown threshold mode {mode!r}")
    ord_ = _resolve_order(g, order)
    seq = ord_.order
    stats = SearchStats()
    deadline = _deadline(timeout_s)
    survivors: list[Row] = []
    root = full_row(g.v)
    if root.w_max() <= k:
        stats.deleted += 1
        return (([], stats) if mode == "all" else (None, stats))

    def pruned(victim: Row) -> None:
        stats.deleted += 1
        if trace:
            trace("prune", {"row": victim.debug(), "bound": victim.w_max(), "limit": k})

    stack = [root]
    stats.peak_stack = 1
    while stack:
        _check_deadline(deadline)
        row = stack.pop()
        if row.pa < len(seq) and anti_implication_holds(row, seq[row.pa], g.adjacency[seq[row.pa]]):
            stats.trivial_changes += 1
            row.pa += 1
        alive = True
        while row.pa < len(seq):
            t = seq[row.pa]
            outcome = impose(row, t, g.adjacency[t])
            if trace:
                trace("impose", {"t": t, "outcome": type(outcome).__name__.lower()})
            if isinstance(outcome, Unchanged):
                stats.trivial_changes += 1
                row.pa += 1
            elif isinstance(outcome, Mutated):
                stats.trivial_changes += 1
                son = outcome.row
                son.pa += 1
                if son.w_max() <= k:
                    pruned(son)
                    alive = False
                    break
                row = son
            else:
                stats.rsp += 1
                zero, one = outcome.zero_son, outcome.one_son
                zero.pa = one.pa = row.pa + 1
                zero_ok = zero.w_max() > k
                one_ok = one.w_max() > k
                if not zero_ok:
                    pruned(zero)
                if not one_ok:
                    pruned(one)
                if zero_ok and one_ok:
                    stack.append(zero)
                    stats.peak_stack = max(stats.peak_stack, len(stack) + 1)
                    row = one
                elif one_ok:
                    row = one
                elif zero_ok:
                    row = zero
                else:
                    alive = False
                    break
        if not alive:
            continue
        stats.finalized += 1
        if trace:
            trace("finalize", {"row": row.debug(), "w_max": row.w_max()})
        if mode == "first":
            return row.max_member(), stats
        survivors.append(row)
    return ((survivors, stats) if mode == "all" else (None, stats))


def max_anticlique(
    g: Graph,
    opts: SearchOptions | None = None,
    *,
    trace: TraceHook | None = None,
    timeout_s: float | None = None,
) -> MaxResult:
    """Exact maximum anticlique via the currentmax branch and bound.

    Every row carries its w_max bound; rows are deleted the moment the bound
    falls to currentmax or below (ties pruned), and currentmax rises whenever
    a finalized row beats it.  With weights set, the weighted bound is used
    and the result is the maximum total weight.
    """
    opts = opts or SearchOptions()
    wt = _weight_vector(g, opts.weights) if opts.weights is not None else None
    bound0, witness0 = _initial_state(g, opts, wt)
    ord_ = _resolve_order(g, opts.order)
    best, best_set, stats = _currentmax_search(
        g, ord_, bound0, witness0, wt, trace, _deadline(timeout_s)
    )
    assert best_set is not None, "search ended without any witness"
    return MaxResult(alpha=best, witness=best_set, stats=stats)


def max_weight_anticlique(
    g: Graph,
    weights: Mapping[int, int],
    *,
    order: ImpositionOrder | None = None,
    trace: TraceHook | None = None,
    timeout_s: float | None = None,
) -> MaxResult:
    """Maximum total-weight anticlique for strictly positive integer weights."""
    opts = SearchOptions(order=order, weights=weights)
    return max_anticlique(g, opts, trace=trace, timeout_s=timeout_s)


def all_max_anticliques(
    g: Graph, *, timeout_s: float | None = None
) -> tuple[int, list[frozenset[int]]]:
    """All maximum-cardinality anticliques, each exactly once, sorted.

    Phase 1 learns alpha with the currentmax search; phase 2 reruns the
    threshold variant at k = alpha - 1 from scratch (phase-1 pruning discards
    rows that still hold equal-sized maxima, so its rows cannot be reused).
    """
    res = max_anticlique(g, timeout_s=timeout_s)
    rows, _stats = threshold_search(g, res.alpha - 1, "all", timeout_s=timeout_s)
    sets = [X for row in rows for X in row.expand(res.alpha)]
    sets.sort(key=sorted)
    return res.alpha, sets


def core(g: Graph, *, timeout_s: float | None = None) -> frozenset[int]:
    """Intersection of all maximum anticliques."""
    _alpha, sets = all_max_anticliques(g, timeout_s=timeout_s)
    return frozenset.intersection(*sets)


def bipartite_options(g: Graph) -> SearchOptions:
    """Search options exploiting bipartiteness.

    The smaller color class is a vertex cover, so imposing only its
    anti-implications suffices; the larger class is itself an anticlique and
    seeds currentmax.
    """
    parts = bipartition(g)
    if parts is None:
        raise ConfigurationError("graph is not bipartite")
    small, big = parts
    return SearchOptions(
        order=cover_order(g, small),
        initial_bound=len(big),
        initial_witness=frozenset(big),
    )


# -- internals --------------------------------------------------------------


def _deadline(timeout_s: float | None) -> float | None:
    return None if timeout_s is None else time.monotonic() + timeout_s


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SearchTimeout("search exceeded its time budget")


def _weight_vector(g: Graph, weights: Mapping[int, int]) -> list[int]:
    wt = [0] + [1] * g.v
    for vertex, weight in weights.items():
        if not 1 <= vertex <= g.v:
            raise ConfigurationError(f"weight for unknown vertex {vertex}")
        if not isinstance(weight, int) or weight < 1:
            raise ConfigurationError(
                f"weights must be positive integers, got {weight!r} for vertex {vertex}"
            )
        wt[vertex] = weight
    return wt


def _weighted_bound(row: Row, wt: list[int]) -> int:
    """Largest member weight: free and forced-in weight plus, per group, the
    better of keeping the premise or the whole anticonclusion."""
    total = 0
    for p in range(1, row.v + 1):
        if row.sym[p] in (ONE, TWO):
            total += wt[p]
    for gr in row.groups.values():
        total += max(wt[gr.prem], sum(wt[q] for q in gr.anti))
    return total


def _weighted_member(row: Row, wt: list[int]) -> frozenset[int]:
    """A member achieving the weighted bound; prefers the anticonclusion on ties."""
    member = [p for p in range(1, row.v + 1) if row.sym[p] in (ONE, TWO)]
    for gr in row.groups.values():
        if wt[gr.prem] > sum(wt[q] for q in gr.anti):
            member.append(gr.prem)
        else:
            member.extend(gr.anti)
    return frozenset(member)


def _is_anticlique(g: Graph, X: frozenset[int]) -> bool:
    return all(X.isdisjoint(g.adjacency[y]) for y in X)


def _initial_state(
    g: Graph, opts: SearchOptions, wt: list[int] | None
) -> tuple[int, frozenset[int] | None]:
    witness = opts.initial_witness
    if witness is not None:
        if not all(1 <= p <= g.v for p in witness):
            raise ConfigurationError("initial witness out of range")
        if not _is_anticlique(g, witness):
            raise ConfigurationError("initial witness is not an anticlique")
        value = sum(wt[p] for p in witness) if wt is not None else len(witness)
        if value < opts.initial_bound:
            raise ConfigurationError(
                f"initial witness achieves {value}, below the claimed bound "
                f"{opts.initial_bound}"
            )
        return value, witness
    if opts.initial_bound > 0:
        raise ConfigurationError(
            "a positive initial bound needs an initial witness achieving it"
        )
    return 0, None


def _currentmax_search(
    g: Graph,
    order: ImpositionOrder,
    bound0: int,
    witness0: frozenset[int] | None,
    wt: list[int] | None,
    trace: TraceHook | None,
    deadline: float | None,
) -> tuple[int, frozenset[int] | None, SearchStats]:
    seq = order.order
    stats = SearchStats()
    best = bound0
    best_set = witness0
    if wt is None:
        bound = Row.w_max
        extract = Row.max_member
    else:
        def bound(row: Row) -> int:
            return _weighted_bound(row, wt)

        def extract(row: Row) -> frozenset[int]:
            return _weighted_member(row, wt)

    def pruned(victim: Row) -> None:
        stats.deleted += 1
        if trace:
            trace("prune", {"row": victim.debug(), "bound": bound(victim), "limit": best})

    stack = [full_row(g.v)]
    stats.peak_stack = 1
    while stack:
        _check_deadline(deadline)
        row = stack.pop()
        if bound(row) <= best:
            pruned(row)
            continue
        if row.pa < len(seq) and anti_implication_holds(row, seq[row.pa], g.adjacency[seq[row.pa]]):
            stats.trivial_changes += 1
            row.pa += 1
        alive = True
        while row.pa < len(seq):
            t = seq[row.pa]
            outcome = impose(row, t, g.adjacency[t])
            if trace:
                trace("impose", {"t": t, "outcome": type(outcome).__name__.lower()})
            if isinstance(outcome, Unchanged):
                stats.trivial_changes += 1
                row.pa += 1
            elif isinstance(outcome, Mutated):
                stats.trivial_changes += 1
                son = outcome.row
                son.pa += 1
                if bound(son) <= best:
                    pruned(son)
                    alive = False
                    break
                row = son
            else:
                stats.rsp += 1
                zero, one = outcome.zero_son, outcome.one_son
                zero.pa = one.pa = row.pa + 1
                zero_ok = bound(zero) > best
                one_ok = bound(one) > best
                if not zero_ok:
                    pruned(zero)
                if not one_ok:
                    pruned(one)
                if zero_ok and one_ok:
                    stack.append(zero)
                    stats.peak_stack = max(stats.peak_stack, len(stack) + 1)
                    row = one
                elif one_ok:
                    row = one
                elif zero_ok:
                    row = zero
                else:
                    alive = False
                    break
        if not alive:
            continue
        value = bound(row)
        # every check kept the bound strictly above currentmax, so a
        # finalized row always improves it
        stats.finalized += 1
        best = value
        best_set = extract(row)
        if trace:
            trace("improve", {"row": row.debug(), "currentmax": best})
    return best, best_set, stats
