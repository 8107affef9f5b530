"""The standard exclusion run: a LIFO stack of rows, finalized rows streamed out.

Starting from the all-free row, every vertex's anti-implication is imposed in
increasing order on the top row of a working stack.  Splits push the t-out
son below the t-in son; rows whose pending anti-implications are exhausted
are finalized and streamed to the caller.  The finalized rows are pairwise
disjoint families whose union is exactly the set of anticliques (independent
sets) of the graph.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import ConfigurationError, StackBoundWarning
from .graph import Graph
from .imposition import Mutated, Unchanged, anti_implication_holds, impose
from .rows import Polynomial, Row, full_row

TraceHook = Callable[[str, dict], None]


@dataclass
class SearchStats:
    """Counters of one solver run."""

    rsp: int = 0              # row splittings
    trivial_changes: int = 0  # impositions that left the row whole
    peak_stack: int = 0       # largest working-stack size observed
    finalized: int = 0        # rows that reached the output stack
    deleted: int = 0          # rows pruned (0 in a standard run)

    def as_dict(self) -> dict:
        return {
            "rsp": self.rsp,
            "trivial_changes": self.trivial_changes,
            "peak_stack": self.peak_stack,
            "finalized": self.finalized,
            "deleted": self.deleted,
        }


@dataclass(frozen=True)
class ImpositionOrder:
    """The vertices whose anti-implications get imposed, in increasing order.

    ``covers`` asserts the sequence is a vertex cover; a partial order is
    only sound when it covers every edge, which run_standard verifies.
    """

    order: tuple[int, ...]
    covers: bool = False


def full_order(v: int) -> ImpositionOrder:
    return ImpositionOrder(tuple(range(1, v + 1)), covers=True)


def cover_order(g: Graph, vertices: Iterable[int]) -> ImpositionOrder:
    """Validated cover order over a subset of vertices (sorted increasing)."""
    order = ImpositionOrder(tuple(sorted(set(vertices))), covers=True)
    _check_order(g, order)
    return order


def _check_order(g: Graph, order: ImpositionOrder) -> None:
    seq = order.order
    if any(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)):
        raise ConfigurationError("imposition order must be strictly increasing")
    if seq and (seq[0] < 1 or seq[-1] > g.v):
        raise ConfigurationError(f"imposition order out of range 1..{g.v}")
    if seq == tuple(range(1, g.v + 1)):
        return
    if not order.covers:
        raise ConfigurationError(
            "a partial imposition order must be flagged as a vertex cover"
        )
    members = set(seq)
    for i, j in g.edges:
        if i not in members and j not in members:
            raise ConfigurationError(
                f"imposition order misses edge ({i}, {j}); not a vertex cover"
            )


def _resolve_order(g: Graph, order: ImpositionOrder | None) -> ImpositionOrder:
    if order is None:
        return full_order(g.v)
    _check_order(g, order)
    return order


def run_standard(
    g: Graph,
    order: ImpositionOrder | None = None,
    *,
    trace: TraceHook | None = None,
) -> tuple[Iterator[Row], SearchStats]:
    """Run the standard exclusion algorithm; rows stream, nothing is pruned.

    Returns (row iterator, stats); the stats object fills in as the iterator
    is consumed and is complete once it is exhausted.  With ``trace`` set,
    the hook receives an event per imposition plus a final "done" event (and
    the output stack is then kept in memory for the snapshots).
    """
    ord_ = _resolve_order(g, order)
    stats = SearchStats()
    return _standard_gen(g, ord_, stats, trace), stats


def _standard_gen(
    g: Graph, order: ImpositionOrder, stats: SearchStats, trace: TraceHook | None
) -> Iterator[Row]:
    seq = order.order
    stack = [full_row(g.v)]
    output: list[Row] | None = [] if trace else None
    stats.peak_stack = 1
    while stack:
        row = stack.pop()
        # a popped row's pending anti-implication may hold already; test it
        # once, then run the mechanical case analysis until split or finalize
        if row.pa < len(seq) and anti_implication_holds(row, seq[row.pa], g.adjacency[seq[row.pa]]):
            stats.trivial_changes += 1
            row.pa += 1
        while row.pa < len(seq):
            t = seq[row.pa]
            outcome = impose(row, t, g.adjacency[t])
            if isinstance(outcome, Unchanged):
                stats.trivial_changes += 1
                row.pa += 1
            elif isinstance(outcome, Mutated):
                stats.trivial_changes += 1
                row = outcome.row
                row.pa += 1
            else:
                stats.rsp += 1
                zero, one = outcome.zero_son, outcome.one_son
                zero.pa = one.pa = row.pa + 1
                stack.append(zero)
                stats.peak_stack = max(stats.peak_stack, len(stack) + 1)
                row = one
            if trace:
                trace("impose", _snapshot(t, outcome, row, stack, output, seq))
        stats.finalized += 1
        if output is not None:
            output.append(row)
        if trace:
            trace("finalize", {"row": row.debug(), "count": row.member_count()})
        yield row
    if stats.peak_stack > max(g.w, 1):
        warnings.warn(
            f"working stack peaked at {stats.peak_stack} rows, above the "
            f"edge-count bound {g.w}",
            StackBoundWarning,
            stacklevel=2,
        )
    if trace:
        trace("done", {
            "output": [(r.debug(), r.member_count()) for r in (output or [])],
        })


def _snapshot(t, outcome, current, stack, output, seq) -> dict:
    def label(r: Row) -> str:
        pending = seq[r.pa] if r.pa < len(seq) else "-"
        return f"{r.debug()} PA={pending}"

    kind = (
        "unchanged" if isinstance(outcome, Unchanged)
        else "mutated" if isinstance(outcome, Mutated)
        else "split"
    )
    return {
        "t": t,
        "outcome": kind,
        "working": [label(current)] + [label(r) for r in reversed(stack)],
        "output": [f"{r.debug()} N={r.member_count()}" for r in (output or [])],
    }


def fibonacci_number(g: Graph, order: ImpositionOrder | None = None) -> int:
    """Total number of anticliques of g (streaming, rows never stored)."""
    rows, _stats = run_standard(g, order)
    return sum(row.member_count() for row in rows)


def independence_polynomial(g: Graph, order: ImpositionOrder | None = None) -> Polynomial:
    """Coefficient k counts the k-element anticliques; degree is alpha(g)."""
    rows, _stats = run_standard(g, order)
    total = Polynomial((0,))
    for row in rows:
        total = total + row.spectrum()
    return total


def enumerate_anticliques(
    g: Graph, min_size: int = 0, order: ImpositionOrder | None = None
) -> Iterator[frozenset[int]]:
    """Yield every anticlique of size >= min_size exactly once.

    Finalized rows are disjoint, so no deduplication is needed; the order is
    deterministic given the imposition order and the row expansion order.
    """
    rows, _stats = run_standard(g, order)
    for row in rows:
        yield from row.expand(min_size)
