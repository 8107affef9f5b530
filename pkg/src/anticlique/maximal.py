"""Inclusion-maximal anticliques and chromatic number via minimum cover.

Every finalized row contributes its row-wise maximal members (one choice per
group: premise or full anticonclusion).  An index of pile sets by vertex
membership then sieves out the sets dominated across rows.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import ceil
from typing import Iterable

from .enumerator import ImpositionOrder, SearchStats, run_standard
from .errors import GuardExceeded
from .graph import Graph
from .rows import ONE, TWO, Row

CHROMATIC_GUARD_ENV = "ANTICLIQUE_CHROMATIC_MAX_V"
DEFAULT_CHROMATIC_MAX_V = 30


def row_maximal_members(row: Row) -> list[frozenset[int]]:
    """The 2^s inclusion-maximal members of one row.

    Each takes all forced and free positions, plus per group either the
    premise or the whole anticonclusion.
    """
    base = [p for p in range(1, row.v + 1) if row.sym[p] in (ONE, TWO)]
    sets = [frozenset(base)]
    for gr in sorted(row.groups.values(), key=lambda gr: gr.prem):
        sets = [
            prev | extra
            for prev in sets
            for extra in (frozenset((gr.prem,)), frozenset(gr.anti))
        ]
    return sets


class ContainIndex:
    """Pile of incomparable sets, indexed by vertex membership.

    ``contain[a]`` lists the indices of pile sets containing vertex a, so a
    candidate X is dominated iff the intersection of contain[a] over a in X
    is non-empty, and the pile sets X dominates are the ones outside the
    union of contain[a] over a not in X.  Indices of removed sets are never
    reused.
    """

    def __init__(self, v: int):
        self.v = v
        self.pile: dict[int, frozenset[int]] = {}
        self.contain: list[set[int]] = [set() for _ in range(v + 1)]
        self.dominated = 0   # candidates rejected (a pile superset exists)
        self.removed = 0     # pile sets displaced by an admitted candidate
        self._next = 0

    def add(self, X: frozenset[int]) -> bool:
        """Admit X unless a pile set contains it; drop pile sets X contains."""
        if not X:
            if self.pile:
                self.dominated += 1
                return False
        else:
            holders: set[int] | None = None
            for a in X:
                holders = set(self.contain[a]) if holders is None else holders & self.contain[a]
                if not holders:
                    break
            if holders:
                self.dominated += 1
                return False
        outside = set()
        for a in range(1, self.v + 1):
            if a not in X:
                outside |= self.contain[a]
        doomed = set(self.pile) - outside
        for i in doomed:
            for a in self.pile.pop(i):
                self.contain[a].discard(i)
        self.removed += len(doomed)
        idx = self._next
        self._next += 1
        self.pile[idx] = X
        for a in X:
            self.contain[a].add(idx)
        return True

    def sets(self) -> list[frozenset[int]]:
        return list(self.pile.values())


def sieve_maximal(sets: Iterable[frozenset[int]], v: int) -> list[frozenset[int]]:
    """Exactly the inclusion-maximal sets of the input, duplicates collapsed."""
    index = ContainIndex(v)
    for X in sets:
        index.add(frozenset(X))
    return index.sets()


@dataclass(frozen=True)
class MaximalFamily:
    """Sieve outcome plus the counters behind it."""

    sets: list[frozenset[int]]
    candidates: int   # row-wise maximal sets fed to the sieve
    dominated: int    # candidates some pile set already contained
    removed: int      # pile sets displaced by later candidates
    stats: SearchStats


def maximal_family(g: Graph, order: ImpositionOrder | None = None) -> MaximalFamily:
    """All inclusion-maximal anticliques of g, with sieve counters.

    The sieve always runs; cross-row domination is rare in practice, and the
    counters make that observable rather than assumed.
    """
    rows, stats = run_standard(g, order)
    index = ContainIndex(g.v)
    candidates = 0
    for row in rows:
        for X in row_maximal_members(row):
            candidates += 1
            index.add(X)
    sets = sorted(index.sets(), key=sorted)
    return MaximalFamily(sets, candidates, index.dominated, index.removed, stats)


def maximal_anticliques(g: Graph, order: ImpositionOrder | None = None) -> list[frozenset[int]]:
    """All inclusion-maximal anticliques, sorted lexicographically."""
    return maximal_family(g, order).sets


def chromatic_number(
    g: Graph, *, max_v: int | None = None
) -> tuple[int, list[frozenset[int]]]:
    """Exact chromatic number as a minimum cover of V by anticliques.

    Candidates are the row-wise maximal sets of a standard run (deduplicated,
    not sieved; superfluous non-maximal sets cannot hurt a minimum cover).
    Branch and bound: branch on the covering sets of the most constrained
    uncovered vertex, largest uncovered-coverage first with lexicographic
    tie-break, pruned by ceil(uncovered / largest set size).  Desk scale only:
    refuses above the guard (ANTICLIQUE_CHROMATIC_MAX_V, default 30).
    """
    chi, cover, _stats = chromatic_with_stats(g, max_v=max_v)
    return chi, cover


def chromatic_with_stats(
    g: Graph, *, max_v: int | None = None
) -> tuple[int, list[frozenset[int]], SearchStats]:
    """chromatic_number plus the counters of the candidate-collection run."""
    guard = max_v if max_v is not None else int(
        os.environ.get(CHROMATIC_GUARD_ENV, DEFAULT_CHROMATIC_MAX_V)
    )
    if g.v > guard:
        raise GuardExceeded(
            f"chromatic_number refuses v={g.v} above its size guard {guard}; "
            f"raise {CHROMATIC_GUARD_ENV} to override"
        )
    rows, stats = run_standard(g)
    seen: set[frozenset[int]] = set()
    for row in rows:
        seen.update(row_maximal_members(row))
    candidates = sorted(seen, key=sorted)
    covering: dict[int, list[int]] = {y: [] for y in range(1, g.v + 1)}
    for i, X in enumerate(candidates):
        for y in X:
            covering[y].append(i)
    max_size = max(len(X) for X in candidates)
    universe = frozenset(range(1, g.v + 1))
    best: list[int] | None = None

    def descend(uncovered: frozenset[int], chosen: list[int]) -> None:
        nonlocal best
        if not uncovered:
            if best is None or len(chosen) < len(best):
                best = list(chosen)
            return
        lower = len(chosen) + ceil(len(uncovered) / max_size)
        if best is not None and lower >= len(best):
            return
        y = min(uncovered, key=lambda u: (len(covering[u]), u))
        options = sorted(
            covering[y],
            key=lambda i: (-len(candidates[i] & uncovered), sorted(candidates[i])),
        )
        for i in options:
            chosen.append(i)
            descend(uncovered - candidates[i], chosen)
            chosen.pop()

    descend(universe, [])
    assert best is not None, "every vertex lies in some row-wise maximal set"
    return len(best), [candidates[i] for i in best], stats
