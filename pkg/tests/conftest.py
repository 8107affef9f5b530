"""Shared fixtures and independent brute-force helpers for the test suite.

The helpers here re-derive row and graph semantics directly from their
definitions (bitmask sweeps over all subsets) so that agreement with the
library is meaningful evidence, not circularity.
"""

from __future__ import annotations

import random

import pytest

from anticlique import Graph, make_graph
from anticlique.rows import ANTI, ONE, PREM, TWO, ZERO, Group, Row

G5_DIMACS = """c five-vertex worked example
p edge 5 6
e 1 2
e 1 4
e 1 5
e 2 4
e 3 4
e 4 5
"""

EXAMPLE_ROW_13 = "(2,0,1,2,a1,b1,b1,b1,a2,b2,a3,b3,b3)"


@pytest.fixture
def g5() -> Graph:
    return make_graph(5, [(1, 2), (1, 4), (1, 5), (2, 4), (3, 4), (4, 5)])


def graph_from_edges(v: int, edges) -> Graph:
    return make_graph(v, edges)


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def random_bipartite(v1: int, v2: int, d: float, seed: int) -> Graph:
    """Seeded bipartite graph on classes {1..v1} and {v1+1..v1+v2}."""
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(1, v1 + 1)
        for j in range(v1 + 1, v1 + v2 + 1)
        if rng.random() < d
    ]
    return make_graph(v1 + v2, edges)


def induced_subgraph(g: Graph, keep: set[int]) -> Graph:
    """Subgraph on ``keep``, relabeled 1..|keep| preserving vertex order."""
    ordered = sorted(keep)
    relabel = {y: i + 1 for i, y in enumerate(ordered)}
    edges = [
        (relabel[i], relabel[j]) for i, j in g.edges if i in keep and j in keep
    ]
    return make_graph(max(len(ordered), 1), edges)


# -- independent row semantics ------------------------------------------------


def row_masks(row: Row):
    """Bitmask view of the row's declared structure (bit p-1 = vertex p)."""
    zero_mask = one_mask = 0
    for p in range(1, row.v + 1):
        if row.sym[p] == ZERO:
            zero_mask |= 1 << (p - 1)
        elif row.sym[p] == ONE:
            one_mask |= 1 << (p - 1)
    groups = [
        (gr.prem - 1, sum(1 << (q - 1) for q in gr.anti))
        for gr in row.groups.values()
    ]
    return zero_mask, one_mask, groups


def member_masks_bruteforce(row: Row) -> list[int]:
    """All member sets of the row by direct semantic evaluation over 2^v masks."""
    zero_mask, one_mask, groups = row_masks(row)
    out = []
    for mask in range(1 << row.v):
        if mask & zero_mask:
            continue
        if mask & one_mask != one_mask:
            continue
        if any((mask >> pb) & 1 and (mask & am) for pb, am in groups):
            continue
        out.append(mask)
    return out


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(p + 1 for p in range(mask.bit_length()) if (mask >> p) & 1)


def random_row(rng: random.Random, v: int) -> Row:
    """A random structurally valid row (symbols plus consistent group table)."""
    sym = [TWO] * (v + 1)
    gid = [0] * (v + 1)
    positions = list(range(1, v + 1))
    rng.shuffle(positions)
    groups: dict[int, Group] = {}
    next_gid = 1
    idx = 0
    while idx < len(positions):
        remaining = len(positions) - idx
        roll = rng.random()
        if roll < 0.35 and remaining >= 2 and next_gid <= 3:
            beta = rng.randint(1, min(3, remaining - 1))
            prem, anti = positions[idx], positions[idx + 1 : idx + 1 + beta]
            sym[prem] = PREM
            gid[prem] = next_gid
            for q in anti:
                sym[q] = ANTI
                gid[q] = next_gid
            groups[next_gid] = Group(prem, set(anti))
            next_gid += 1
            idx += 1 + beta
        else:
            p = positions[idx]
            sym[p] = rng.choice((ZERO, ONE, TWO))
            idx += 1
    n_zeros = sum(1 for p in range(1, v + 1) if sym[p] == ZERO)
    row = Row(v, sym, gid, groups, 0, n_zeros, next_gid)
    row.validate()
    return row


def is_anticlique(g: Graph, X) -> bool:
    xs = set(X)
    return all(not (i in xs and j in xs) for i, j in g.edges)


def all_anticliques(g: Graph) -> set[frozenset[int]]:
    """Every independent set, by direct edge checks over all subsets."""
    out = set()
    for mask in range(1 << g.v):
        X = mask_to_set(mask)
        if is_anticlique(g, X):
            out.add(X)
    return out
