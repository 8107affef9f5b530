"""Imposing one anti-implication on a five-valued row.

``impose(row, t, neighbors)`` restricts the family encoded by ``row`` to the
member sets X with: t in X implies neighbors(t) and X are disjoint.  The
result is either the same family unchanged, a single rewritten row, or a
split into two disjoint rows (t forced out vs t forced in).  The input row is
never mutated; engines run impositions in increasing vertex order, so the
symbol at t is always 0, 2 or b when this is called.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .rows import ANTI, ONE, PREM, TWO, ZERO, Group, Row


@dataclass(frozen=True)
class Unchanged:
    """The anti-implication already holds for every member."""


@dataclass(frozen=True)
class Mutated:
    """The family shrank but stayed a single row."""

    row: Row


@dataclass(frozen=True)
class Split:
    """Disjoint split: zero_son excludes t, one_son includes t."""

    zero_son: Row
    one_son: Row


ImpositionOutcome = Union[Unchanged, Mutated, Split]

UNCHANGED = Unchanged()


def impose(row: Row, t: int, neighbors: Iterable[int]) -> ImpositionOutcome:
    """Impose the anti-implication t -> not-neighbors on ``row``.

    Dispatch on the symbol rho at t and the live (non-zero) part of the
    neighborhood:

    * rho = 0, or no live neighbor: already satisfied.
    * rho = 2 with a 1 among the neighbors: t is forced out.
    * rho = 2 with only free neighbors: t becomes a fresh premise over them.
    * rho = 2 otherwise: split into t-out (t := 0) and t-in.
    * rho = b with a 1 among the neighbors: t forced out of its group.
    * rho = b otherwise: split analogously.

    The t-in son zeroes the whole neighborhood; groups whose premise got
    zeroed dissolve (their surviving anticonclusion goes free), groups whose
    anticonclusion emptied dissolve (their premise goes free), and the group
    owning t dissolves with its premise forced out.
    """
    rho = row.sym[t]
    if rho in (ONE, PREM):
        raise AssertionError(
            f"anti-implication imposed at position {t} holding symbol "
            f"{'1' if rho == ONE else 'a'}; processing order violated"
        )
    if rho == ZERO:
        return UNCHANGED
    live = [p for p in neighbors if row.sym[p] != ZERO]
    if not live:
        return UNCHANGED
    if rho == ANTI:
        if any(row.sym[p] == ONE for p in live):
            return Mutated(_drop_from_group(row, t))
        return Split(_drop_from_group(row, t), _take(row, t, live))
    # rho == TWO
    if any(row.sym[p] == ONE for p in live):
        son = row.clone()
        son.sym[t] = ZERO
        son.n_zeros += 1
        return Mutated(son)
    if all(row.sym[p] == TWO for p in live):
        return Mutated(_new_group(row, t, live))
    zero_son = row.clone()
    zero_son.sym[t] = ZERO
    zero_son.n_zeros += 1
    return Split(zero_son, _take(row, t, live))


def anti_implication_holds(row: Row, t: int, neighbors: Iterable[int]) -> bool:
    """True iff t -> not-neighbors already holds for every member of the row.

    That is the case when t is forced out, when every neighbor is forced out,
    and also when t is an anticonclusion position whose only non-zero
    neighbor is the own group's premise: t in a member already forces that
    premise out (contrapositive), so nothing is left to impose.  The engines
    run this test once whenever a row is popped off the working stack; rows
    it clears keep their shape instead of going through a redundant split.
    """
    rho = row.sym[t]
    if rho == ZERO:
        return True
    own_prem = row.groups[row.gid[t]].prem if rho == ANTI else 0
    return all(row.sym[p] == ZERO or p == own_prem for p in neighbors)


def _drop_from_group(row: Row, t: int) -> Row:
    """Force t out: zero it and detach it from its group.

    If that empties the group's anticonclusion, the premise no longer
    constrains anything and goes free.
    """
    son = row.clone()
    g = son.gid[t]
    son.sym[t] = ZERO
    son.gid[t] = 0
    son.n_zeros += 1
    grp = son.groups[g]
    grp.anti.discard(t)
    if not grp.anti:
        son.sym[grp.prem] = TWO
        son.gid[grp.prem] = 0
        del son.groups[g]
    return son


def _new_group(row: Row, t: int, live: list[int]) -> Row:
    """t becomes a fresh premise over its free neighbors."""
    son = row.clone()
    g = son.next_gid
    son.next_gid += 1
    son.sym[t] = PREM
    son.gid[t] = g
    for p in live:
        son.sym[p] = ANTI
        son.gid[p] = g
    son.groups[g] = Group(t, set(live))
    return son


def _take(row: Row, t: int, live: list[int]) -> Row:
    """The t-in son: t := 1 and the whole neighborhood zeroed.

    Callers guarantee no live neighbor holds a 1.  Group repercussions: the
    group owning t (if any) dissolves with its premise zeroed and survivors
    freed; groups losing their premise to the zeroing dissolve likewise;
    groups whose anticonclusion empties free their premise.
    """
    son = row.clone()
    if son.sym[t] == ANTI:
        grp = son.groups.pop(son.gid[t])
        grp.anti.discard(t)
        son.sym[grp.prem] = ZERO
        son.gid[grp.prem] = 0
        son.n_zeros += 1
        for q in grp.anti:
            son.sym[q] = TWO
            son.gid[q] = 0
    son.sym[t] = ONE
    son.gid[t] = 0
    prem_zeroed: list[int] = []
    touched: list[int] = []
    for p in live:
        s = son.sym[p]
        if s == ZERO:
            continue
        if s == ONE:
            raise AssertionError(f"live neighbor {p} holds 1 in a split branch")
        g = son.gid[p]
        son.sym[p] = ZERO
        son.gid[p] = 0
        son.n_zeros += 1
        if s == PREM:
            prem_zeroed.append(g)
        elif s == ANTI:
            son.groups[g].anti.discard(p)
            touched.append(g)
    for g in prem_zeroed:
        grp = son.groups.pop(g)
        for q in grp.anti:
            son.sym[q] = TWO
            son.gid[q] = 0
    for g in touched:
        grp = son.groups.get(g)
        if grp is not None and not grp.anti:
            son.sym[grp.prem] = TWO
            son.gid[grp.prem] = 0
            del son.groups[g]
    return son
