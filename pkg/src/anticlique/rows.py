"""Five-valued rows: compact encodings of families of vertex subsets.

A row assigns one of five symbols to every position 1..v:

  ``0``  the vertex is out of every member set,
  ``1``  the vertex is in every member set,
  ``2``  the vertex is free,
  ``a``  a group premise,
  ``b``  a group anticonclusion position.

Each group couples one premise position with a non-empty set of
anticonclusion positions: whenever the premise belongs to a member set, the
whole anticonclusion must stay out; otherwise all anticonclusion positions
are free.  A single row can thus stand for exponentially many sets, and its
member count, size spectrum and largest member are all available in closed
form without expanding it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

ZERO, ONE, TWO, PREM, ANTI = range(5)

_SYMBOL_CHARS = {ZERO: "0", ONE: "1", TWO: "2"}


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial by coefficient list, index = degree.

    Coefficients are arbitrary-precision; trailing zeros are stripped on
    construction (the zero polynomial keeps a single 0 coefficient).
    """

    coeffs: tuple[int, ...] = (0,)

    def __post_init__(self):
        c = tuple(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if not c:
            c = (0,)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, x: int = 1) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


@dataclass
class Group:
    """One premise position plus its non-empty anticonclusion position set."""

    prem: int
    anti: set[int]


class Row:
    """One five-valued row over positions 1..v.

    ``sym`` and ``gid`` carry a dummy entry at index 0 so positions read
    1-based like every other interface here.  ``gid[p]`` names the group a
    premise or anticonclusion position belongs to (0 elsewhere).  ``pa``
    counts the anti-implications already imposed on this row, i.e. it indexes
    the next pending one in the imposition order.  Rows are value-semantic:
    engines clone before mutating, so rows never share group tables.
    """

    __slots__ = ("v", "sym", "gid", "groups", "pa", "n_zeros", "next_gid")

    def __init__(self, v: int, sym: list[int], gid: list[int],
                 groups: dict[int, Group], pa: int, n_zeros: int, next_gid: int):
        self.v = v
        self.sym = sym
        self.gid = gid
        self.groups = groups
        self.pa = pa
        self.n_zeros = n_zeros
        self.next_gid = next_gid

    # -- construction -----------------------------------------------------

    def clone(self) -> "Row":
        groups = {g: Group(gr.prem, set(gr.anti)) for g, gr in self.groups.items()}
        return Row(self.v, self.sym.copy(), self.gid.copy(), groups,
                   self.pa, self.n_zeros, self.next_gid)

    # -- derived position sets --------------------------------------------

    def zeros(self) -> frozenset[int]:
        return frozenset(p for p in range(1, self.v + 1) if self.sym[p] == ZERO)

    def ones(self) -> frozenset[int]:
        return frozenset(p for p in range(1, self.v + 1) if self.sym[p] == ONE)

    def twos(self) -> frozenset[int]:
        return frozenset(p for p in range(1, self.v + 1) if self.sym[p] == TWO)

    def premset(self) -> frozenset[int]:
        return frozenset(gr.prem for gr in self.groups.values())

    def anticonc(self, k: int) -> frozenset[int]:
        """Anticonclusion positions of the group whose premise sits at k."""
        if self.sym[k] != PREM:
            raise ValueError(f"position {k} holds no premise")
        return frozenset(self.groups[self.gid[k]].anti)

    # -- closed-form queries ----------------------------------------------

    def w_max(self) -> int:
        """Size of the largest member: v - |zeros| - |premises|."""
        return self.v - self.n_zeros - len(self.groups)

    def member_count(self) -> int:
        """Exact number of member sets: 2^|twos| * prod(1 + 2^|anti_g|)."""
        n_twos = sum(1 for p in range(1, self.v + 1) if self.sym[p] == TWO)
        count = 1 << n_twos
        for gr in self.groups.values():
            count *= (1 << len(gr.anti)) + 1
        return count

    def spectrum(self) -> Polynomial:
        """Size distribution of the members, as an exact integer polynomial.

        Coefficient k counts the k-element members.  Computed as
        x^|ones| * (1+x)^|twos| * prod over groups of (x + (1+x)^|anti_g|).
        """
        n_ones = n_twos = 0
        for p in range(1, self.v + 1):
            if self.sym[p] == ONE:
                n_ones += 1
            elif self.sym[p] == TWO:
                n_twos += 1
        poly = Polynomial(tuple([0] * n_ones + [1]))
        poly = poly * Polynomial(tuple(comb(n_twos, k) for k in range(n_twos + 1)))
        for gr in self.groups.values():
            beta = len(gr.anti)
            factor = [comb(beta, k) for k in range(beta + 1)]
            factor[1] += 1
            poly = poly * Polynomial(tuple(factor))
        return poly

    def max_member(self) -> frozenset[int]:
        """A largest member: everything except zeros and premise positions."""
        return frozenset(
            p for p in range(1, self.v + 1) if self.sym[p] not in (ZERO, PREM)
        )

    def contains(self, X: Iterable[int]) -> bool:
        """True iff X is one of the member sets this row encodes."""
        xs = frozenset(X)
        for p in xs:
            if not 1 <= p <= self.v:
                raise ValueError(f"vertex {p} out of range 1..{self.v}")
            if self.sym[p] == ZERO:
                return False
        for p in range(1, self.v + 1):
            if self.sym[p] == ONE and p not in xs:
                return False
        for gr in self.groups.values():
            if gr.prem in xs and not xs.isdisjoint(gr.anti):
                return False
        return True

    def expand(self, min_size: int = 0) -> Iterator[frozenset[int]]:
        """Yield every member of size >= min_size exactly once.

        Deterministic order: free-position subsets first (lexicographic over
        ascending positions), then group choices nested premise-first, anti
        subsets lexicographic, groups taken in premise-position order.
        """
        ones = [p for p in range(1, self.v + 1) if self.sym[p] == ONE]
        twos = tuple(p for p in range(1, self.v + 1) if self.sym[p] == TWO)
        choice_lists = []
        for gr in sorted(self.groups.values(), key=lambda gr: gr.prem):
            choices: list[tuple[int, ...]] = [(gr.prem,)]
            choices.extend(_subsets_lex(tuple(sorted(gr.anti))))
            choice_lists.append(choices)
        for free in _subsets_lex(twos):
            base = ones + list(free)
            for combo in itertools.product(*choice_lists):
                member = set(base)
                for part in combo:
                    member.update(part)
                if len(member) >= min_size:
                    yield frozenset(member)

    # -- diagnostics -------------------------------------------------------

    def debug(self) -> str:
        """Compact rendering like ``(a1,0,2,b1,b1)``."""
        parts = []
        for p in range(1, self.v + 1):
            s = self.sym[p]
            if s in _SYMBOL_CHARS:
                parts.append(_SYMBOL_CHARS[s])
            elif s == PREM:
                parts.append(f"a{self.gid[p]}")
            else:
                parts.append(f"b{self.gid[p]}")
        return "(" + ",".join(parts) + ")"

    def validate(self) -> None:
        """Raise AssertionError if the symbol array and group table disagree."""
        if len(self.sym) != self.v + 1 or len(self.gid) != self.v + 1:
            raise AssertionError("symbol arrays have wrong length")
        zeros = 0
        for p in range(1, self.v + 1):
            s = self.sym[p]
            if s == ZERO:
                zeros += 1
            if s in (PREM, ANTI):
                g = self.gid[p]
                if g not in self.groups:
                    raise AssertionError(f"position {p} names unknown group {g}")
                gr = self.groups[g]
                if s == PREM and gr.prem != p:
                    raise AssertionError(f"premise mismatch at {p}")
                if s == ANTI and p not in gr.anti:
                    raise AssertionError(f"anticonclusion mismatch at {p}")
            elif self.gid[p] != 0:
                raise AssertionError(f"stale group id at {p}")
        if zeros != self.n_zeros:
            raise AssertionError("zero counter out of sync")
        for g, gr in self.groups.items():
            if not gr.anti:
                raise AssertionError(f"group {g} has empty anticonclusion")
            if gr.prem in gr.anti:
                raise AssertionError(f"group {g} premise inside anticonclusion")
            if self.sym[gr.prem] != PREM or self.gid[gr.prem] != g:
                raise AssertionError(f"group {g} premise not marked")
            for q in gr.anti:
                if self.sym[q] != ANTI or self.gid[q] != g:
                    raise AssertionError(f"group {g} anticonclusion not marked at {q}")

    def _canonical(self):
        out = []
        for p in range(1, self.v + 1):
            s = self.sym[p]
            if s in (PREM, ANTI):
                out.append((s, self.groups[self.gid[p]].prem))
            else:
                out.append(s)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Row):
            return NotImplemented
        return self.v == other.v and self._canonical() == other._canonical()

    __hash__ = None

    def __repr__(self):
        return f"Row{self.debug()} pa={self.pa}"


def full_row(v: int) -> Row:
    """The row (2, 2, ..., 2) encoding the whole powerset of 1..v."""
    if v < 1:
        raise ValueError(f"vertex count must be at least 1, got {v}")
    return Row(v, [TWO] * (v + 1), [0] * (v + 1), {}, 0, 0, 1)


def row_from_debug(text: str, pa: int = 0) -> Row:
    """Inverse of Row.debug, handy for fixtures: ``(a1,0,2,b1,b1)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    tokens = [tok.strip() for tok in body.split(",")]
    v = len(tokens)
    sym = [0] * (v + 1)
    gid = [0] * (v + 1)
    prems: dict[int, int] = {}
    antis: dict[int, set[int]] = {}
    for p, tok in enumerate(tokens, start=1):
        if tok in ("0", "1", "2"):
            sym[p] = int(tok)
        elif tok.startswith("a") and tok[1:].isdigit():
            sym[p] = PREM
            gid[p] = int(tok[1:])
            if gid[p] in prems:
                raise ValueError(f"duplicate premise for group {gid[p]}")
            prems[gid[p]] = p
        elif tok.startswith("b") and tok[1:].isdigit():
            sym[p] = ANTI
            gid[p] = int(tok[1:])
            antis.setdefault(gid[p], set()).add(p)
        else:
            raise ValueError(f"bad row symbol {tok!r}")
    if set(prems) != set(antis):
        raise ValueError("every group needs one premise and a non-empty anticonclusion")
    groups = {g: Group(prems[g], antis[g]) for g in prems}
    n_zeros = sum(1 for p in range(1, v + 1) if sym[p] == ZERO)
    next_gid = max(prems, default=0) + 1
    row = Row(v, sym, gid, groups, pa, n_zeros, next_gid)
    row.validate()
    return row


def _subsets_lex(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All subsets of an ascending tuple, lexicographic as sorted tuples."""
    yield ()

    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(items)):
            cur = prefix + (items[i],)
            yield cur
            yield from rec(cur, i + 1)

    yield from rec((), 0)
