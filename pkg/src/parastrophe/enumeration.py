"""Backtracking enumeration of reduced Latin squares.

Squares are built row by row from reduced Latin rectangles; rows are tried in
lexicographic order, so squares come out in row-major lexicographic order.

With pruning switched on, a rectangle is abandoned once it provably cannot
extend to the lexicographically smallest reduced member of its isotopy class.
The test uses row-pair quotients ``Y_i Y_j^-1``: in any reduced isotope the
second row is conjugate to one of these quotients, so the smallest reduced
isotope has as its second row the smallest derangement whose cycle type occurs
among the quotients.  Every coarser class (type, inverse type, main class)
shares that necessary condition, because its smallest member is also the
smallest member of its own isotopy class.
"""
from __future__ import annotations

import functools
import itertools
from concurrent.futures import ProcessPoolExecutor

from .errors import OrderUnsupported
from .latin import LatinSquare
from .permutations import cycle_lengths

MAX_ORDER = 7


def check_order(n: int, allow_order_7: bool = False, limit: int = MAX_ORDER):
    if not 1 <= n <= limit:
        raise OrderUnsupported(f"order {n} is outside 1..{limit}")
    if n == 7 and not allow_order_7:
        raise OrderUnsupported("order 7 is long-running; pass allow_order_7=True (--allow-order-7)")


@functools.lru_cache(maxsize=None)
def min_rows(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically smallest derangement of each fixed-point-free cycle type.

    Keys are sorted cycle-length tuples, values 0-based one-row forms.
    """
    best = {}
    for p in itertools.permutations(range(n)):
        if any(i == v for i, v in enumerate(p)):
            continue
        t = cycle_lengths(p)
        if t not in best:  # permutations() is already lexicographic
            best[t] = p
    return best


@functools.lru_cache(maxsize=None)
def type_rank(n: int) -> dict[tuple[int, ...], int]:
    """Rank of each derangement cycle type by its smallest second row."""
    rows = min_rows(n)
    return {t: k for k, t in enumerate(sorted(rows, key=rows.__getitem__))}


def _invert(row):
    inv = [0] * len(row)
    for i, v in enumerate(row):
        inv[v] = i
    return inv


def _row_fills(n, first, colmask):
    """All rows starting with ``first`` that avoid the symbols in ``colmask``, in lex order."""
    full = (1 << n) - 1
    row = [first] + [-1] * (n - 1)
    avail = [0] * n
    used = 1 << first
    j = 1
    avail[1] = full & ~used & ~colmask[1]
    while j > 0:
        if row[j] >= 0:
            used ^= 1 << row[j]
            row[j] = -1
        a = avail[j]
        if not a:
            j -= 1
            continue
        bit = a & -a
        avail[j] = a ^ bit
        row[j] = bit.bit_length() - 1
        used |= bit
        if j == n - 1:
            yield tuple(row)
        else:
            j += 1
            avail[j] = full & ~used & ~colmask[j]


class _Pruner:
    """Row-pair cycle-type test for partially built reduced squares."""

    def __init__(self, n):
        self.n = n
        self.min_rows = min_rows(n)
        self.rank = type_rank(n)
        self.inverses = [list(range(n))]
        self.row2_rank = None

    def accept(self, k, row) -> bool:
        if k == 1:
            t = cycle_lengths(row)
            if row != self.min_rows[t]:
                return False
            self.row2_rank = self.rank[t]
            return True
        bound = self.row2_rank
        rank = self.rank
        for inv in self.inverses[1:]:
            if rank[cycle_lengths([row[s] for s in inv])] < bound:
                return False
        # pair with the identity first row
        return rank[cycle_lengths(row)] >= bound

    def push(self, row):
        self.inverses.append(_invert(row))

    def pop(self):
        self.inverses.pop()


def iter_reduced_rows(n: int, prune: bool = False, row2=None):
    """Yield reduced squares of order n as tuples of 0-based row tuples.

    ``row2`` restricts the search to one second row (used to split work).
    """
    if n == 1:
        yield ((0,),)
        return
    ident = tuple(range(n))
    rows = [ident]
    colmask = [1 << v for v in ident]
    pruner = _Pruner(n) if prune else None

    def last_row():
        full = (1 << n) - 1
        return tuple((full & ~m).bit_length() - 1 for m in colmask)

    def rec(k):
        if k == n - 1:
            row = last_row()
            if pruner is None or pruner.accept(k, row):
                yield tuple(rows) + (row,)
            return
        cands = [row2] if (k == 1 and row2 is not None) else _row_fills(n, k, colmask)
        for row in cands:
            if any(colmask[j] >> v & 1 for j, v in enumerate(row)):
                continue
            if pruner is not None and not pruner.accept(k, row):
                continue
            rows.append(row)
            for j, v in enumerate(row):
                colmask[j] |= 1 << v
            if pruner is not None:
                pruner.push(row)
            yield from rec(k + 1)
            if pruner is not None:
                pruner.pop()
            for j, v in enumerate(row):
                colmask[j] ^= 1 << v
            rows.pop()

    yield from rec(1)


def _count_two_row_completions(n, colmask):
    # Missing symbols per column form a 2-regular multigraph on the symbols;
    # each cycle can be oriented two ways, column 1's orientation is fixed.
    full = (1 << n) - 1
    adj = [[] for _ in range(n)]
    for m in colmask:
        miss = full & ~m
        a = (miss & -miss).bit_length() - 1
        b = (miss ^ (1 << a)).bit_length() - 1
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    cycles = 0
    for s in range(n):
        if seen[s]:
            continue
        cycles += 1
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return 1 << (cycles - 1)


def count_reduced_fast(n: int, row2=None) -> int:
    """Count reduced squares without building them (no pruning)."""
    if n <= 2:
        return 1
    colmask = [1 << j for j in range(n)]

    def rec(k):
        if k == n - 2:
            return _count_two_row_completions(n, colmask)
        total = 0
        cands = [row2] if (k == 1 and row2 is not None) else _row_fills(n, k, colmask)
        for row in cands:
            if any(colmask[j] >> v & 1 for j, v in enumerate(row)):
                continue
            for j, v in enumerate(row):
                colmask[j] |= 1 << v
            total += rec(k + 1)
            for j, v in enumerate(row):
                colmask[j] ^= 1 << v
        return total

    return rec(1)


def second_rows(n: int):
    """Possible second rows of a reduced square, in lexicographic order."""
    if n < 2:
        return []
    colmask = [1 << j for j in range(n)]
    return list(_row_fills(n, 1, colmask))


def _count_part(args):
    n, prune, row2 = args
    if not prune:
        return count_reduced_fast(n, row2)
    return sum(1 for _ in iter_reduced_rows(n, True, row2))


def enumerate_reduced(n: int, pruning: bool = False, sink=None, *,
                      allow_order_7: bool = False, workers: int = 1) -> int:
    """Stream reduced squares of order n into ``sink`` and return how many were streamed.

    With ``pruning`` on, only squares that pass the row-pair test are streamed
    (a superset of every class representative), so the return value is the
    number of surviving candidates rather than the full count.
    """
    check_order(n, allow_order_7)
    if sink is None:
        if n <= 2:
            return 1
        parts = [(n, pruning, r) for r in second_rows(n)]
        if workers > 1:
            with ProcessPoolExecutor(workers) as ex:
                return sum(ex.map(_count_part, parts))
        return sum(map(_count_part, parts))
    count = 0
    for rows in iter_reduced_rows(n, pruning):
        sink(LatinSquare._raw(rows))
        count += 1
    return count
