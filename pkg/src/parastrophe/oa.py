"""The 3×n² orthogonal-array form of a Latin square.

Column t of the array is the triplet (row, column, symbol) of one cell.
Permuting the three component rows of the array and reading it back as a
square gives the conjugates; this is the slow reference route.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import O1Violation, O2Violation, O3Violation, ParseError
from .latin import LatinSquare


@dataclass(frozen=True)
class OrthogonalArray:
    order: int
    columns: tuple[tuple[int, int, int], ...]  # 1-based triplets

    @property
    def component_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.columns)) if self.columns else ((), (), ())

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.component_rows)

    @classmethod
    def parse(cls, text: str) -> OrthogonalArray:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 3:
            raise ParseError(len(lines), "an array needs exactly three lines")
        try:
            rows = [[int(t) for t in ln.split()] for ln in lines]
        except ValueError:
            raise ParseError(0, "non-integer entry") from None
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ParseError(0, "rows have different lengths")
        n = round(m ** 0.5)
        if n * n != m:
            raise ParseError(0, f"row length {m} is not a perfect square")
        return cls(n, tuple(zip(*rows)))


def to_oa(square: LatinSquare) -> OrthogonalArray:
    n = square.order
    cols = tuple(
        (i + 1, j + 1, v + 1) for i, row in enumerate(square._rows) for j, v in enumerate(row)
    )
    return OrthogonalArray(n, cols)


def check_oa(oa: OrthogonalArray) -> None:
    """Raise the first of O1, O2, O3 that ``oa`` violates."""
    n = oa.order
    if len(oa.columns) != n * n:
        raise O2Violation(f"expected {n * n} columns, got {len(oa.columns)}")
    for k, comp in enumerate(oa.component_rows, 1):
        bad = [v for v in comp if not 1 <= v <= n]
        if bad:
            raise O1Violation(f"component row {k} contains {bad[0]}, outside 1..{n}")
    for k, comp in enumerate(oa.component_rows, 1):
        counts = Counter(comp)
        for v in range(1, n + 1):
            if counts[v] != n:
                raise O2Violation(f"value {v} appears {counts[v]} times in component row {k}")
    # Two triplets agreeing in two positions means some coordinate pair repeats.
    for a, b in ((0, 1), (0, 2), (1, 2)):
        seen = {}
        for t, col in enumerate(oa.columns, 1):
            pair = (col[a], col[b])
            if pair in seen:
                raise O3Violation(seen[pair], t)
            seen[pair] = t


def from_oa(oa: OrthogonalArray) -> LatinSquare:
    """Rebuild the square by placing symbol c at (a, b) for every column (a, b, c)."""
    check_oa(oa)
    n = oa.order
    grid = [[0] * n for _ in range(n)]
    for a, b, c in oa.columns:
        grid[a - 1][b - 1] = c - 1
    return LatinSquare._raw(grid)


def permute_oa_rows(oa: OrthogonalArray, tag) -> OrthogonalArray:
    """Move component row k of ``oa`` to position eta(k).

    ``tag`` is a :class:`~parastrophe.conjugate.ConjugateTag`; a triplet
    (t1, t2, t3) becomes (t_{eta^-1(1)}, t_{eta^-1(2)}, t_{eta^-1(3)}).
    """
    src = tag.inverse().images0
    cols = tuple((c[src[0]], c[src[1]], c[src[2]]) for c in oa.columns)
    return OrthogonalArray(oa.order, cols)
