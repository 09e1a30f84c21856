"""Latin squares, isotopisms and reduction to standard form."""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import (
    ColumnDuplicate,
    DegreeMismatch,
    EntryOutOfRange,
    IndexOutOfRange,
    NotSquare,
    ParseError,
    RowDuplicate,
)
from .permutations import Permutation, inverse


class LatinSquare:
    """An n×n Latin square on symbols 1..n.

    Cells are exposed 1-based through :attr:`rows`; the 0-based rows are kept
    in ``_rows`` for the transformation code.
    """

    __slots__ = ("_rows",)

    def __init__(self, grid):
        self._rows = validate(grid)._rows

    @classmethod
    def _raw(cls, rows) -> LatinSquare:
        sq = object.__new__(cls)
        sq._rows = tuple(tuple(r) for r in rows)
        return sq

    @classmethod
    def from_array(cls, arr) -> LatinSquare:
        """Build from a 0-based integer array, without validation."""
        return cls._raw(tuple(int(v) for v in row) for row in np.asarray(arr))

    @classmethod
    def from_key(cls, key: bytes, n: int) -> LatinSquare:
        return cls._raw(tuple(key[i * n:(i + 1) * n]) for i in range(n))

    @classmethod
    def cyclic(cls, n: int) -> LatinSquare:
        return cls._raw(tuple((i + j) % n for j in range(n)) for i in range(n))

    @classmethod
    def parse(cls, text: str) -> LatinSquare:
        """Parse the grid text format: n lines of n space-separated integers."""
        grid = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                grid.append([int(t) for t in line.split()])
            except ValueError:
                raise ParseError(lineno, "non-integer entry") from None
        return validate(grid)

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(v + 1 for v in r) for r in self._rows)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self._rows[i - 1][j - 1] + 1

    def row(self, i: int) -> Permutation:
        return line_as_perm(self, "row", i)

    def column(self, j: int) -> Permutation:
        return line_as_perm(self, "column", j)

    def transpose(self) -> LatinSquare:
        return LatinSquare._raw(zip(*self._rows))

    def is_reduced(self) -> bool:
        n = self.order
        natural = tuple(range(n))
        return self._rows[0] == natural and tuple(r[0] for r in self._rows) == natural

    def key(self) -> bytes:
        """Row-major 0-based cell bytes; byte order equals row-major lexicographic order."""
        return bytes(v for r in self._rows for v in r)

    def to_array(self) -> np.ndarray:
        return np.array(self._rows, dtype=np.int8)

    def __eq__(self, other):
        if isinstance(other, LatinSquare):
            return self._rows == other._rows
        return NotImplemented

    def __lt__(self, other):
        return self._rows < other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"LatinSquare({[list(r) for r in self.rows]})"

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def validate(grid) -> LatinSquare:
    """Check a 1-based integer grid and return it as a LatinSquare.

    Raises the first violation found, scanning entries, then rows, then
    columns; coordinates in the errors are 1-based.
    """
    rows = [list(r) for r in grid]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"expected an n×n grid, got row lengths {[len(r) for r in rows]}")
    for i, r in enumerate(rows, 1):
        for j, v in enumerate(r, 1):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 1 <= v <= n:
                raise EntryOutOfRange(i, j, v)
    for i, r in enumerate(rows, 1):
        if len(set(r)) != n:
            raise RowDuplicate(i)
    for j in range(n):
        if len({r[j] for r in rows}) != n:
            raise ColumnDuplicate(j + 1)
    return LatinSquare._raw(tuple(int(v) - 1 for v in r) for r in rows)


def line_as_perm(square: LatinSquare, axis: str, index: int) -> Permutation:
    """Row ``Y_i`` or column ``Z_i`` of a square, as a permutation."""
    n = square.order
    if not 1 <= index <= n:
        raise IndexOutOfRange(f"index {index} not in 1..{n}")
    if axis == "row":
        return Permutation._raw(square._rows[index - 1])
    if axis in ("column", "col"):
        return Permutation._raw(tuple(r[index - 1] for r in square._rows))
    raise ValueError(f"axis must be 'row' or 'column', not {axis!r}")


@dataclass(frozen=True)
class Isotopism:
    """Row permutation ``alpha``, column permutation ``beta``, symbol permutation ``gamma``.

    Row i moves to row alpha(i), column j to column beta(j), and symbol s is
    relabelled gamma(s).
    """

    alpha: Permutation
    beta: Permutation
    gamma: Permutation

    def __post_init__(self):
        if not self.alpha.degree == self.beta.degree == self.gamma.degree:
            raise DegreeMismatch("isotopism components must share one degree")

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @property
    def components(self) -> tuple[Permutation, Permutation, Permutation]:
        return (self.alpha, self.beta, self.gamma)

    @classmethod
    def identity(cls, n: int) -> Isotopism:
        e = Permutation.identity(n)
        return cls(e, e, e)

    @classmethod
    def random(cls, n: int, rng: random.Random | None = None) -> Isotopism:
        return cls(*(Permutation.random(n, rng) for _ in range(3)))

    @classmethod
    def parse(cls, text: str) -> Isotopism:
        parts = [p for p in text.split(";")]
        if len(parts) != 3:
            raise ValueError("isotopism text needs three ';'-separated permutations")
        return cls(*(Permutation.parse(p) for p in parts))

    def inverse(self) -> Isotopism:
        return Isotopism(inverse(self.alpha), inverse(self.beta), inverse(self.gamma))

    def __str__(self):
        return "; ".join(str(p) for p in self.components)


def to_reduced(square: LatinSquare) -> tuple[LatinSquare, Isotopism]:
    """Standard form of ``square`` and an isotopism producing it.

    Columns are permuted first so the first row reads 1..n, then rows so the
    first column does; the symbol permutation stays the identity.
    """
    n = square.order
    first = square._rows[0]
    beta = first  # column j goes to position y_1j
    beta_inv = [0] * n
    for j, b in enumerate(beta):
        beta_inv[b] = j
    cols = [tuple(r[beta_inv[j]] for j in range(n)) for r in square._rows]
    alpha = tuple(r[0] for r in cols)
    out = [None] * n
    for i, r in enumerate(cols):
        out[alpha[i]] = r
    iso = Isotopism(Permutation._raw(alpha), Permutation._raw(tuple(beta)), Permutation.identity(n))
    return LatinSquare._raw(out), iso


def random_latin_square(n: int, rng: random.Random | None = None) -> LatinSquare:
    """A random Latin square of order n by randomized cell-by-cell backtracking.

    Not uniform, but every Latin square of order n has positive probability.
    """
    rng = rng or random.Random()
    full = (1 << n) - 1
    grid = [[0] * n for _ in range(n)]
    rowmask = [0] * n
    colmask = [0] * n
    choices = [None] * (n * n)
    pos = 0
    while pos < n * n:
        i, j = divmod(pos, n)
        if choices[pos] is None:
            free = full & ~(rowmask[i] | colmask[j])
            opts = [s for s in range(n) if free >> s & 1]
            rng.shuffle(opts)
            choices[pos] = opts
        else:
            s = grid[i][j]
            rowmask[i] &= ~(1 << s)
            colmask[j] &= ~(1 << s)
        if choices[pos]:
            s = choices[pos].pop()
            grid[i][j] = s
            rowmask[i] |= 1 << s
            colmask[j] |= 1 << s
            pos += 1
        else:
            choices[pos] = None
            pos -= 1
    return LatinSquare._raw(grid)
