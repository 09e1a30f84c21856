"""The six conjugates (parastrophes) of a Latin square.

:func:`conjugate` builds each one in a single pass from rows, columns and
their inverses. :func:`conjugate_via_oa` goes through the orthogonal array
and is kept as the reference implementation.
"""
from __future__ import annotations

import enum
import re

from .errors import TagError
from .latin import LatinSquare
from .oa import from_oa, permute_oa_rows, to_oa

_ROLES = "rce"


class ConjugateTag(enum.Enum):
    """An element eta of S3, acting on the (row, column, symbol) positions.

    The value is the 1-based one-row form ``(eta(1), eta(2), eta(3))``.
    """

    RCE = (1, 2, 3)
    CRE = (2, 1, 3)
    REC = (1, 3, 2)
    ECR = (3, 2, 1)
    CER = (2, 3, 1)
    ERC = (3, 1, 2)

    @property
    def images0(self) -> tuple[int, int, int]:
        return tuple(v - 1 for v in self.value)

    @property
    def bracket(self) -> str:
        """``[r,c,e]``-style name: the new role of the old row, column and symbol."""
        return "[" + ",".join(_ROLES[v - 1] for v in self.value) + "]"

    @property
    def cycle(self) -> str:
        """Cycle notation such as ``(1 2 3)``; the identity is ``(1)``."""
        img = self.value
        seen = set()
        cycles = []
        for start in (1, 2, 3):
            if start in seen or img[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            k = img[start - 1]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = img[k - 1]
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(cycles) or "(1)"

    def __mul__(self, other: ConjugateTag) -> ConjugateTag:
        # (self * other)(k) = self(other(k))
        return ConjugateTag(tuple(self.value[v - 1] for v in other.value))

    def inverse(self) -> ConjugateTag:
        inv = [0, 0, 0]
        for k, v in enumerate(self.value, 1):
            inv[v - 1] = k
        return ConjugateTag(tuple(inv))

    def __call__(self, k: int) -> int:
        return self.value[k - 1]

    def __str__(self):
        return self.cycle

    @classmethod
    def parse(cls, text: str) -> ConjugateTag:
        """Accept cycle form ``(2 3)``/``(23)``, bracket form ``[r,e,c]`` or ``rec``."""
        s = text.strip().lower()
        letters = re.sub(r"[\s,\[\]]", "", s)
        if len(letters) == 3 and set(letters) == set(_ROLES):
            return cls(tuple(_ROLES.index(ch) + 1 for ch in letters))
        if re.fullmatch(r"(\(\s*[\d\s,]*\))+", s):
            cycles = re.findall(r"\(([^()]*)\)", s)
            img = [1, 2, 3]
            for cyc in cycles:
                pts = [int(c) for c in re.findall(r"\d", cyc)]
                if any(p not in (1, 2, 3) for p in pts) or len(set(pts)) != len(pts):
                    raise TagError(f"bad conjugate tag {text!r}")
                for a, b in zip(pts, pts[1:] + pts[:1]):
                    img[a - 1] = b
            if sorted(img) == [1, 2, 3]:
                return cls(tuple(img))
        raise TagError(f"bad conjugate tag {text!r}")


IDENTITY = ConjugateTag.RCE
TRANSPOSE = ConjugateTag.CRE  # (1 2)
ROW_INVERSE = ConjugateTag.REC  # (2 3)
COLUMN_INVERSE = ConjugateTag.ECR  # (1 3)
ALL_TAGS = tuple(ConjugateTag)


def _invert(line) -> tuple[int, ...]:
    inv = [0] * len(line)
    for i, v in enumerate(line):
        inv[v] = i
    return tuple(inv)


def conjugate(square: LatinSquare, tag: ConjugateTag) -> LatinSquare:
    rows = square._rows
    if tag is ConjugateTag.RCE:
        return square
    if tag is ConjugateTag.CRE:
        return LatinSquare._raw(zip(*rows))
    if tag is ConjugateTag.REC:
        return LatinSquare._raw(_invert(r) for r in rows)
    if tag is ConjugateTag.ECR:
        cols = [_invert(c) for c in zip(*rows)]
        return LatinSquare._raw(zip(*cols))
    if tag is ConjugateTag.ERC:
        # row i <- inverse of column i
        return LatinSquare._raw(_invert(c) for c in zip(*rows))
    # CER: column i <- inverse of row i
    return LatinSquare._raw(zip(*(_invert(r) for r in rows)))


def conjugate_via_oa(square: LatinSquare, tag: ConjugateTag) -> LatinSquare:
    return from_oa(permute_oa_rows(to_oa(square), tag))
