"""Catalog files: one class representative per line.

Line format (1-based symbols)::

    <n² space-separated cells, row-major>\t<kind>\t<class index>\t<class size>\t<stabilizer order>

Records are kept sorted lexicographically by square.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .classify import Classification, ClassKind, autoparatopism_group
from .errors import LatinError, ParseError, ValidationError
from .latin import LatinSquare, validate


@dataclass(frozen=True)
class CatalogRecord:
    square: LatinSquare
    kind: ClassKind
    index: int
    size: int
    stabilizer_order: int

    def to_line(self) -> str:
        cells = " ".join(str(v) for r in self.square.rows for v in r)
        return "\t".join([cells, self.kind.label, str(self.index), str(self.size),
                          str(self.stabilizer_order)])


def records_from(result: Classification) -> list[CatalogRecord]:
    pairs = sorted(zip(result.representatives, result.class_sizes), key=lambda p: p[0].key())
    return [
        CatalogRecord(sq, result.kind, i, size, autoparatopism_group(sq).size)
        for i, (sq, size) in enumerate(pairs, 1)
    ]


def parse_line(line: str, lineno: int) -> CatalogRecord:
    fields = line.rstrip("\n").split("\t")
    if len(fields) != 5:
        raise ParseError(lineno, f"expected 5 tab-separated fields, got {len(fields)}")
    try:
        cells = [int(t) for t in fields[0].split()]
        kind = ClassKind.parse(fields[1])
        index, size, stab = (int(f) for f in fields[2:])
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None
    n = math.isqrt(len(cells))
    if n == 0 or n * n != len(cells):
        raise ParseError(lineno, f"{len(cells)} cells is not a square count")
    try:
        sq = validate([cells[i * n:(i + 1) * n] for i in range(n)])
    except LatinError as exc:
        raise ValidationError(lineno, exc) from None
    return CatalogRecord(sq, kind, index, size, stab)


def read_catalog(path) -> list[CatalogRecord]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if line.strip():
                out.append(parse_line(line, lineno))
    return out


def format_catalog(records) -> str:
    return "".join(r.to_line() + "\n" for r in records)


def write_catalog(path, records) -> None:
    keys = [r.square.key() for r in records]
    if keys != sorted(keys):
        raise ValueError("catalog records must be sorted lexicographically by square")
    Path(path).write_text(format_catalog(records))


def catalog_io(path, mode: str, records=None):
    if mode == "read":
        return read_catalog(path)
    if mode == "write":
        write_catalog(path, records)
        return None
    raise ValueError(f"mode must be 'read' or 'write', not {mode!r}")
