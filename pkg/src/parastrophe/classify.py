"""Isotopy classes, types, inverse types and main classes of reduced Latin squares.

Two independent routes produce the same partition:

* ``pruning=False`` sweeps every reduced square in lexicographic order and
  expands each new representative into its full set of reduced class members
  (all reduced isotopes of the allowed conjugates).
* ``pruning=True`` only looks at squares that survive the row-pair cycle-type
  test, keeps those that are the smallest member of their class, and gets the
  class size from the orbit-stabilizer identity.

A class representative is always the lexicographically smallest (row-major)
reduced member.
"""
from __future__ import annotations

import enum
import functools
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .conjugate import ALL_TAGS, ConjugateTag, conjugate
from .enumeration import check_order, iter_reduced_rows, min_rows, second_rows, type_rank
from .errors import OrderTooSmall
from .latin import Isotopism, LatinSquare, to_reduced
from .paratopism import Paratopism, compose_paratopisms
from .permutations import CycleStructure, Permutation, compose, cycle_lengths, inverse


class ClassKind(enum.Enum):
    ISOTOPY = "isotopy"
    TYPE = "type"
    INVERSE_TYPE = "inverse_type"
    MAIN_CLASS = "main_class"

    @property
    def tags(self) -> tuple[ConjugateTag, ...]:
        """Conjugates that are allowed on top of isotopy; each set is a subgroup of S3."""
        return {
            ClassKind.ISOTOPY: (ConjugateTag.RCE,),
            ClassKind.TYPE: (ConjugateTag.RCE, ConjugateTag.CRE),
            ClassKind.INVERSE_TYPE: (ConjugateTag.RCE, ConjugateTag.REC),
            ClassKind.MAIN_CLASS: ALL_TAGS,
        }[self]

    @property
    def label(self) -> str:
        return self.value.replace("_", "-")

    @classmethod
    def parse(cls, text: str) -> ClassKind:
        return cls(text.strip().lower().replace("-", "_"))


# ---------------------------------------------------------------- signatures

@dataclass(frozen=True)
class PairSignature:
    """Cycle structures of ``Y_i Y_j^-1`` over all unordered row pairs, sorted."""

    entries: tuple[CycleStructure, ...]

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return " ".join(str(c) for c in self.entries)


def _invert(line):
    inv = [0] * len(line)
    for i, v in enumerate(line):
        inv[v] = i
    return inv


def _pair_types(lines):
    invs = [_invert(p) for p in lines]
    out = []
    for i, j in itertools.combinations(range(len(lines)), 2):
        p = lines[i]
        out.append(cycle_lengths([p[s] for s in invs[j]]))
    return out


def pair_signature(square: LatinSquare) -> PairSignature:
    if square.order < 2:
        raise OrderTooSmall("pair signatures need order at least 2")
    types = sorted(_pair_types(square._rows))
    return PairSignature(tuple(CycleStructure(t) for t in types))


def row_cycle_structures(square: LatinSquare) -> tuple[CycleStructure, ...]:
    return tuple(sorted(CycleStructure(cycle_lengths(r)) for r in square._rows))


def _line_families(rows, kind: ClassKind):
    """Line families whose pair quotients are realised as second rows in the class."""
    n = len(rows)
    fams = [rows]
    if kind in (ClassKind.TYPE, ClassKind.MAIN_CLASS):
        fams.append(list(zip(*rows)))
    if kind is ClassKind.MAIN_CLASS:
        sym = [[0] * n for _ in range(n)]
        for r, row in enumerate(rows):
            for c, e in enumerate(row):
                sym[e][c] = r
        fams.append(sym)
    return fams


def passes_class_filter(rows, kind: ClassKind) -> bool:
    """Necessary condition for ``rows`` (reduced, 0-based) to be its class minimum."""
    n = len(rows)
    if n < 3:
        return True
    rank = type_rank(n)
    bound = rank[cycle_lengths(rows[1])]
    for fam in _line_families(rows, kind)[1:]:
        if min(rank[t] for t in _pair_types(fam)) < bound:
            return False
    return True


# ---------------------------------------------------------------- conjugators

def _cycles(p):
    seen = [False] * len(p)
    out = []
    for s in range(len(p)):
        if not seen[s]:
            cyc = []
            while not seen[s]:
                seen[s] = True
                cyc.append(s)
                s = p[s]
            out.append(cyc)
    out.sort(key=len)
    return out


def _match_cycles(src_cycles, dst_cycles, n):
    g = [0] * n
    for cs, cd in zip(src_cycles, dst_cycles):
        for a, b in zip(cs, cd):
            g[a] = b
    return tuple(g)


@functools.lru_cache(maxsize=4096)
def centralizer(m: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All permutations commuting with ``m`` (0-based)."""
    n = len(m)
    cyc = _cycles(m)
    groups = [list(g) for _, g in itertools.groupby(cyc, key=len)]
    choices = []
    for grp in groups:
        length = len(grp[0])
        opts = []
        for order in itertools.permutations(grp):
            for rots in itertools.product(range(length), repeat=len(grp)):
                opts.append([c[r:] + c[:r] for c, r in zip(order, rots)])
        choices.append(opts)
    out = []
    for pick in itertools.product(*choices):
        dst = [c for part in pick for c in part]
        out.append(_match_cycles(cyc, dst, n))
    return tuple(out)


def conjugators(x, m) -> list[tuple[int, ...]]:
    """All g with ``g x g^-1 = m``; x and m must share a cycle type."""
    d0 = _match_cycles(_cycles(x), _cycles(m), len(m))
    return [tuple(c[v] for v in d0) for c in centralizer(tuple(m))]


# ---------------------------------------------------------------- isotopism search

def _isotope_rows(Z, r, g):
    """Reduced isotope of Z with row r sent first and symbols relabelled by g."""
    n = len(Z)
    beta = [g[v] for v in Z[r]]
    binv = _invert(beta)
    out = [None] * n
    for row in Z:
        new = tuple(g[row[j]] for j in binv)
        out[new[0]] = new
    return out, beta


def _row2_sources(Z, m):
    """(r, x) pairs where x = Z_a Z_r^-1 has the cycle type of m."""
    n = len(Z)
    mtype = cycle_lengths(m)
    invs = [_invert(p) for p in Z]
    for r in range(n):
        inv = invs[r]
        for a in range(n):
            if a == r:
                continue
            x = [Z[a][s] for s in inv]
            if cycle_lengths(x) == mtype:
                yield r, x


def isotopisms_onto(Z, T):
    """All isotopisms (alpha, beta, gamma), 0-based, carrying rows Z onto reduced rows T."""
    n = len(Z)
    T = tuple(tuple(r) for r in T)
    if n == 1:
        yield ((0,), (0,), (0,))
        return
    m = T[1]
    for r, x in _row2_sources(Z, m):
        for g in conjugators(x, m):
            rows, beta = _isotope_rows(Z, r, g)
            if tuple(rows) == T:
                alpha = [0] * n
                for k, row in enumerate(Z):
                    alpha[k] = g[row[_invert(beta)[0]]]
                yield tuple(alpha), tuple(beta), g


def _best_row2(squares) -> tuple[int, ...]:
    n = len(squares[0])
    rank = type_rank(n)
    best = min(rank[t] for Z in squares for t in _pair_types(Z))
    inv_rank = {v: k for k, v in rank.items()}
    return min_rows(n)[inv_rank[best]]


def class_minimum(square: LatinSquare, kind: ClassKind) -> LatinSquare:
    """Lexicographically smallest reduced square in the class of ``square``."""
    n = square.order
    if n < 3:
        return to_reduced(square)[0]
    conj = [conjugate(square, t)._rows for t in kind.tags]
    m = _best_row2(conj)
    best = None
    for Z in conj:
        for r, x in _row2_sources(Z, m):
            for g in conjugators(x, m):
                rows = tuple(_isotope_rows(Z, r, g)[0])
                if best is None or rows < best:
                    best = rows
    return LatinSquare._raw(best)


def is_class_minimum(rows, kind: ClassKind) -> bool:
    """True when reduced ``rows`` is the smallest reduced member of its class."""
    n = len(rows)
    rows = tuple(rows)
    if n < 3:
        return True
    sq = LatinSquare._raw(rows)
    conj = [conjugate(sq, t)._rows for t in kind.tags]
    m = _best_row2(conj)
    if rows[1] != m:
        return False
    for Z in conj:
        for r, x in _row2_sources(Z, m):
            for g in conjugators(x, m):
                if tuple(_isotope_rows(Z, r, g)[0]) < rows:
                    return False
    return True


# ---------------------------------------------------------------- stabilizers

@dataclass(frozen=True)
class StabilizerGroup:
    square: LatinSquare
    elements: tuple[Paratopism, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in set(self.elements)

    def is_closed(self) -> bool:
        from .paratopism import inverse_paratopism

        elems = set(self.elements)
        if Paratopism.identity(self.square.order) not in elems:
            return False
        return all(compose_paratopisms(p, q) in elems for p in elems for q in elems) and all(
            inverse_paratopism(p) in elems for p in elems
        )


def autoparatopism_group(square: LatinSquare, tags=ALL_TAGS) -> StabilizerGroup:
    """Paratopisms (restricted to conjugates in ``tags``) that fix ``square``.

    For each eta the isotopisms J with J(F_eta(Y)) = reduced(Y) are solved
    for directly; undoing the reduction gives the fixing isotopism.
    """
    Y0, red = to_reduced(square)
    undo = red.inverse()
    elems = []
    for tag in tags:
        Z = conjugate(square, tag)._rows
        for a, b, g in isotopisms_onto(Z, Y0._rows):
            J = (Permutation._raw(a), Permutation._raw(b), Permutation._raw(g))
            iso = Isotopism(*(compose(u, j) for u, j in zip(undo.components, J)))
            elems.append(Paratopism(iso, tag))
    return StabilizerGroup(square, tuple(elems))


def reduced_class_size(square: LatinSquare, kind: ClassKind) -> int:
    """Reduced members of the class via |H|·(n!)^3 / (|Stab_H| · n!(n-1)!)."""
    n = square.order
    stab = autoparatopism_group(square, kind.tags).size
    num = len(kind.tags) * math.factorial(n) * n
    if num % stab:
        raise ArithmeticError(f"stabilizer order {stab} does not divide {num}")
    return num // stab


# ---------------------------------------------------------------- orbit expansion

@functools.lru_cache(maxsize=None)
def _perm_tables(n):
    P = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    Pinv = np.argsort(P, axis=1)
    return P, Pinv


def reduced_isotope_keys(square: LatinSquare) -> set[bytes]:
    """Keys of every reduced square isotopic to ``square`` (vectorised over column orders)."""
    n = square.order
    P, Pinv = _perm_tables(n)
    m = len(P)
    Z = np.asarray(square._rows, dtype=np.intp)
    Zc = Z[:, Pinv].transpose(1, 0, 2)  # Zc[b, k, j] = Z[k, beta^-1(j)]
    bidx = np.arange(m)[:, None, None]
    keys = set()
    nn = n * n
    for r in range(n):
        zr_inv = np.argsort(Z[r])
        gamma = P[:, zr_inv]  # gamma = beta · Z_r^-1 makes row r natural
        W = gamma[bidx, Zc]
        order = np.argsort(W[:, :, 0], axis=1)
        R = W[np.arange(m)[:, None], order]
        buf = R.astype(np.uint8).tobytes()
        keys.update(buf[i * nn:(i + 1) * nn] for i in range(m))
    return keys


def class_keys(square: LatinSquare, kind: ClassKind) -> set[bytes]:
    keys = set()
    for tag in kind.tags:
        keys |= reduced_isotope_keys(conjugate(square, tag))
    return keys


# ---------------------------------------------------------------- classify

@dataclass
class Classification:
    order: int
    kind: ClassKind
    representatives: list[LatinSquare]
    class_sizes: list[int]
    members: list[frozenset[bytes]] | None = field(default=None, repr=False)

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    @property
    def total(self) -> int:
        return sum(self.class_sizes)


def _classify_sweep(n, kind):
    reps, sizes, members = [], [], []
    visited = set()
    for rows in iter_reduced_rows(n):
        key = bytes(v for r in rows for v in r)
        if key in visited:
            continue
        sq = LatinSquare._raw(rows)
        keys = class_keys(sq, kind)
        visited |= keys
        reps.append(sq)
        sizes.append(len(keys))
        members.append(frozenset(keys))
    return Classification(n, kind, reps, sizes, members)


def _classify_part(args):
    n, kind, row2 = args
    found = []
    for rows in iter_reduced_rows(n, True, row2):
        if passes_class_filter(rows, kind) and is_class_minimum(rows, kind):
            sq = LatinSquare._raw(rows)
            found.append((sq, reduced_class_size(sq, kind)))
    return found


def _classify_pruned(n, kind, workers):
    if n <= 2:
        sq = LatinSquare.cyclic(n)
        return Classification(n, kind, [sq], [1])
    parts = [(n, kind, r) for r in second_rows(n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_classify_part, parts))
    else:
        results = list(map(_classify_part, parts))
    found = [item for part in results for item in part]
    return Classification(n, kind, [s for s, _ in found], [k for _, k in found])


def classify(n: int, kind: ClassKind | str = ClassKind.MAIN_CLASS, *, pruning: bool = True,
             allow_order_7: bool = False, workers: int = 1) -> Classification:
    """Partition the reduced squares of order n into classes of the given kind."""
    if isinstance(kind, str):
        kind = ClassKind.parse(kind)
    check_order(n, allow_order_7)
    if pruning:
        return _classify_pruned(n, kind, workers)
    return _classify_sweep(n, kind)
