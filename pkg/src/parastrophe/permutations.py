"""Permutations of {1..n} in one-row form.

Externally everything is 1-based, matching the usual one-row notation
``[a(1), ..., a(n)]``.  Internally the images are kept 0-based.
Composition is ``(p * q)(i) = p(q(i))``.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass

from .errors import DegreeMismatch, InvalidPermutation


@functools.total_ordering
@dataclass(frozen=True)
class CycleStructure:
    """Sorted multiset of cycle lengths."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths)))
        if any(k < 1 for k in self.lengths):
            raise ValueError("cycle lengths must be positive")

    @property
    def degree(self) -> int:
        return sum(self.lengths)

    def __lt__(self, other):
        return self.lengths < other.lengths

    def __str__(self):
        return ",".join(map(str, self.lengths))

    @classmethod
    def parse(cls, text: str) -> CycleStructure:
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))


@functools.total_ordering
class Permutation:
    """A bijection of {1..n}, compared lexicographically by one-row form."""

    __slots__ = ("_img",)

    def __init__(self, images):
        img = tuple(int(v) - 1 for v in images)
        if not img or sorted(img) != list(range(len(img))):
            raise InvalidPermutation(f"{list(images)!r} is not a rearrangement of 1..n")
        self._img = img

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> Permutation:
        # trusted 0-based constructor for internal hot paths
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def from_zero_based(cls, images) -> Permutation:
        return cls(v + 1 for v in images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise InvalidPermutation("degree must be at least 1")
        return cls._raw(tuple(range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random | None = None) -> Permutation:
        img = list(range(n))
        (rng or random).shuffle(img)
        return cls._raw(tuple(img))

    @classmethod
    def all(cls, n: int):
        """All permutations of degree n in lexicographic order."""
        for img in itertools.permutations(range(n)):
            yield cls._raw(img)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(text.replace(",", " ").split())

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self._img)

    @property
    def zero_based(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __len__(self):
        return len(self._img)

    def __iter__(self):
        return iter(self.images)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self._img == other._img
        return NotImplemented

    def __lt__(self, other):
        return self._img < other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return " ".join(map(str, self.images))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._img))

    def cycle_structure(self) -> CycleStructure:
        return cycle_structure(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. the permutation i -> p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degree {p.degree} with degree {q.degree}")
    pi = p._img
    return Permutation._raw(tuple(pi[j] for j in q._img))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p._img):
        inv[v] = i
    return Permutation._raw(tuple(inv))


def cycle_lengths(img) -> tuple[int, ...]:
    """Sorted cycle lengths of a 0-based image sequence."""
    n = len(img)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        k = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = img[i]
            k += 1
        out.append(k)
    out.sort()
    return tuple(out)


def cycle_structure(p: Permutation) -> CycleStructure:
    return CycleStructure(cycle_lengths(p._img))
