"""Isotopism and paratopism actions, composition, and the isotopism/conjugate swap.

A paratopism is stored as the quadruple ``(alpha, beta, gamma, eta)`` and acts
as ``R_alpha ∘ C_beta ∘ L_gamma ∘ F_eta``: the conjugate F_eta is applied
first, then the isotopism.  On a cell triplet t = (row, col, symbol) this is
``t'_k = a_k(t_{eta^-1(k)})`` with ``(a_1, a_2, a_3) = (alpha, beta, gamma)``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .conjugate import ALL_TAGS, ConjugateTag, conjugate
from .errors import DegreeMismatch
from .latin import Isotopism, LatinSquare
from .permutations import Permutation, compose, inverse


def _check_degree(iso: Isotopism, square: LatinSquare):
    if iso.degree != square.order:
        raise DegreeMismatch(f"isotopism of degree {iso.degree} on a square of order {square.order}")


def apply_isotopism(iso: Isotopism, square: LatinSquare) -> LatinSquare:
    """Row i of the result is ``gamma · Y_{alpha^-1(i)} · beta^-1``."""
    _check_degree(iso, square)
    a_inv = inverse(iso.alpha).zero_based
    b_inv = inverse(iso.beta).zero_based
    g = iso.gamma.zero_based
    rows = square._rows
    return LatinSquare._raw(
        tuple(g[row[j]] for j in b_inv) for row in (rows[a_inv[i]] for i in range(square.order))
    )


def apply_isotopism_naive(iso: Isotopism, square: LatinSquare) -> LatinSquare:
    """Move row i to alpha(i), column j to beta(j), then relabel s as gamma(s)."""
    _check_degree(iso, square)
    n = square.order
    a, b, g = (p.zero_based for p in iso.components)
    grid = [[0] * n for _ in range(n)]
    for i, row in enumerate(square._rows):
        for j, s in enumerate(row):
            grid[a[i]][b[j]] = s
    return LatinSquare._raw([g[s] for s in row] for row in grid)


@dataclass(frozen=True)
class Paratopism:
    iso: Isotopism
    tag: ConjugateTag

    @classmethod
    def of(cls, alpha, beta, gamma, tag=ConjugateTag.RCE) -> Paratopism:
        perms = [p if isinstance(p, Permutation) else Permutation(p) for p in (alpha, beta, gamma)]
        if not isinstance(tag, ConjugateTag):
            tag = ConjugateTag.parse(tag)
        return cls(Isotopism(*perms), tag)

    @classmethod
    def identity(cls, n: int) -> Paratopism:
        return cls(Isotopism.identity(n), ConjugateTag.RCE)

    @classmethod
    def random(cls, n: int, rng: random.Random | None = None) -> Paratopism:
        rng = rng or random.Random()
        return cls(Isotopism.random(n, rng), rng.choice(ALL_TAGS))

    @classmethod
    def parse(cls, text: str) -> Paratopism:
        """Parse ``"alpha; beta; gamma; eta"``."""
        parts = text.split(";")
        if len(parts) != 4:
            raise ValueError("paratopism text needs four ';'-separated fields")
        return cls.of(*(Permutation.parse(p) for p in parts[:3]), ConjugateTag.parse(parts[3]))

    @property
    def degree(self) -> int:
        return self.iso.degree

    @property
    def components(self) -> tuple[Permutation, Permutation, Permutation]:
        return self.iso.components

    def __mul__(self, other: Paratopism) -> Paratopism:
        return compose_paratopisms(self, other)

    def __call__(self, square: LatinSquare) -> LatinSquare:
        return apply_paratopism(self, square)

    def __str__(self):
        return f"{self.iso}; {self.tag.cycle}"


def apply_paratopism(p: Paratopism, square: LatinSquare) -> LatinSquare:
    _check_degree(p.iso, square)
    return apply_isotopism(p.iso, conjugate(square, p.tag))


def compose_paratopisms(p: Paratopism, q: Paratopism) -> Paratopism:
    """``P(a, eta) ∘ P(b, zeta) = P(a_k · b_{eta^-1(k)}, eta·zeta)``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"cannot compose degree {p.degree} with degree {q.degree}")
    a = p.components
    b = q.components
    src = p.tag.inverse().images0
    comps = [compose(a[k], b[src[k]]) for k in range(3)]
    return Paratopism(Isotopism(*comps), p.tag * q.tag)


def inverse_paratopism(p: Paratopism) -> Paratopism:
    a = p.components
    img = p.tag.images0
    comps = [inverse(a[img[k]]) for k in range(3)]
    return Paratopism(Isotopism(*comps), p.tag.inverse())


def swap_conjugate_isotopism(tag: ConjugateTag, iso: Isotopism, side: str) -> Isotopism:
    """Move F_eta past an isotopism.

    ``side="right"``: the given ``iso`` sits left of F_eta; returns I' with
    ``iso ∘ F_eta = F_eta ∘ I'``, whose components are ``a_{eta(k)}``.

    ``side="left"``: the given ``iso`` sits right of F_eta; returns I'' with
    ``F_eta ∘ iso = I'' ∘ F_eta``, whose components are ``b_{eta^-1(k)}``.
    """
    c = iso.components
    if side == "right":
        idx = tag.images0
    elif side == "left":
        idx = tag.inverse().images0
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return Isotopism(*(c[idx[k]] for k in range(3)))


def all_paratopisms(n: int):
    """Every quadruple of degree n: 6·(n!)^3 of them."""
    perms = list(Permutation.all(n))
    for tag in ALL_TAGS:
        for a, b, g in itertools.product(perms, repeat=3):
            yield Paratopism(Isotopism(a, b, g), tag)
