"""Randomised self-check suites run by ``parastrophe verify``."""
from __future__ import annotations

import itertools
import random

from .classify import ClassKind, classify, pair_signature
from .conjugate import ALL_TAGS, ConjugateTag, conjugate, conjugate_via_oa
from .enumeration import enumerate_reduced
from .latin import Isotopism, random_latin_square
from .paratopism import (
    Paratopism,
    apply_isotopism,
    apply_isotopism_naive,
    apply_paratopism,
    compose_paratopisms,
    inverse_paratopism,
    swap_conjugate_isotopism,
)


def _oracle(rng, trials):
    for n in range(1, 9):
        for _ in range(trials):
            y = random_latin_square(n, rng)
            if any(conjugate(y, t) != conjugate_via_oa(y, t) for t in ALL_TAGS):
                return False
    return True


def _tag_law(rng, trials):
    for n in range(3, 7):
        for _ in range(trials):
            y = random_latin_square(n, rng)
            for e1, e2 in itertools.product(ALL_TAGS, repeat=2):
                if conjugate(conjugate(y, e2), e1) != conjugate(y, e1 * e2):
                    return False
    return True


def _isotopism_formula(rng, trials):
    for n in range(3, 8):
        for _ in range(trials):
            y = random_latin_square(n, rng)
            iso = Isotopism.random(n, rng)
            if apply_isotopism(iso, y) != apply_isotopism_naive(iso, y):
                return False
    return True


def _swap(rng, trials):
    for n in range(3, 7):
        for _ in range(trials):
            y = random_latin_square(n, rng)
            iso = Isotopism.random(n, rng)
            for t in ALL_TAGS:
                right = swap_conjugate_isotopism(t, iso, "right")
                if apply_isotopism(iso, conjugate(y, t)) != conjugate(apply_isotopism(right, y), t):
                    return False
                left = swap_conjugate_isotopism(t, iso, "left")
                if conjugate(apply_isotopism(iso, y), t) != apply_isotopism(left, conjugate(y, t)):
                    return False
    return True


def _composition(rng, trials):
    n = 5
    for _ in range(trials):
        p, q = Paratopism.random(n, rng), Paratopism.random(n, rng)
        y = random_latin_square(n, rng)
        if apply_paratopism(compose_paratopisms(p, q), y) != apply_paratopism(p, apply_paratopism(q, y)):
            return False
        if compose_paratopisms(p, inverse_paratopism(p)) != Paratopism.identity(n):
            return False
    return True


def _signature(rng, trials):
    for n in range(3, 8):
        for _ in range(trials):
            y = random_latin_square(n, rng)
            sig = pair_signature(y)
            if pair_signature(apply_isotopism(Isotopism.random(n, rng), y)) != sig:
                return False
            if pair_signature(conjugate(y, ConjugateTag.REC)) != sig:
                return False
    return True


def _counts(rng, trials):
    return [enumerate_reduced(n) for n in range(1, 6)] == [1, 1, 1, 4, 56]


def _pruning(rng, trials):
    for n in range(1, 6):
        for kind in ClassKind:
            a = classify(n, kind, pruning=False)
            b = classify(n, kind, pruning=True)
            if [r.key() for r in a.representatives] != [r.key() for r in b.representatives]:
                return False
            if a.class_sizes != b.class_sizes or a.total != enumerate_reduced(n):
                return False
    return True


SUITES = [
    ("conjugate-oracle", _oracle),
    ("conjugate-composition", _tag_law),
    ("isotopism-formula", _isotopism_formula),
    ("conjugate-isotopism-swap", _swap),
    ("paratopism-composition", _composition),
    ("pair-signature-invariance", _signature),
    ("reduced-counts", _counts),
    ("pruning-soundness", _pruning),
]


def run_verify(seed: int = 0, trials: int = 20):
    """Yield ``(suite, passed)`` for each suite, each with its own seeded generator."""
    for k, (name, fn) in enumerate(SUITES):
        rng = random.Random(f"{seed}:{k}")
        yield name, bool(fn(rng, trials))
