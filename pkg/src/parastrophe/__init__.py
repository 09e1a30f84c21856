"""Conjugates, paratopisms and small-order classification of Latin squares."""
from .classify import (
    Classification,
    ClassKind,
    PairSignature,
    StabilizerGroup,
    autoparatopism_group,
    class_minimum,
    classify,
    pair_signature,
)
from .conjugate import ConjugateTag, conjugate, conjugate_via_oa
from .enumeration import enumerate_reduced
from .latin import Isotopism, LatinSquare, line_as_perm, random_latin_square, to_reduced, validate
from .oa import OrthogonalArray, from_oa, permute_oa_rows, to_oa
from .paratopism import (
    Paratopism,
    apply_isotopism,
    apply_paratopism,
    compose_paratopisms,
    inverse_paratopism,
    swap_conjugate_isotopism,
)
from .permutations import CycleStructure, Permutation, compose, cycle_structure, inverse

__version__ = "0.1.0"
