"""Exact extremal continuants.

The continuant <a_1, ..., a_t> is the denominator of the continued fraction
[0; a_1, ..., a_t].  This package builds the arrangements and compositions
that make it largest or smallest under various constraints, checks them
against exhaustive search, and evaluates the related growth bounds with
certified interval arithmetic.
"""
from .core import (
    INFINITY,
    ContinuantPair,
    InvalidSequenceError,
    cf_value,
    continuant,
    continuant_pair,
    normal_form,
    reversed_cf,
    split_identity,
    trivial_orbit,
    trivially_equal,
)
from .extremal import (
    DomainError,
    ExtremalResult,
    InfeasibleError,
    MultisetSpec,
    SplitSpec,
    TzParams,
    admissible_residues,
    max_un,
    max_ust,
    max_v,
    max_w,
    min_un,
    min_ustn,
    min_w,
    sylvester_representable,
    template,
    valley,
    zigzag,
)
from .oracle import BruteForceReport, EnumerationRequest, brute_force, enumerate_family
from .reflect import (
    Kind,
    MajorizationVerdict,
    ReflectionSpec,
    a_value,
    apply_reflection,
    classify,
    majorizes,
    transitive_maximize,
    transitive_minimize,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceReport",
    "EnumerationRequest",
    "brute_force",
    "enumerate_family",
    "INFINITY",
    "ContinuantPair",
    "InvalidSequenceError",
    "cf_value",
    "continuant",
    "continuant_pair",
    "normal_form",
    "reversed_cf",
    "split_identity",
    "trivial_orbit",
    "trivially_equal",
    "DomainError",
    "ExtremalResult",
    "InfeasibleError",
    "MultisetSpec",
    "SplitSpec",
    "TzParams",
    "admissible_residues",
    "max_un",
    "max_ust",
    "max_v",
    "max_w",
    "min_un",
    "min_ustn",
    "min_w",
    "sylvester_representable",
    "template",
    "valley",
    "zigzag",
    "Kind",
    "MajorizationVerdict",
    "ReflectionSpec",
    "a_value",
    "apply_reflection",
    "classify",
    "majorizes",
    "transitive_maximize",
    "transitive_minimize",
]
