"""Finite unary semigroups, transcription categories and the passage between them."""

from .category import TranscriptionCategory, is_groupoid, validate_transcription
from .core import AxiomReport, FiniteUnarySemigroup, check_axiom
from .enumeration import SearchSpec, canonical_form, enumerate_structures, find_counterexample
from .functor import (
    AlgebraMorphism,
    check_functor,
    check_pm_morphism,
    pseudoproduct_semigroup,
    roundtrip_check,
    trace_category,
)
from .textio import parse, render

__all__ = [
    "AlgebraMorphism",
    "AxiomReport",
    "FiniteUnarySemigroup",
    "SearchSpec",
    "TranscriptionCategory",
    "canonical_form",
    "check_axiom",
    "check_functor",
    "check_pm_morphism",
    "enumerate_structures",
    "find_counterexample",
    "is_groupoid",
    "parse",
    "pseudoproduct_semigroup",
    "render",
    "roundtrip_check",
    "trace_category",
    "validate_transcription",
]
