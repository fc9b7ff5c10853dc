"""Best generators, Swan conductors and defect evidence for degree-p extensions."""

import json

from . import _valuata
from ._valuata import (
    DivisionByZero,
    DomainError,
    InsufficientPrecision,
    MathAssertion,
    UsageError,
    ValuataError,
    ZeroToPrecision,
    corpus_names,
    format_cyclo,
    format_series,
)

__all__ = [
    "DivisionByZero",
    "DomainError",
    "InsufficientPrecision",
    "MathAssertion",
    "UsageError",
    "ValuataError",
    "ZeroToPrecision",
    "analyze_as",
    "classify_kummer",
    "corpus_names",
    "format_cyclo",
    "format_series",
    "normalize_as",
    "normalize_kummer",
    "run_corpus",
    "verify_norm_ideal",
]


def analyze_as(f, **kw):
    return json.loads(_valuata.analyze_as(f, **kw))


def normalize_as(f, **kw):
    return json.loads(_valuata.normalize_as(f, **kw))


def classify_kummer(h, **kw):
    return json.loads(_valuata.classify_kummer(h, **kw))


def normalize_kummer(h, **kw):
    return json.loads(_valuata.normalize_kummer(h, **kw))


def verify_norm_ideal(f, **kw):
    return json.loads(_valuata.verify_norm_ideal(f, **kw))


def run_corpus(**kw):
    return json.loads(_valuata.run_corpus(**kw))
