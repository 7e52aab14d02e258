"""Finite skew braces as operation tables: substructures, central series,
the commutator of ideals, central extensions, Yang-Baxter solutions and
exhaustive enumeration at small orders."""

from .brace import SkewBrace, make_brace, opposite_brace, trivial_brace, verify_identities
from .commutator import largest_central_ideal, smith_commutator
from .errors import InternalInconsistency, ParseError, SkewBraceError, ValidationError
from .groups import ElementSet, FiniteGroup, builtin_group, make_group
from .series import nilpotency_report, series
from .substructures import all_ideals, distinguished_sets, ideal_closure, is_ideal

__version__ = "0.1.0"

__all__ = [
    "ElementSet",
    "FiniteGroup",
    "InternalInconsistency",
    "ParseError",
    "SkewBrace",
    "SkewBraceError",
    "ValidationError",
    "all_ideals",
    "builtin_group",
    "distinguished_sets",
    "ideal_closure",
    "is_ideal",
    "largest_central_ideal",
    "make_brace",
    "make_group",
    "nilpotency_report",
    "opposite_brace",
    "series",
    "smith_commutator",
    "trivial_brace",
    "verify_identities",
]
