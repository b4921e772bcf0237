"""Gauge-invariant classification of multiplicity-free fusion categories.

Thin bindings over the C++ library. Reports come back as plain dicts with
the same layout as the command-line tool's JSON output.
"""
from ._core import (  # noqa: F401
    ArgumentError,
    Basis,
    DomainMismatch,
    Error,
    InternalConsistencyError,
    NotMultiplicityFree,
    ParseError,
    Ring,
    Solution,
    System,
    ValidationError,
    ZeroSet,
    ZeroSetMismatch,
    apply_automorphism,
    apply_gauge,
    classify,
    evaluate,
    fibonacci_ring,
    fibonacci_solution,
    gauge_equivalent,
    invariant_basis,
    load_ring,
    load_solution,
    localize,
    monoidal_equivalent,
    parse_basis,
    parse_ring,
    parse_solution,
    precision,
    rationality,
    repds3_ring,
    repds3_standins,
    set_precision,
    trivial_ring,
    verify,
    yang_lee_solution,
    z3_cocycle,
    z3_ring,
    zero_set,
)

__version__ = "0.1.0"
