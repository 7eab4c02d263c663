"""Type normalisation with replayable certificates for a small dependent type theory.

Expressions are passed as concrete syntax strings, e.g. ``"Pi(U, El(q))"``
or ``"U[p ; id]"``.
"""

from ._alphanorm import (
    DEFAULT_FUEL,
    ParseError,
    TooLarge,
    check,
    check_cert,
    compl_cert,
    decide_eq,
    enumerate_tys,
    evaluate,
    norm,
    oracle_eq,
    parse,
    run_cli,
    sort,
)

__all__ = [
    "DEFAULT_FUEL",
    "ParseError",
    "TooLarge",
    "check",
    "check_cert",
    "compl_cert",
    "decide_eq",
    "enumerate_tys",
    "evaluate",
    "norm",
    "oracle_eq",
    "parse",
    "run_cli",
    "sort",
]
__version__ = "0.1.0"
