"""Exact beta-expansions and the Midy property."""

from ._midy import (  # noqa: F401
    Base,
    CapExhausted,
    Expansion,
    MidyError,
    Verdict,
    classify_prime,
    entry_point,
    expand,
    fib_pair_mod,
    golden,
    legendre,
    make_base,
    midy_by_complement,
    midy_by_definition,
    midy_tau,
    midy_try_all_p,
    necessary_condition,
    tetranacci,
    tribonacci,
)

__version__ = "1.0.0"
