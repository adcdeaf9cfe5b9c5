"""2-nilpotent multipliers of finite p-groups.

The heavy lifting lives in the compiled extension; this package just
re-exports it. Reports come back as plain dicts with exact python ints,
so arbitrarily large group orders survive the boundary.
"""

from nilmult._core import (
    InternalError,
    ParseError,
    UnsupportedError,
    analyze,
    analyze_spec,
    classify,
    cubic_base,
    exponent_bound,
    family_info,
    large_derived_ceiling,
    order_p2_derived_ceiling,
    run_checks,
    smith_normal_form,
    sweep,
    witt_weight3,
)

__all__ = [
    "InternalError",
    "ParseError",
    "UnsupportedError",
    "analyze",
    "analyze_spec",
    "classify",
    "cubic_base",
    "exponent_bound",
    "family_info",
    "large_derived_ceiling",
    "order_p2_derived_ceiling",
    "run_checks",
    "smith_normal_form",
    "sweep",
    "witt_weight3",
]
