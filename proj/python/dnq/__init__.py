"""F-polynomials and Caldero-Chapoton cluster variables for affine D~n quivers.

Thin wrapper over the C++ core.  Dimension vectors are dicts keyed by the
vertex names "a", "b", "c", "d", "0", "1", ...; orientations are strings like
"a:fwd,v0:rev" (edges omitted keep the subspace orientation).
"""

from ._dnq import (  # noqa: F401
    cc_variable,
    classify,
    delta,
    fpoly,
    fpoly_json,
    fpoly_ones,
    snake_admissible_count,
    snake_fpoly,
    verify,
    verify_suites,
)

__all__ = [
    "cc_variable",
    "classify",
    "delta",
    "fpoly",
    "fpoly_json",
    "fpoly_ones",
    "snake_admissible_count",
    "snake_fpoly",
    "verify",
    "verify_suites",
]
