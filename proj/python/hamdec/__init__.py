"""Hamilton decompositions of the directed torus D_d(m)."""

from ._core import (
    Decomposition,
    HamdecError,
    check_prefix_counts,
    d7_matrix,
    direction_table,
    export_decomposition,
    gale_ryser_check,
    high_modulus_matrix,
    import_decomposition,
    mc7_check,
    plan,
    report_json,
    synthesize,
    verify,
)

__all__ = [
    "Decomposition",
    "HamdecError",
    "check_prefix_counts",
    "d7_matrix",
    "direction_table",
    "export_decomposition",
    "gale_ryser_check",
    "high_modulus_matrix",
    "import_decomposition",
    "mc7_check",
    "plan",
    "report_json",
    "synthesize",
    "verify",
]
