"""tribokit: exact arithmetic for the Tribonacci family.

T (seeds 0, 1, 1), its Lucas-type companion S (seeds 3, 1, 3), and the
minor-sum sequence C (seeds 3, -1, -1), with recurrence, matrix-power,
Binet, and generating-function evaluators, a mechanically checked
identity catalogue, and OEIS b-file cross-checking.
"""
from .seqcore import (
    CForm,
    SForm,
    SequenceKind,
    c_even,
    c_from_t,
    c_seq,
    s_from_t,
    s_lucas,
    sequence_range,
    term,
    tribonacci,
)

__version__ = "0.1.0"

__all__ = [
    "CForm",
    "SForm",
    "SequenceKind",
    "c_even",
    "c_from_t",
    "c_seq",
    "s_from_t",
    "s_lucas",
    "sequence_range",
    "term",
    "tribonacci",
    "__version__",
]
