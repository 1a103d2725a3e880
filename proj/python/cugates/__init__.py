"""Minimal-gate-count circuits for controlled 2x2 unitaries.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._cugates import (
    classify,
    controlled,
    evaluate,
    falsify,
    is_generic,
    lemmas,
    m_of,
    named,
    render_ascii,
    sample,
    synth,
    to_qasm3,
    verify,
    zyz,
)

__all__ = [
    "classify",
    "controlled",
    "evaluate",
    "falsify",
    "is_generic",
    "lemmas",
    "m_of",
    "named",
    "render_ascii",
    "sample",
    "synth",
    "to_qasm3",
    "verify",
    "zyz",
]
