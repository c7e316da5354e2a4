"""Normal ordering for the q-deformed boson, c c+ - q c+ c = 1."""

from ._qwick import (
    DomainError,
    InvalidDiagram,
    LimitExceeded,
    ParseError,
    count_diagrams,
    diagram_stats,
    enumerate_diagrams,
    format_normal_form,
    normal_order,
    parse_word,
    q_stirling,
    render,
    rook_coefficients,
    stirling2,
)

__all__ = [
    "DomainError",
    "InvalidDiagram",
    "LimitExceeded",
    "ParseError",
    "count_diagrams",
    "diagram_stats",
    "enumerate_diagrams",
    "format_normal_form",
    "normal_order",
    "parse_word",
    "q_stirling",
    "render",
    "rook_coefficients",
    "stirling2",
]
