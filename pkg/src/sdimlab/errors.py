"""Typed errors shared across the library.

Every error carries a short machine-readable ``code`` so the CLI can report
``DISCONNECTED_INPUT`` and friends without string matching.
"""

from __future__ import annotations


class SdimlabError(Exception):
    code = "ERROR"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class InvalidGraphError(SdimlabError, ValueError):
    code = "INVALID_GRAPH"


class DisconnectedInputError(SdimlabError, ValueError):
    code = "DISCONNECTED_INPUT"


class SameVertexError(SdimlabError, ValueError):
    code = "SAME_VERTEX"


class DifferentComponentsError(SdimlabError, ValueError):
    code = "DIFFERENT_COMPONENTS"


class SizeLimitExceeded(SdimlabError):
    code = "SIZE_LIMIT_EXCEEDED"


class InvalidParamsError(SdimlabError, ValueError):
    code = "INVALID_PARAMS"


class EdgeListParseError(SdimlabError, ValueError):
    code = "MALFORMED_EDGE_LIST"

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
