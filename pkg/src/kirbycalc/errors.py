"""Error types shared by all modules.

Every domain error carries a stable machine-readable code (e.g. DUPLICATE_EDGE,
NONPLANAR, NOT_MEMBER) so that callers and the CLI can dispatch on it without
parsing messages.
"""

from __future__ import annotations


class CalcError(Exception):
    """Domain error with a stable code string."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class ParseError(CalcError):
    """Parse/validation error; carries the 1-based line number when known."""

    def __init__(self, code: str, message: str = "", line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(code, message)
