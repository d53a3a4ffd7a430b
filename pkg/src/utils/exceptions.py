"""
Error types shared by the calculator, the CLI and the HTTP surface.

DomainError maps to CLI exit code 3 / HTTP 400, ElementParseError to
exit code 2 / HTTP 422.
"""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class ElementParseError(ValueError):
    """An element document could not be turned into an element."""
