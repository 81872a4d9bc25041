"""Error types shared across the library.

Invalid arguments raise the builtin ValueError; the classes here cover the
remaining contract failures that callers may want to catch separately.
"""


class ResourceLimitError(RuntimeError):
    """An operation would exceed its documented work or memory guard."""


class UnsupportedMethodError(ValueError):
    """A method variant was requested outside its supported parameter range."""
