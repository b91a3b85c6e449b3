"""Shared exception types."""


class EdgeListError(ValueError):
    """Malformed edge-list text; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PartitionError(ValueError):
    """A partition or move violates the disjoint-cover contract."""


class SizeGateError(ValueError):
    """An exact enumeration was refused because the input exceeds its size gate."""
