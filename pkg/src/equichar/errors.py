"""Shared exception types.

InputError covers malformed data (bad files, non-subgroups, broken
generators).  PreconditionError covers well-formed input that violates a
mathematical hypothesis of the operation (non-admissible action, group is
not a p-group, complex is not flag).  The distinction matters to the
command line tool, which maps them to different exit codes.
"""


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class PreconditionError(ValueError):
    """A mathematical hypothesis of the requested operation fails."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration bound was exceeded."""


class ConsistencyError(RuntimeError):
    """An internal invariant was violated; indicates a bug."""
