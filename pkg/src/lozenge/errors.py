"""Shared exception types."""


class InputError(ValueError):
    """Invalid user-supplied argument (CLI exit code 2)."""


class ResourceLimitError(RuntimeError):
    """A configured size, step or memory budget was exceeded (CLI exit code 3)."""


class InternalCheckError(RuntimeError):
    """A consistency check that should never fail did fail.

    Raised by the region builder when two generation paths disagree on a
    node weight, and by the descent classifier when its result does not
    match the lattice minimum.  Any occurrence is a bug, not a user error.
    """
