"""Shared exception types."""


class InternalInvariantError(RuntimeError):
    """A computed certificate or series violated an invariant it is
    required to satisfy (for instance, a witness advertised as nonzero
    evaluated to zero).  This indicates a bug, never bad user input."""
