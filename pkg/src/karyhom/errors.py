"""Exception types shared across the package."""


class InputError(ValueError):
    """Bad parameters or malformed caller input."""


class LoadError(InputError):
    """Malformed algebra document."""


class ResourceCapError(RuntimeError):
    """A requested computation exceeds the configured size cap."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed (e.g. a character is not polynomial)."""
