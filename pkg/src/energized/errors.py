"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed input: bad cell, bad size, wrong energy shape."""


class PreconditionError(ValueError):
    """The input is well formed but an identity's hypothesis does not hold."""


class InvalidStateError(ValueError):
    """An object is used in a state the operation does not accept (e.g. unordered system)."""


class NotFoundError(KeyError):
    pass


class ResourceLimitError(RuntimeError):
    """A requested enumeration exceeds the configured work budget."""
