"""Exception hierarchy shared by all modules."""


class PoleLatticeError(Exception):
    pass


class DimensionError(PoleLatticeError, ValueError):
    """Shapes of relations, maps or matrices do not fit together."""


class ContractError(PoleLatticeError, ValueError):
    """A documented precondition was violated by the caller."""


class DomainError(PoleLatticeError, ValueError):
    pass


class ResourceGuardError(PoleLatticeError, RuntimeError):
    """The requested computation exceeds a fixed size guard."""


class ConsistencyError(PoleLatticeError, RuntimeError):
    """An internal invariant failed; this indicates a bug, not bad input."""
