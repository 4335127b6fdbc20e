class HopfError(Exception):
    pass


class InputError(HopfError, ValueError):
    """Malformed object, subset or serialized input."""


class InvalidComposition(InputError):
    pass


class InvalidDecomposition(InputError):
    pass


class GroundSetTooLarge(HopfError):
    def __init__(self, n: int, cap: int, what: str = "ground set"):
        super().__init__(f"{what} has {n} elements, cap is {cap}")
        self.n = n
        self.cap = cap


class ContractionUndefined(HopfError):
    """z/S asked for with z(S) infinite; upstream this is the zero coproduct."""


class UnboundedDirection(HopfError):
    pass


class NotRelational(HopfError):
    def __init__(self, reason: str, certificate=None):
        super().__init__(reason)
        self.reason = reason
        self.certificate = certificate


class NotALattice(HopfError):
    pass


class NotInvertible(HopfError):
    pass


class ConsistencyError(HopfError, AssertionError):
    """Two routes to the same quantity disagreed. Always a bug."""
