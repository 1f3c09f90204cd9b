"""Exception types shared across the package."""


class NotInGoldenSubfield(ValueError):
    """Raised when a value with a nonzero sqrt(2) or sqrt(10) part is split into golden parts."""


class BadParameter(ValueError):
    """Raised when a construction is invoked with a parameter outside its domain."""


class DegenerateInput(ValueError):
    """Raised when geometric input is too small or inconsistent to process."""


class CapExceeded(RuntimeError):
    """Raised when a closure grows past its element cap."""


class NotInvariant(ValueError):
    """Raised when a group action maps a point outside the set being decomposed."""


class CertificationFailed(RuntimeError):
    """Raised when a candidate cell has no strict supporting hyperplane."""


class CoplanarityFailed(RuntimeError):
    """Raised when points expected to share a hyperplane do not."""


class SearchFailed(RuntimeError):
    """Raised when an exact search finds no witness."""


class InvalidSelector(ValueError):
    """Raised when an export selector does not apply to the chosen object."""
