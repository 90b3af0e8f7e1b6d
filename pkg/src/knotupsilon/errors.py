"""Exception types shared across the library."""


class KnotLibError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(KnotLibError, ValueError):
    """Malformed serialized data (bad JSON shape, unknown keys, bad types)."""


class InvalidComplexError(KnotLibError, ValueError):
    """A complex violates its structural constraints.

    Carries the list of violations from the validator.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("invalid complex: " + "; ".join(self.violations))


class NonAdmissibleError(KnotLibError, ValueError):
    """Homology is not one-dimensional in the distinguished grading."""


class MissingDataError(KnotLibError, ValueError):
    """A knot record lacks a field required by the requested operation."""
