class PrimeLabelError(ValueError):
    """Base class for parameter and scheme errors raised by this package."""


class InvalidParameter(PrimeLabelError):
    pass


class UnsupportedScheme(PrimeLabelError):
    """No closed-form labeling is implemented for the requested parameters."""


class NotApplicable(PrimeLabelError):
    """The requested graph is known to have no prime labeling at all."""
