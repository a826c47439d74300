"""Exception hierarchy shared by every module."""


class GencharError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ResourceError(GencharError):
    """A configured enumeration or Groebner budget was exceeded."""


class FieldError(GencharError):
    pass


class UnitKindError(GencharError):
    """Units of incomparable kinds were mixed in one relation computation."""


class PreconditionError(GencharError):
    pass


class UnresolvedComponentError(GencharError):
    """A component intersection or containment could not be decided."""


class ParseError(GencharError):
    pass
