"""Exception types shared across the library."""


class HyplabError(Exception):
    """Base class for all library errors."""


class DomainError(HyplabError):
    """A function was evaluated outside its domain."""


class CarrierError(HyplabError):
    """An element does not belong to the hypergroup carrier."""


class AxiomError(HyplabError):
    """A hypergroup axiom is violated where an operation requires it."""


class NotGeneratedError(HyplabError):
    """An element was not reached within the configured ball cap."""


class NoGeneratorError(HyplabError):
    """The hypergroup has no generator set, so word length is undefined."""


class GroupValidationError(HyplabError):
    """A purported group table fails the group axioms."""


class NotAConjHypergroupError(HyplabError):
    """The operation needs a conjugacy-class hypergroup with class data."""


class GroupWeightError(HyplabError):
    """A purported group weight fails submultiplicativity or positivity."""


class WrongCarrierError(HyplabError):
    """The operation needs a different kind of carrier."""


class NormalizationError(HyplabError):
    """Infinitely many product-weight factors fail omega_i(e) = 1."""


class UnboundedFiberError(HyplabError):
    """A pushforward fiber could not be exhausted, so the infimum is not certified."""


class LengthMismatchError(HyplabError):
    """Trace data length does not match the representation dimension."""


class NoDecompositionError(HyplabError):
    """The requested T^2 decomposition's preconditions are not available."""


class RouteUnavailableError(HyplabError):
    """The requested bound route's certificate chain is not available."""


class MissingConstantError(HyplabError):
    """A required configuration constant (e.g. C_n) is unset."""


class InvalidParamError(HyplabError):
    """A parameter is outside its admissible range."""


class ConfigError(HyplabError):
    """Malformed run configuration or input file."""
