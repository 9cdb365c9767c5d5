class CatCorrelationsError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(CatCorrelationsError, ValueError):
    """A parameter lies outside the model domain (p, t², m, entropy argument)."""


class PreconditionError(CatCorrelationsError, ValueError):
    """A matrix or direction fails the checks an operation requires."""


class BracketingError(CatCorrelationsError):
    """The deficit has no sign change over the requested bracket."""


class ConfigError(CatCorrelationsError):
    """The key=value configuration file is malformed."""
