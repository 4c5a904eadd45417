"""Exception types shared across the package."""


class LowNoiseError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(LowNoiseError, ValueError):
    """Operands have incompatible dimensions or exceed the dimension cap."""


class DomainError(LowNoiseError, ValueError):
    """A scalar argument lies outside its admissible range."""


class ContractViolationError(LowNoiseError, ValueError):
    """An input violates a numerical precondition (hermiticity, trace, norm)."""


class UsageError(LowNoiseError, ValueError):
    """Bad user-facing input: unknown names, malformed flags or files."""


class SpecFileError(UsageError):
    """A channel spec file failed to parse.  Carries the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ChannelValidationError(LowNoiseError):
    """A loaded channel failed validation.  Carries the validation report."""

    def __init__(self, report, message: str = "channel failed validation"):
        super().__init__(message)
        self.report = report
