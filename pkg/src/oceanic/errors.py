"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` (bad input, the
command line exits with status 1) and :class:`HypothesisError` (valid input
but the requested method does not apply, exit status 2).
"""


class OceanicError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(OceanicError, ValueError):
    """Input rejected during construction or parsing."""


class NonPositiveQuota(ValidationError):
    pass


class QuotaNotBelowOne(ValidationError):
    pass


class NonPositiveMajorWeight(ValidationError):
    pass


class NegativeOcean(ValidationError):
    pass


class EmptyGame(ValidationError):
    pass


class OceanlessGame(ValidationError):
    """The ocean has zero mass, so ocean quantities are undefined."""


class ZeroAtoms(ValidationError):
    pass


class GridOutOfRange(ValidationError):
    pass


class MalformedRow(ValidationError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateEntity(ValidationError):
    pass


class SharesExceedTotal(ValidationError):
    pass


class EmptySnapshot(ValidationError):
    pass


class GameFileError(ValidationError):
    """Structured game file could not be parsed; the message names the field."""


class HypothesisError(OceanicError):
    """A method was asked to evaluate a game outside its domain."""


class UnsupportedShape(HypothesisError):
    pass


class NotInteriorCase(HypothesisError):
    pass


class HypothesisViolated(HypothesisError):
    pass


class TooManyMajors(HypothesisError):
    pass


class CoefficientOverflow(HypothesisError):
    pass


class Intractable(HypothesisError):
    pass
