"""Exception hierarchy shared by every part of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by assocgraded."""


class GcdNotOne(AlgebraError):
    pass


class EmptyGenerators(AlgebraError):
    pass


class FieldMismatch(AlgebraError):
    pass


class NotInRing(AlgebraError):
    pass


class PrecisionExhausted(AlgebraError):
    pass


class NotContained(AlgebraError):
    pass


class NoReductionWithinBound(AlgebraError):
    pass


class StabilizationNotReached(AlgebraError):
    pass


class CriteriaDisagree(AlgebraError):
    """Two criteria that are theorems to agree returned different verdicts.

    This always indicates a bug (logic or precision), never bad input.
    """


class HypothesisFailure(AlgebraError):
    pass


class HypothesisNotDetected(AlgebraError):
    pass


class NotArtinian(AlgebraError):
    pass


class ConductorMismatch(AlgebraError):
    pass


class NotMinimalGenerators(AlgebraError):
    pass


class InconclusiveAtBound(AlgebraError):
    pass


class UnknownName(AlgebraError):
    pass


class ParseError(AlgebraError):
    def __init__(self, message, line=None, column=None, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        self.message = message
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        msg = where + message
        if self.expected:
            msg += " (expected " + " | ".join(self.expected) + ")"
        super().__init__(msg)


class CorpusMismatch(AlgebraError):
    def __init__(self, mismatches):
        self.mismatches = list(mismatches)
        lines = [f"{m['case']}.{m['field']}: expected {m['expected']!r}, got {m['got']!r}"
                 for m in self.mismatches]
        super().__init__("corpus mismatch:\n  " + "\n  ".join(lines))
