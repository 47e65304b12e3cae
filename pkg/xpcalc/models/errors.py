"""
xpcalc - Error Types
Every failure the toolkit raises on purpose derives from XpCalcError, so the CLI and the HTTP API
can turn it into an exit code or a 400 response without catching unrelated bugs.

Results that are simply absent (no operator with the requested action, search budget used up) are
returned as values from models.results, not raised.
"""


class XpCalcError(Exception):
    """Root of all toolkit errors"""


class DimensionError(XpCalcError, ValueError):
    """Vector lengths, column counts or moduli do not match"""


class CodeFormatError(XpCalcError, ValueError):
    """Malformed code file, stabiliser file, bit string or cycle string"""


class GateSyntaxError(XpCalcError, ValueError):
    """Gate string does not follow the gate grammar, or needs a higher precision"""


class IndependenceError(XpCalcError):
    """Rows that must be linearly independent mod 2 are not"""


class NotLogicalError(XpCalcError):
    """The operator does not preserve the codespace"""


class CapExceededError(XpCalcError):
    """An enumeration, dense-state or qubit cap would be exceeded"""


class CommutationError(XpCalcError):
    """Stabiliser generators do not pairwise commute"""


class PhaseFitError(XpCalcError):
    """Amplitude phases of a stabiliser state do not fit a level-2 diagonal operator"""
