"""Exception hierarchy for regmaps."""

from typing import Optional


class RegMapsError(Exception):
    """Base class for every error raised by regmaps."""


class RelatorSyntaxError(RegMapsError, ValueError):
    """A relator string does not conform to the relator grammar."""

    def __init__(self, message: str, position: Optional[int] = None, text: Optional[str] = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownFamilyError(RegMapsError, KeyError):
    """No preset family with the requested name."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown family"


class ParameterRangeError(RegMapsError, ValueError):
    """Preset or construction parameters outside the supported range."""


class CosetLimitExceeded(RegMapsError):
    """Enumeration defined more cosets than the configured limit allows."""

    def __init__(self, limit: int, defined: int):
        self.limit = limit
        self.defined = defined
        super().__init__(f"coset limit {limit} exceeded ({defined} cosets defined)")


class TableError(RegMapsError, ValueError):
    """A coset table is malformed."""


class IncompleteTableError(TableError):
    """A coset table has undefined entries."""


class DisconnectedTableError(TableError):
    """A coset table is not connected from coset 1."""


class NotProperError(RegMapsError, ValueError):
    """A quotient of the extended triangle group is degenerate."""


class CensusIncompleteError(RegMapsError):
    """The census does not reach the order a computation needs."""


class CensusStateError(RegMapsError):
    """Census files on disk are missing or inconsistent."""


class VerificationError(RegMapsError, ValueError):
    """A verifier was called outside its hypotheses or with an unknown claim."""
