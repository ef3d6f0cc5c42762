"""Exception hierarchy shared by all semdisco modules."""

from __future__ import annotations


class SemdiscoError(Exception):
    pass


class TermError(SemdiscoError, ValueError):
    """A term or triple violates the RDF data model."""


class UnknownPrefixError(SemdiscoError, KeyError):
    def __init__(self, label: str, line: int | None = None, column: int | None = None):
        super().__init__(label)
        self.label = label
        self.line = line
        self.column = column

    def __str__(self) -> str:
        text = f"unknown prefix {self.label!r}"
        if self.line is not None:
            text = f"line {self.line}, column {self.column}: {text}"
        return text


class RdfSyntaxError(SemdiscoError):
    """Turtle or N-Triples input could not be parsed."""

    def __init__(self, message: str, line: int, column: int | None = None, token: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        text = f"{where}: {message}"
        if token is not None:
            text += f" (at {token!r})"
        super().__init__(text)


class SparqlSyntaxError(SemdiscoError):
    def __init__(self, message: str, position: int):
        self.message = message
        self.position = position
        super().__init__(f"position {position}: {message}")


class QueryValidationError(SemdiscoError):
    """Query parsed but is semantically invalid (e.g. unbound projection)."""


class FixtureMissError(SemdiscoError, LookupError):
    def __init__(self, text_hash: str):
        self.text_hash = text_hash
        super().__init__(f"no recorded NLU result for text hash {text_hash}")


class NluTransportError(SemdiscoError):
    def __init__(self, message: str, status: int | None = None):
        self.status = status
        super().__init__(message if status is None else f"HTTP {status}: {message}")


class NluResponseError(SemdiscoError):
    """The NLU service answered with something we cannot map."""


class AliasError(SemdiscoError):
    pass


class ConfigError(SemdiscoError):
    pass


class ReportFormatError(SemdiscoError, ValueError):
    pass
