"""Exception hierarchy shared by every egosim module."""


class EgoSimError(Exception):
    """Base class for all errors raised by egosim."""


class ParseError(EgoSimError, ValueError):
    """A line of an edge list could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class EmptyGraphError(EgoSimError, ValueError):
    """The graph has no nodes."""


class NodeNotFoundError(EgoSimError, LookupError):
    """A node index or label does not exist in the graph."""

    def __str__(self):
        # LookupError would otherwise repr() the message
        return str(self.args[0]) if self.args else ""


class UndefinedSignatureError(EgoSimError, ValueError):
    """A degree signature was requested for an isolated node."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"node {label!r} has degree 0; its degree signature is undefined")


class UnknownDatasetError(EgoSimError, LookupError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class MissingDatasetError(EgoSimError, FileNotFoundError):
    """A descriptor-only dataset was requested but no local file was supplied."""
