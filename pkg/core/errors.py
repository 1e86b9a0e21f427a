class MemfuzzError(Exception):
    """Base class for every error raised by memfuzz"""


class ConfigError(MemfuzzError, ValueError):
    """Raised when an experiment configuration fails validation"""


class DeviceError(MemfuzzError, ValueError):
    """Raised for invalid device parameters, states or drives"""


class InstabilityError(DeviceError):
    """Raised when a single integration step moves a device state too far"""


class CircuitError(MemfuzzError, ValueError):
    """Raised for invalid divider or gate inputs"""


class NetlistError(MemfuzzError, ValueError):
    """Raised for malformed netlists and bad input bindings"""


class ParseError(MemfuzzError, ValueError):
    """
    Syntax error in a fuzzy expression

    Parameters:
    message (str): What went wrong
    line (int): 1-based line of the offending token
    column (int): 1-based column of the offending token
    expected (tuple): Descriptions of the tokens that would have been accepted
    """

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        super().__init__(f"line {line}, column {column}: {message}")


class BindingError(NetlistError):
    """Raised when an input or variable is unbound or its value lies outside [0, 1]"""
