# config and runner are imported from their modules: both depend on devices/,
# which depends on core.errors.
from .errors import (
    MemfuzzError,
    ConfigError,
    DeviceError,
    InstabilityError,
    CircuitError,
    NetlistError,
    ParseError,
    BindingError,
)

__all__ = ['MemfuzzError', 'ConfigError', 'DeviceError', 'InstabilityError',
           'CircuitError', 'NetlistError', 'ParseError', 'BindingError']
