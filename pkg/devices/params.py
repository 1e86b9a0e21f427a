import math
from dataclasses import dataclass, asdict
from enum import Enum

from core.errors import DeviceError


class DeviceModel(Enum):
    """Memristance profile of a device"""
    IDEAL_BILEVEL = "IdealBilevel"
    EXPONENTIAL_SWITCHING = "ExponentialSwitching"


@dataclass(frozen=True)
class MEfficiency:
    """
    m-efficiency of a device family, the ratio R_OFF / R_ON

    Parameters:
    mu (float): Ratio, strictly greater than 1 (math.inf is the ideal limit)
    """
    mu: float

    def __post_init__(self):
        if math.isnan(self.mu) or self.mu <= 1:
            raise DeviceError(f"m-efficiency must be > 1, got {self.mu}")

    @property
    def inverse(self):
        return 1.0 / self.mu

    @classmethod
    def coerce(cls, mu):
        """Accept either an MEfficiency or a bare number"""
        if isinstance(mu, cls):
            return mu
        return cls(float(mu))


@dataclass(frozen=True)
class DeviceParams:
    """
    Parameters of one memristor device

    Parameters:
    r_on (float): Low resistance rail in ohm
    r_off (float): High resistance rail in ohm
    q0 (float): Charge scale of the ideal bilevel profile in coulomb
    v0 (float): Voltage scale of the exponential switching profile in volt
    k (float): Rate constant of the exponential switching profile in 1/s
    model (DeviceModel): Which memristance profile the device follows
    """
    r_on: float = 100.0
    r_off: float = 10_000.0
    q0: float = 1e-6
    v0: float = 0.2
    k: float = 100.0
    model: DeviceModel = DeviceModel.IDEAL_BILEVEL

    def __post_init__(self):
        if isinstance(self.model, str):
            try:
                object.__setattr__(self, 'model', DeviceModel(self.model))
            except ValueError:
                raise DeviceError(f"Unknown device model: {self.model!r}") from None
        for name in ('r_on', 'r_off', 'q0', 'v0', 'k'):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise DeviceError(f"Device parameter {name} must be a finite number, got {value!r}")
        if not 0 < self.r_on < self.r_off:
            raise DeviceError(f"Device needs 0 < r_on < r_off, got r_on={self.r_on}, r_off={self.r_off}")
        for name in ('q0', 'v0', 'k'):
            if getattr(self, name) <= 0:
                raise DeviceError(f"Device parameter {name} must be positive, got {getattr(self, name)}")

    @property
    def mu_eff(self):
        return MEfficiency(self.r_off / self.r_on)

    def to_dict(self):
        record = asdict(self)
        record['model'] = self.model.value
        return record

    @classmethod
    def from_dict(cls, record):
        """
        Build parameters from the flat JSON record {r_on, r_off, q0, v0, k, model}

        Missing keys fall back to the defaults; unknown keys are rejected.
        """
        known = {'r_on', 'r_off', 'q0', 'v0', 'k', 'model'}
        unknown = sorted(set(record) - known)
        if unknown:
            raise DeviceError(f"Unknown device parameter(s): {unknown}")
        return cls(**record)


@dataclass(frozen=True)
class DeviceState:
    """
    Internal state of one device

    q is used by the ideal bilevel profile, w by the exponential switching
    profile. polarity is the device's orientation in its circuit.
    """
    q: float = 0.0
    w: float = 0.5
    polarity: int = 1

    def __post_init__(self):
        if self.polarity not in (1, -1):
            raise DeviceError(f"Polarity must be +1 or -1, got {self.polarity}")
        if not (math.isfinite(self.q) and math.isfinite(self.w)):
            raise DeviceError(f"Device state must be finite, got q={self.q}, w={self.w}")
        if not 0.0 <= self.w <= 1.0:
            raise DeviceError(f"Normalized state w must lie in [0, 1], got {self.w}")
