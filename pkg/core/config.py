import json
import logging
import math
import re
from dataclasses import dataclass, field, fields, replace

from devices import DeviceParams, max_stable_dt
from .errors import ConfigError, DeviceError

logger = logging.getLogger(__name__)

EXPERIMENTS = ('sort', 'converge', 'sweep', 'learn', 'median', 'eval', 'compile')

# Epoch 0 converges on pair A, then B is repeated before A comes back
DEFAULT_SCHEDULE = "A" + "B" * 30 + "A" * 30

_SEMANTICS_RE = re.compile(r"^(ideal|transient|mu=(.+))$")


def parse_mu(value):
    """Accept a number or the string 'inf' as an m-efficiency value > 1"""
    if isinstance(value, str):
        try:
            value = float(value)
        except ValueError:
            raise ConfigError(f"m-efficiency must be a number or 'inf', got {value!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, float)) or math.isnan(value) or value <= 1:
        raise ConfigError(f"m-efficiency values must be > 1, got {value!r}")
    return float(value)


def parse_semantics(text):
    """
    Split a semantics selector into (name, mu)

    Parameters:
    text (str): 'ideal', 'transient' or 'mu=<v>'

    Returns:
    tuple: (name, mu) with mu None unless name is 'mu'
    """
    match = _SEMANTICS_RE.match(text or '')
    if match is None:
        raise ConfigError(f"Semantics must be ideal, transient or mu=<v>, got {text!r}")
    if match.group(2) is not None:
        return 'mu', parse_mu(match.group(2))
    return match.group(1), None


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Everything one experiment run depends on

    Parameters:
    experiment (str): One of sort, converge, sweep, learn, median, eval, compile
    n (int): Problem size (values to sort, voters per median)
    mu_list (list): m-efficiency values, 'inf' allowed
    seed (int): PRNG seed in [0, 2**64)
    device (DeviceParams): Device parameters for every gate
    r_load (float): Load resistor in ohm, None for 1000 * r_off
    dt (float): Integration step in seconds
    t_max (float): Transient budget in seconds
    output_path (str): CSV or netlist destination, None for stdout
    grid_points (int): Points per axis of the convergence grid
    trials (int): Median-vote trials
    epoch_t (float): Length of every learning epoch after the first
    schedule (str): Learning input labels, one character per epoch
    workers (int): Threads for the per-mu columns
    semantics (str): eval semantics
    """
    experiment: str = 'sort'
    n: int = 600
    mu_list: tuple = (10.0, 100.0, 1000.0)
    seed: int = 42
    device: DeviceParams = field(default_factory=DeviceParams)
    r_load: float = None
    dt: float = 1e-3
    t_max: float = 1.0
    output_path: str = None
    grid_points: int = 21
    trials: int = 1000
    epoch_t: float = 0.05
    schedule: str = DEFAULT_SCHEDULE
    workers: int = 1
    semantics: str = 'ideal'

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"Unknown experiment {self.experiment!r}; choose from {', '.join(EXPERIMENTS)}")
        object.__setattr__(self, 'mu_list', tuple(parse_mu(mu) for mu in self.mu_list))
        if not isinstance(self.device, DeviceParams):
            raise ConfigError(f"device must be DeviceParams, got {type(self.device).__name__}")

        for name in ('n', 'seed', 'grid_points', 'trials', 'workers'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{name} must be an integer, got {value!r}")
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must lie in [0, 2**64), got {self.seed}")
        if self.grid_points < 2:
            raise ConfigError(f"grid_points must be >= 2, got {self.grid_points}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")

        for name in ('dt', 't_max', 'epoch_t'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number, got {value!r}")
        if self.dt <= 0:
            raise ConfigError(f"dt must be positive, got {self.dt}")
        if self.t_max < 0:
            raise ConfigError(f"t_max must be non-negative, got {self.t_max}")
        if self.epoch_t <= 0:
            raise ConfigError(f"epoch_t must be positive, got {self.epoch_t}")

        if self.r_load is not None:
            if (isinstance(self.r_load, bool) or not isinstance(self.r_load, (int, float))
                    or not math.isfinite(self.r_load) or self.r_load <= 0):
                raise ConfigError(f"r_load must be a positive number, got {self.r_load!r}")
        if not self.schedule or set(self.schedule) - {'A', 'B'}:
            raise ConfigError(f"schedule must be a non-empty string of A and B, got {self.schedule!r}")
        parse_semantics(self.semantics)
        if self.runs_transient:
            limit = max_stable_dt(self.device)
            if self.dt > limit:
                raise ConfigError(f"dt={self.dt:g} s is too coarse for the {self.device.model.value} profile; "
                                  f"use dt <= {limit:.3g} s")

    @property
    def runs_transient(self):
        """True if the selected experiment integrates gate transients with dt"""
        return self.experiment in ('converge', 'learn') or (
            self.experiment == 'eval' and parse_semantics(self.semantics)[0] == 'transient')

    @property
    def load_resistance(self):
        return float(self.r_load) if self.r_load is not None else 1000.0 * self.device.r_off

    def with_overrides(self, **overrides):
        """Copy with the non-None overrides applied (command-line flags win over the file)"""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes) if changes else self

    @classmethod
    def from_dict(cls, record):
        """
        Build a configuration from its JSON record

        Parameters:
        record (dict): Keys mirror the dataclass fields; 'device' is a flat
            DeviceParams record

        Returns:
        ExperimentConfig: Validated configuration

        Raises:
        ConfigError: On unknown keys or invalid values
        """
        if not isinstance(record, dict):
            raise ConfigError("Configuration must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(record) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration key(s): {unknown}")

        values = dict(record)
        if 'device' in values:
            if not isinstance(values['device'], dict):
                raise ConfigError("device must be a JSON object")
            try:
                values['device'] = DeviceParams.from_dict(values['device'])
            except (DeviceError, TypeError) as e:
                raise ConfigError(f"Invalid device: {e}") from e
        if 'mu_list' in values and not isinstance(values['mu_list'], list):
            raise ConfigError("mu_list must be a JSON array")
        return cls(**values)

    @classmethod
    def load(cls, path):
        """Read and validate a JSON configuration file"""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                record = json.load(f)
        except OSError as e:
            raise ConfigError(f"Cannot read configuration {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path}: invalid JSON ({e})") from e
        cfg = cls.from_dict(record)
        logger.debug(f"Loaded configuration from {path}")
        return cfg

    def to_dict(self):
        record = {f.name: getattr(self, f.name) for f in fields(self)}
        record['device'] = self.device.to_dict()
        record['mu_list'] = [mu if math.isfinite(mu) else 'inf' for mu in self.mu_list]
        return record
