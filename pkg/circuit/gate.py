import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

from core.errors import CircuitError, InstabilityError
from devices import DeviceModel, MEfficiency, model_for
from .divider import check_voltage, loop_currents, output_voltage
from .trace import Trace

logger = logging.getLogger(__name__)

# Relative memristance change per step below which a gate counts as settled
CONVERGENCE_TOLERANCE = 1e-9

# Load resistance as a multiple of r_off when none is given
DEFAULT_LOAD_FACTOR = 1000.0


class GateKind(Enum):
    MAX = "Max"
    MIN = "Min"


def gate_polarities(kind, params):
    """
    Device orientations (dev1, dev2) for a gate

    In a Max gate built from ideal bilevel devices the first device charges
    with +I1 and the second with -I2, so that X > Y drives M1 to R_ON and M2
    to R_OFF. Min mirrors both. The switching profile's state variable grows
    toward R_ON instead of R_OFF, so its orientations are flipped to keep
    every device heading for the same rail.
    """
    first = 1 if kind is GateKind.MAX else -1
    if params.model is DeviceModel.EXPONENTIAL_SWITCHING:
        first = -first
    return first, -first


@dataclass(frozen=True)
class GateState:
    """
    Antipodal memristor pair forming one min or max gate

    Parameters:
    kind (GateKind): Max or Min
    dev1 (DeviceState): Device in the X branch
    dev2 (DeviceState): Device in the Y branch
    params (DeviceParams): Parameters shared by both devices
    r_load (float): Load resistor R in ohm
    """
    kind: GateKind
    dev1: object
    dev2: object
    params: object
    r_load: float

    def __post_init__(self):
        if self.dev1.polarity != -self.dev2.polarity:
            raise CircuitError("Gate devices must be antipodal (opposite polarities)")
        if (self.dev1.polarity, self.dev2.polarity) != gate_polarities(self.kind, self.params):
            raise CircuitError(f"Device polarities {self.dev1.polarity}, {self.dev2.polarity} "
                               f"do not match a {self.kind.value} gate")
        if not math.isfinite(self.r_load) or self.r_load <= 0:
            raise CircuitError(f"Load resistance must be positive and finite, got {self.r_load}")

    @classmethod
    def fresh(cls, kind, params, r_load=None):
        """
        Build a gate whose devices sit at their midpoint states

        Parameters:
        kind (GateKind): Max or Min
        params (DeviceParams): Device parameters
        r_load (float): Load resistor, defaults to 1000 * r_off

        Returns:
        GateState: New gate
        """
        model = model_for(params)
        p1, p2 = gate_polarities(kind, params)
        if r_load is None:
            r_load = DEFAULT_LOAD_FACTOR * params.r_off
        return cls(kind, model.initial_state(p1), model.initial_state(p2), params, float(r_load))

    def memristances(self):
        model = model_for(self.params)
        return model.memristance(self.dev1), model.memristance(self.dev2)


def gate_readout(x, y, gate):
    """Output voltage for inputs (x, y) at the gate's present memristances, without advancing it"""
    check_voltage('x', x)
    check_voltage('y', y)
    m1, m2 = gate.memristances()
    return output_voltage(x, y, m1, m2, gate.r_load)


def simulate_gate(x, y, gate, dt, t_max):
    """
    Forward-Euler transient of one gate under constant inputs

    Each step reads the memristances, solves the divider with R1 = M1 and
    R2 = M2, and charges each device with its loop current (device voltage
    is current times memristance). The run ends at t_max or once neither
    memristance moves more than 1e-9 relative in a step.

    Parameters:
    x (float): Voltage on the first input pin, in [0, 1]
    y (float): Voltage on the second input pin, in [0, 1]
    gate (GateState): Starting state
    dt (float): Step length in seconds
    t_max (float): Simulated time budget in seconds, >= dt

    Returns:
    tuple: (Trace, GateState) with the final state to continue from
    """
    check_voltage('x', x)
    check_voltage('y', y)
    if not math.isfinite(dt) or dt <= 0:
        raise CircuitError(f"dt must be positive and finite, got {dt}")
    if not math.isfinite(t_max) or t_max < dt:
        raise CircuitError(f"t_max must be finite and >= dt, got t_max={t_max}, dt={dt}")

    model = model_for(gate.params)
    limit = model.max_state_change()
    r = gate.r_load
    n_steps = max(1, int(math.floor(t_max / dt * (1.0 + 1e-12))))

    dev1, dev2 = gate.dev1, gate.dev2
    m1, m2 = model.memristance(dev1), model.memristance(dev2)
    times, zs, m1s, m2s = [], [], [], []
    converged = False

    for k in range(1, n_steps + 1):
        i1, i2 = loop_currents(x, y, m1, m2, r)
        v1, v2 = i1 * m1, i2 * m2
        if abs(model.state_change(i1, v1, dt)) > limit or abs(model.state_change(i2, v2, dt)) > limit:
            raise InstabilityError(f"dt={dt} s moves a device state by more than {limit:g} in one step; "
                                   f"reduce dt")
        dev1 = model.step(dev1, i1, v1, dt)
        dev2 = model.step(dev2, i2, v2, dt)
        n1, n2 = model.memristance(dev1), model.memristance(dev2)

        times.append(k * dt)
        zs.append(output_voltage(x, y, n1, n2, r))
        m1s.append(n1)
        m2s.append(n2)

        if abs(n1 - m1) <= CONVERGENCE_TOLERANCE * m1 and abs(n2 - m2) <= CONVERGENCE_TOLERANCE * m2:
            converged = True
            break
        m1, m2 = n1, n2

    if converged:
        logger.debug(f"{gate.kind.value} gate settled after {len(times)} steps: M1={m1s[-1]:.6g}, M2={m2s[-1]:.6g}")
    else:
        logger.debug(f"{gate.kind.value} gate reached t_max={t_max} s before settling")

    return Trace(times, zs, m1s, m2s), replace(gate, dev1=dev1, dev2=dev2)


def _check_inputs(x, y):
    check_voltage('x', x)
    check_voltage('y', y)


def steady_state_max(x, y, mu):
    """
    Settled output of a max gate with finite m-efficiency (R -> infinity)

    Parameters:
    x (float): First input in [0, 1]
    y (float): Second input in [0, 1]
    mu (MEfficiency or float): R_OFF / R_ON

    Returns:
    float: (max + min/mu) / (1 + 1/mu)
    """
    _check_inputs(x, y)
    inv = MEfficiency.coerce(mu).inverse
    return (max(x, y) + inv * min(x, y)) / (1.0 + inv)


def steady_state_min(x, y, mu):
    """Settled output of a min gate with finite m-efficiency: (min + max/mu) / (1 + 1/mu)"""
    _check_inputs(x, y)
    inv = MEfficiency.coerce(mu).inverse
    return (min(x, y) + inv * max(x, y)) / (1.0 + inv)


def gate_error_bound(mu, r_off_over_r):
    """
    Upper bound on |settled output - exact max/min| for inputs in [0, 1]

    Parameters:
    mu (MEfficiency or float): m-efficiency
    r_off_over_r (float): R_OFF / R, in [0, 1)

    Returns:
    float: 1/mu / (1 + 1/mu) + r_off_over_r
    """
    inv = MEfficiency.coerce(mu).inverse
    if not math.isfinite(r_off_over_r) or not 0.0 <= r_off_over_r < 1.0:
        raise CircuitError(f"r_off_over_r must lie in [0, 1), got {r_off_over_r}")
    return inv / (1.0 + inv) + r_off_over_r
