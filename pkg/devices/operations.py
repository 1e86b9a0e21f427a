import logging
import math
from functools import lru_cache

from core.errors import DeviceError
from .params import DeviceModel
from .ideal_bilevel import IdealBilevelModel
from .exponential_switching import ExponentialSwitchingModel

logger = logging.getLogger(__name__)

_MODELS = {
    DeviceModel.IDEAL_BILEVEL: IdealBilevelModel,
    DeviceModel.EXPONENTIAL_SWITCHING: ExponentialSwitchingModel,
}

# Relative distance to a rail that counts as switched
RAIL_TOLERANCE = 0.01


@lru_cache(maxsize=64)
def model_for(params):
    """
    Get the memristance profile object for a parameter set

    Parameters:
    params (DeviceParams): Device parameters

    Returns:
    MemristorModel: Profile bound to params
    """
    return _MODELS[params.model](params)


def memristance(state, params):
    """Memristance in ohm of a device in the given state"""
    return model_for(params).memristance(state)


def step_device(state, through_current, across_voltage, dt, params):
    """
    Advance one device by dt under the given drive

    Parameters:
    state (DeviceState): Current state
    through_current (float): Current through the device in ampere
    across_voltage (float): Voltage across the device in volt
    dt (float): Step length in seconds, > 0
    params (DeviceParams): Device parameters

    Returns:
    DeviceState: The advanced state
    """
    for name, value in (('through_current', through_current), ('across_voltage', across_voltage), ('dt', dt)):
        if not math.isfinite(value):
            raise DeviceError(f"{name} must be finite, got {value}")
    if dt <= 0:
        raise DeviceError(f"dt must be positive, got {dt}")
    return model_for(params).step(state, through_current, across_voltage, dt)


def near_rail(resistance, params, tolerance=RAIL_TOLERANCE):
    """True if resistance is within `tolerance` relative distance of r_on or r_off"""
    return (abs(resistance - params.r_off) <= tolerance * params.r_off or
            abs(resistance - params.r_on) <= tolerance * params.r_on)


def condition_star_horizon(params, drive_magnitude):
    """
    Model-derived time within which a constant drive must saturate a device

    The ideal bilevel profile gets 10 * q0 / i, the switching profile
    2 / (k * sinh(v / v0)).
    """
    if not math.isfinite(drive_magnitude) or drive_magnitude <= 0:
        raise DeviceError(f"Drive magnitude must be positive and finite, got {drive_magnitude}")
    return model_for(params).condition_star_horizon(drive_magnitude)


def satisfies_condition_star(params, drive_magnitude, horizon):
    """
    Check that a constant drive saturates the device at a rail within a horizon

    The drive is a current (ampere) for the ideal bilevel profile and a
    voltage (volt) for the exponential switching profile. The device starts
    at its midpoint state with positive orientation.

    Parameters:
    params (DeviceParams): Device parameters
    drive_magnitude (float): Constant drive, >= 0
    horizon (float): Simulated time budget in seconds

    Returns:
    bool: True iff memristance gets within 1% of a rail before the horizon
    """
    if not math.isfinite(drive_magnitude) or drive_magnitude < 0:
        raise DeviceError(f"Drive magnitude must be non-negative and finite, got {drive_magnitude}")
    if not math.isfinite(horizon) or horizon < 0:
        raise DeviceError(f"Horizon must be non-negative and finite, got {horizon}")
    if drive_magnitude == 0 or horizon == 0:
        return False

    model = model_for(params)
    rate = model.drive_rate(drive_magnitude)
    if rate <= 0:
        return False

    steps = max(1, math.ceil(horizon * rate / model.rail_step))
    dt = horizon / steps
    state = model.initial_state(polarity=1)
    for step in range(steps):
        if near_rail(model.memristance(state), params):
            logger.debug(f"Condition (*) met after {step} steps ({step * dt:.3e} s)")
            return True
        state = model.step(state, drive_magnitude, drive_magnitude, dt)
    return near_rail(model.memristance(state), params)


def max_stable_dt(params, max_voltage=1.0):
    """
    Largest transient step the profile tolerates when no device sees more than max_voltage

    Parameters:
    params (DeviceParams): Device parameters
    max_voltage (float): Bound on the voltage across a device in volt; inputs in [0, 1] keep it at 1

    Returns:
    float: Step limit in seconds, inf when the limit depends on the circuit
    """
    if not math.isfinite(max_voltage) or max_voltage <= 0:
        raise DeviceError(f"max_voltage must be positive and finite, got {max_voltage}")
    return model_for(params).max_stable_dt(max_voltage)


def switching_slowdown(params, voltage):
    """Ratio of switching rates at `voltage` and `voltage / 2` (exponential switching profile only)"""
    if params.model is not DeviceModel.EXPONENTIAL_SWITCHING:
        raise DeviceError("Switching slowdown is defined for the ExponentialSwitching profile only")
    if not math.isfinite(voltage) or voltage == 0:
        raise DeviceError(f"Voltage must be finite and nonzero, got {voltage}")
    return model_for(params).switching_slowdown(voltage)
