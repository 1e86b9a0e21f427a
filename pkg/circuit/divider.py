import math
from dataclasses import dataclass

from core.errors import CircuitError


@dataclass(frozen=True)
class DividerConfig:
    """
    Resistances of the two-source voltage divider

    Parameters:
    r1 (float): Resistance in the first source branch (ohm)
    r2 (float): Resistance in the second source branch (ohm)
    r_load (float): Shared load resistor R (ohm)
    """
    r1: float
    r2: float
    r_load: float

    def __post_init__(self):
        for name in ('r1', 'r2', 'r_load'):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise CircuitError(f"Divider resistance {name} must be positive and finite, got {value}")


def check_voltage(name, value):
    if not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise CircuitError(f"{name} must lie in [0, 1], got {value}")


def loop_currents(v1, v2, r1, r2, r):
    """Unchecked mesh currents; callers validate their inputs"""
    delta = r * (r1 + r2) + r1 * r2
    i1 = (-v1 * (r + r2) + v2 * r) / delta
    i2 = (v2 * (r + r1) - v1 * r) / delta
    return i1, i2


def output_voltage(v1, v2, r1, r2, r):
    """Unchecked divider output; callers validate their inputs"""
    return (v1 * r2 + v2 * r1) / (r1 + r2 + r1 * r2 / r)


def divider_currents(v1, v2, cfg):
    """
    Loop currents of the divider by Cramer's rule

    Parameters:
    v1 (float): First source voltage in [0, 1]
    v2 (float): Second source voltage in [0, 1]
    cfg (DividerConfig): Resistances

    Returns:
    tuple: (i1, i2) in ampere
    """
    check_voltage('v1', v1)
    check_voltage('v2', v2)
    return loop_currents(v1, v2, cfg.r1, cfg.r2, cfg.r_load)


def divider_output(v1, v2, cfg):
    """
    Output voltage across the shared load resistor

    Parameters:
    v1 (float): First source voltage in [0, 1]
    v2 (float): Second source voltage in [0, 1]
    cfg (DividerConfig): Resistances

    Returns:
    float: V = (v1*R2 + v2*R1) / (R1 + R2 + R1*R2/R)
    """
    check_voltage('v1', v1)
    check_voltage('v2', v2)
    return output_voltage(v1, v2, cfg.r1, cfg.r2, cfg.r_load)
