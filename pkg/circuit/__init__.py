from .divider import DividerConfig, divider_currents, divider_output
from .trace import Trace
from .gate import (
    GateKind,
    GateState,
    gate_polarities,
    gate_readout,
    simulate_gate,
    steady_state_max,
    steady_state_min,
    gate_error_bound,
)

__all__ = ['DividerConfig', 'divider_currents', 'divider_output', 'Trace', 'GateKind',
           'GateState', 'gate_polarities', 'gate_readout', 'simulate_gate',
           'steady_state_max', 'steady_state_min', 'gate_error_bound']
