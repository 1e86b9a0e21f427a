import math
from abc import ABC, abstractmethod

import numpy as np

from core.errors import BindingError, NetlistError
from circuit import gate_readout, simulate_gate, steady_state_max, steady_state_min
from devices import MEfficiency
from .model import NodeKind


class Semantics(ABC):
    """Abstract base class for the meaning of Min/Max gates in a netlist"""

    @abstractmethod
    def combine(self, gate, a, b):
        """
        Output of one Min/Max gate

        Parameters:
        gate (Gate): The gate record (kind and id)
        a (float): Value of the first operand
        b (float): Value of the second operand

        Returns:
        float: Gate output
        """
        pass


class IdealSemantics(Semantics):
    """Exact min and max"""

    def combine(self, gate, a, b):
        return min(a, b) if gate.kind is NodeKind.MIN else max(a, b)


class DegradedSemantics(Semantics):
    """Settled outputs of gates with finite m-efficiency"""

    def __init__(self, mu):
        self.mu = MEfficiency.coerce(mu)

    def combine(self, gate, a, b):
        if gate.kind is NodeKind.MIN:
            return steady_state_min(a, b, self.mu)
        return steady_state_max(a, b, self.mu)


class TransientSemantics(Semantics):
    """
    Each gate runs its own transient against already-settled operands

    Gate states are read from and written back to the instance, so later
    evaluations continue where this one stopped. A zero t_max reads the
    divider out at the present memristances.
    """

    def __init__(self, instance, dt, t_max):
        self.instance = instance
        self.dt = dt
        self.t_max = t_max

    def combine(self, gate, a, b):
        state = self.instance.gate_states[gate.id]
        if self.t_max == 0:
            return gate_readout(a, b, state)
        trace, state = simulate_gate(a, b, state, self.dt, self.t_max)
        self.instance.gate_states[gate.id] = state
        return trace.final_z


def _checked_inputs(net, values):
    nodes = []
    for name in net.inputs:
        if name not in values:
            raise BindingError(f"Input {name!r} is not bound")
        value = values[name]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise BindingError(f"Input {name!r}: expected a number, got {value!r}")
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            raise BindingError(f"Input {name!r}: value {value} outside [0, 1]")
        nodes.append(float(value))
    return nodes


def evaluate(net, values, semantics):
    """
    Evaluate a netlist in topological order under the given semantics

    Neg and Const gates are exact under every semantics.

    Parameters:
    net (Netlist): Circuit
    values (dict): Input name -> value in [0, 1]
    semantics (Semantics): Meaning of Min/Max gates

    Returns:
    tuple: Output values in netlist order
    """
    nodes = _checked_inputs(net, values)
    for gate in net.gates:
        if gate.kind is NodeKind.CONST:
            nodes.append(gate.value)
        elif gate.kind is NodeKind.NEG:
            nodes.append(1.0 - nodes[gate.args[0]])
        else:
            nodes.append(semantics.combine(gate, nodes[gate.args[0]], nodes[gate.args[1]]))
    return tuple(nodes[output] for output in net.outputs)


def evaluate_ideal(net, values):
    return evaluate(net, values, IdealSemantics())


def evaluate_mu(net, values, mu):
    return evaluate(net, values, DegradedSemantics(mu))


def evaluate_transient(instance, values, dt, t_max):
    """
    Evaluate with per-gate transients, updating the instance's gate states

    Parameters:
    instance (NetlistInstance): Netlist plus persistent gate states
    values (dict): Input name -> value in [0, 1]
    dt (float): Integration step in seconds
    t_max (float): Time budget per gate in seconds; 0 reads out without charging

    Returns:
    tuple: Output values in netlist order
    """
    if not math.isfinite(t_max) or t_max < 0:
        raise NetlistError(f"t_max must be non-negative and finite, got {t_max}")
    with instance.lock:
        return evaluate(instance.netlist, values, TransientSemantics(instance, dt, t_max))


def evaluate_batch(net, matrix, mu=None):
    """
    Ideal (mu=None) or degraded evaluation of many input vectors at once

    Parameters:
    net (Netlist): Circuit
    matrix (array-like): Shape (batch, len(net.inputs)), values in [0, 1]
    mu (MEfficiency or float): m-efficiency, or None for exact min/max

    Returns:
    numpy.ndarray: Shape (batch, len(net.outputs))
    """
    data = np.asarray(matrix, dtype=float)
    if data.ndim != 2 or data.shape[1] != len(net.inputs):
        raise NetlistError(f"Expected a (batch, {len(net.inputs)}) matrix, got shape {data.shape}")
    if data.size and (not np.all(np.isfinite(data)) or data.min() < 0.0 or data.max() > 1.0):
        raise BindingError("Batch input values must lie in [0, 1]")

    inv = None if mu is None else MEfficiency.coerce(mu).inverse
    batch = data.shape[0]
    nodes = [data[:, column] for column in range(data.shape[1])]
    for gate in net.gates:
        if gate.kind is NodeKind.CONST:
            nodes.append(np.full(batch, gate.value))
        elif gate.kind is NodeKind.NEG:
            nodes.append(1.0 - nodes[gate.args[0]])
        else:
            a, b = nodes[gate.args[0]], nodes[gate.args[1]]
            hi, lo = np.maximum(a, b), np.minimum(a, b)
            if inv is not None:
                hi, lo = (hi + inv * lo) / (1.0 + inv), (lo + inv * hi) / (1.0 + inv)
            nodes.append(hi if gate.kind is NodeKind.MAX else lo)
    if not net.outputs:
        return np.empty((batch, 0))
    return np.column_stack([nodes[output] for output in net.outputs])
