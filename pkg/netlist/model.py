import math
import threading
from dataclasses import dataclass, field
from enum import Enum

from core.errors import NetlistError
from circuit import GateKind, GateState


class NodeKind(Enum):
    MIN = "Min"
    MAX = "Max"
    NEG = "Neg"
    CONST = "Const"


ARITY = {NodeKind.MIN: 2, NodeKind.MAX: 2, NodeKind.NEG: 1, NodeKind.CONST: 0}


@dataclass(frozen=True)
class Gate:
    """
    One gate record of a netlist

    Parameters:
    id (int): Node id of the gate's output
    kind (NodeKind): Operation
    args (tuple): Operand node ids (2 for Min/Max, 1 for Neg, none for Const)
    value (float): Constant level for Const gates, otherwise None
    """
    id: int
    kind: NodeKind
    args: tuple = ()
    value: float = None


@dataclass(frozen=True)
class Netlist:
    """
    Feed-forward network of fuzzy gates

    Input nodes take ids 0 .. len(inputs) - 1; gates follow with dense ids
    in topological order.

    Parameters:
    inputs (tuple): Ordered input names
    gates (tuple): Gate records, each operand id preceding the gate's own id
    outputs (tuple): Node ids exposed as outputs, in order
    """
    inputs: tuple
    gates: tuple
    outputs: tuple

    def __post_init__(self):
        object.__setattr__(self, 'inputs', tuple(self.inputs))
        object.__setattr__(self, 'gates', tuple(self.gates))
        object.__setattr__(self, 'outputs', tuple(self.outputs))
        self.validate()

    @property
    def node_count(self):
        return len(self.inputs) + len(self.gates)

    def validate(self):
        """Check every structural invariant, raising NetlistError on the first violation"""
        seen = set()
        for name in self.inputs:
            if not isinstance(name, str) or not name:
                raise NetlistError(f"Input names must be non-empty strings, got {name!r}")
            if name in seen:
                raise NetlistError(f"Duplicate input name {name!r}")
            seen.add(name)

        for position, gate in enumerate(self.gates):
            expected_id = len(self.inputs) + position
            if gate.id != expected_id:
                raise NetlistError(f"gate {gate.id}: expected dense id {expected_id}")
            if not isinstance(gate.kind, NodeKind):
                raise NetlistError(f"gate {gate.id}: unknown kind {gate.kind!r}")
            if len(gate.args) != ARITY[gate.kind]:
                raise NetlistError(f"gate {gate.id}: {gate.kind.value} takes {ARITY[gate.kind]} operand(s), "
                                   f"got {len(gate.args)}")
            for arg in gate.args:
                if isinstance(arg, bool) or not isinstance(arg, int) or not 0 <= arg < gate.id:
                    raise NetlistError(f"gate {gate.id}: operand {arg!r} does not precede the gate")
            if gate.kind is NodeKind.CONST:
                if (isinstance(gate.value, bool) or not isinstance(gate.value, (int, float))
                        or not math.isfinite(gate.value) or not 0.0 <= gate.value <= 1.0):
                    raise NetlistError(f"gate {gate.id}: Const value must lie in [0, 1], got {gate.value!r}")
            elif gate.value is not None:
                raise NetlistError(f"gate {gate.id}: only Const gates carry a value")

        for output in self.outputs:
            if isinstance(output, bool) or not isinstance(output, int) or not 0 <= output < self.node_count:
                raise NetlistError(f"Output {output!r} is not a node of the netlist")

    def gate_count(self, kind=None):
        if kind is None:
            return len(self.gates)
        return sum(1 for gate in self.gates if gate.kind is kind)

    def depth(self):
        """Longest chain of Min/Max gates, i.e. the number of comparator stages"""
        levels = [0] * self.node_count
        for gate in self.gates:
            level = max((levels[arg] for arg in gate.args), default=0)
            if gate.kind in (NodeKind.MIN, NodeKind.MAX):
                level += 1
            levels[gate.id] = level
        return max(levels, default=0)

    def bind(self, values):
        """Map an ordered sequence of input values onto the input names"""
        values = list(values)
        if len(values) != len(self.inputs):
            raise NetlistError(f"Expected {len(self.inputs)} input values, got {len(values)}")
        return dict(zip(self.inputs, values))


class NetlistBuilder:
    """Incremental construction of a Netlist; inputs must be declared before any gate"""

    def __init__(self):
        self.inputs = []
        self.gates = []

    def _next_id(self):
        return len(self.inputs) + len(self.gates)

    def add_input(self, name):
        if self.gates:
            raise NetlistError(f"Input {name!r} declared after the first gate")
        self.inputs.append(name)
        return len(self.inputs) - 1

    def _add(self, kind, args=(), value=None):
        gate = Gate(self._next_id(), kind, tuple(args), value)
        self.gates.append(gate)
        return gate.id

    def min(self, a, b):
        return self._add(NodeKind.MIN, (a, b))

    def max(self, a, b):
        return self._add(NodeKind.MAX, (a, b))

    def neg(self, a):
        return self._add(NodeKind.NEG, (a,))

    def const(self, value):
        return self._add(NodeKind.CONST, (), float(value))

    def comparator(self, a, b):
        """Append a Max and a Min gate on the same operands; returns (hi, lo)"""
        return self.max(a, b), self.min(a, b)

    def build(self, outputs):
        return Netlist(tuple(self.inputs), tuple(self.gates), tuple(outputs))


@dataclass
class NetlistInstance:
    """
    A netlist together with the persistent memristor state of each Min/Max gate

    Parameters:
    netlist (Netlist): Circuit structure
    gate_states (dict): Gate id -> GateState, one per Min/Max gate
    """
    netlist: Netlist
    gate_states: dict
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        expected = {gate.id: gate.kind for gate in self.netlist.gates
                    if gate.kind in (NodeKind.MIN, NodeKind.MAX)}
        if set(self.gate_states) != set(expected):
            raise NetlistError("Instance needs exactly one gate state per Min/Max gate")
        for gate_id, kind in expected.items():
            wanted = GateKind.MAX if kind is NodeKind.MAX else GateKind.MIN
            if self.gate_states[gate_id].kind is not wanted:
                raise NetlistError(f"gate {gate_id}: state is a {self.gate_states[gate_id].kind.value} gate, "
                                   f"netlist says {kind.value}")

    @classmethod
    def fresh(cls, netlist, params, r_load=None):
        """
        Instance with every gate's devices at their midpoint states

        Parameters:
        netlist (Netlist): Circuit structure
        params (DeviceParams): Device parameters for every gate
        r_load (float): Load resistor, defaults to 1000 * r_off

        Returns:
        NetlistInstance: New instance
        """
        states = {}
        for gate in netlist.gates:
            if gate.kind is NodeKind.MAX:
                states[gate.id] = GateState.fresh(GateKind.MAX, params, r_load)
            elif gate.kind is NodeKind.MIN:
                states[gate.id] = GateState.fresh(GateKind.MIN, params, r_load)
        return cls(netlist, states)
