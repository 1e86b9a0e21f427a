import json
import logging

from core.errors import NetlistError
from .model import Gate, Netlist, NodeKind

logger = logging.getLogger(__name__)


def netlist_to_dict(net):
    """JSON-ready record {"inputs", "gates", "outputs"} of a netlist"""
    gates = []
    for gate in net.gates:
        record = {'id': gate.id, 'kind': gate.kind.value, 'args': list(gate.args)}
        if gate.kind is NodeKind.CONST:
            record['value'] = gate.value
        gates.append(record)
    return {'inputs': list(net.inputs), 'gates': gates, 'outputs': list(net.outputs)}


def netlist_from_dict(record):
    """
    Build and validate a netlist from its JSON record

    Parameters:
    record (dict): {"inputs": [names], "gates": [{"id", "kind", "args", "value"?}], "outputs": [ids]}

    Returns:
    Netlist: Validated netlist

    Raises:
    NetlistError: On the first violation, naming the offending gate id
    """
    if not isinstance(record, dict):
        raise NetlistError("Netlist record must be a JSON object")
    missing = [key for key in ('inputs', 'gates', 'outputs') if key not in record]
    if missing:
        raise NetlistError(f"Netlist record is missing {missing}")
    if not all(isinstance(record[key], list) for key in ('inputs', 'gates', 'outputs')):
        raise NetlistError("Netlist inputs, gates and outputs must be JSON arrays")

    gates = []
    for position, entry in enumerate(record['gates']):
        if not isinstance(entry, dict):
            raise NetlistError(f"gate at position {position}: expected a JSON object")
        gate_id = entry.get('id')
        unknown = sorted(set(entry) - {'id', 'kind', 'args', 'value'})
        if unknown:
            raise NetlistError(f"gate {gate_id}: unknown field(s) {unknown}")
        try:
            kind = NodeKind(entry.get('kind'))
        except ValueError:
            raise NetlistError(f"gate {gate_id}: unknown kind {entry.get('kind')!r}") from None
        args = entry.get('args', [])
        if not isinstance(args, list):
            raise NetlistError(f"gate {gate_id}: args must be a JSON array")
        gates.append(Gate(gate_id, kind, tuple(args), entry.get('value')))

    return Netlist(tuple(record['inputs']), tuple(gates), tuple(record['outputs']))


def load_netlist(path):
    """Read a netlist from a JSON file"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            record = json.load(f)
    except json.JSONDecodeError as e:
        raise NetlistError(f"{path}: invalid JSON ({e})") from e
    net = netlist_from_dict(record)
    logger.debug(f"Loaded netlist from {path}: {len(net.inputs)} inputs, {len(net.gates)} gates")
    return net


def dump_netlist(net, path_or_file):
    """Write a netlist as JSON to a path or an open text file"""
    text = json.dumps(netlist_to_dict(net), indent=2) + "\n"
    if hasattr(path_or_file, 'write'):
        path_or_file.write(text)
    else:
        with open(path_or_file, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
