from core.errors import NetlistError
from .model import NetlistBuilder, Netlist


def comparator(builder, a, b):
    """
    Append one Max and one Min gate sharing operands (a, b)

    Parameters:
    builder (NetlistBuilder): Netlist under construction
    a (int): First operand node id
    b (int): Second operand node id

    Returns:
    tuple: (hi, lo) node ids
    """
    return builder.comparator(a, b)


def _route(builder, low, high, ascending):
    """
    Compare the wires at a lower and a higher position

    None stands for a padding sentinel sitting at the top rail. It is >= every
    signal, so a comparator touching it only routes wires and emits no gate.
    """
    if low is None and high is None:
        return None, None
    if low is None or high is None:
        signal = high if low is None else low
        return (signal, None) if ascending else (None, signal)
    hi, lo = comparator(builder, low, high)
    return (lo, hi) if ascending else (hi, lo)


def bitonic_network(n):
    """
    Batcher's bitonic sorter over n inputs named x0 .. x{n-1}

    Non-power-of-two sizes are built for the next power of two with the extra
    wires held at the top rail; those wires end up at the top and are
    dropped. Outputs are in ascending order.

    Parameters:
    n (int): Number of inputs, >= 1

    Returns:
    Netlist: The sorting network
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NetlistError(f"Bitonic network needs n >= 1, got {n!r}")

    size = 1 << (n - 1).bit_length()
    builder = NetlistBuilder()
    wires = [builder.add_input(f"x{i}") for i in range(n)] + [None] * (size - n)

    block = 2
    while block <= size:
        span = block // 2
        while span >= 1:
            for i in range(size):
                partner = i ^ span
                if partner > i:
                    ascending = (i & block) == 0
                    wires[i], wires[partner] = _route(builder, wires[i], wires[partner], ascending)
            span //= 2
        block *= 2

    outputs = wires[:n]
    if any(wire is None for wire in outputs):
        raise NetlistError(f"Padding reached the kept outputs of the {n}-input sorter")
    return builder.build(outputs)


def bitonic_comparator_count(n):
    """Comparators in a bitonic sorter for n a power of two: (n/4) * L * (L + 1), L = log2 n"""
    if n < 1 or n & (n - 1):
        raise NetlistError(f"Closed-form comparator count needs a power of two, got {n}")
    levels = n.bit_length() - 1
    return n * levels * (levels + 1) // 4


def bitonic_stage_count(n):
    """Parallel comparator stages of a bitonic sorter: L * (L + 1) / 2 with L = ceil(log2 n)"""
    if n < 1:
        raise NetlistError(f"Stage count needs n >= 1, got {n}")
    levels = (n - 1).bit_length()
    return levels * (levels + 1) // 2


def median_network(n):
    """
    Bitonic sorter exposing only its middle output

    Parameters:
    n (int): Odd number of inputs

    Returns:
    Netlist: Single-output median circuit
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise NetlistError(f"Median network needs an odd n >= 1, got {n!r}")
    net = bitonic_network(n)
    return Netlist(net.inputs, net.gates, (net.outputs[n // 2],))


def implication_network(builder, a, not_a, b, not_b):
    """
    Implication and its negation from inputs and their precomputed negations

    impl = max(not a, b) and not_impl = min(a, not b), the form min/max gates
    can realise (Kleene-Dienes).

    Returns:
    tuple: (impl, not_impl) node ids
    """
    return builder.max(not_a, b), builder.min(a, not_b)


def lukasiewicz_implies(a, b):
    """Closed-form implication min(1, 1 - a + b) on [0, 1]"""
    return min(1.0, 1.0 - (a - b))


def kleene_dienes_implies(a, b):
    return max(1.0 - a, b)
