import logging

from core.errors import NetlistError
from netlist import NetlistBuilder
from .ast import And, Const, Implies, MaxN, MinN, Not, Or, Var, contains_implication, free_variables

logger = logging.getLogger(__name__)


def lower_implications(expr):
    """
    Replace every a implies b by (not a) or b

    Min/max gates cannot realise min(1, 1 - a + b). The lowered form is the
    Kleene-Dienes implication, which agrees with it only on crisp inputs.
    """
    if isinstance(expr, Implies):
        return Or(Not(lower_implications(expr.left)), lower_implications(expr.right))
    if isinstance(expr, Not):
        return Not(lower_implications(expr.operand))
    if isinstance(expr, And):
        return And(lower_implications(expr.left), lower_implications(expr.right))
    if isinstance(expr, Or):
        return Or(lower_implications(expr.left), lower_implications(expr.right))
    if isinstance(expr, MinN):
        return MinN(lower_implications(item) for item in expr.items)
    if isinstance(expr, MaxN):
        return MaxN(lower_implications(item) for item in expr.items)
    return expr


def push_negations(expr, negate=False):
    """
    Move every negation down onto a variable

    De Morgan swaps and/or and min/max, double negations cancel and a negated
    constant c becomes 1 - c. Implications must be lowered first.

    Parameters:
    expr: Implication-free expression tree
    negate (bool): Whether expr sits under an odd number of negations

    Returns:
    Expression tree whose only Not nodes wrap a Var
    """
    if isinstance(expr, Var):
        return Not(expr) if negate else expr
    if isinstance(expr, Const):
        return Const(1.0 - expr.value) if negate else expr
    if isinstance(expr, Not):
        return push_negations(expr.operand, not negate)
    if isinstance(expr, (And, Or)):
        left, right = push_negations(expr.left, negate), push_negations(expr.right, negate)
        if isinstance(expr, And) != negate:
            return And(left, right)
        return Or(left, right)
    if isinstance(expr, (MinN, MaxN)):
        items = tuple(push_negations(item, negate) for item in expr.items)
        if isinstance(expr, MinN) != negate:
            return MinN(items)
        return MaxN(items)
    if isinstance(expr, Implies):
        raise NetlistError("Implications must be lowered before pushing negations")
    raise TypeError(f"Not an expression node: {expr!r}")


class _Emitter:
    def __init__(self, names):
        self.builder = NetlistBuilder()
        self.inputs = {name: self.builder.add_input(name) for name in names}
        self.negated = {}

    def emit(self, expr):
        if isinstance(expr, Var):
            return self.inputs[expr.name]
        if isinstance(expr, Not):
            name = expr.operand.name
            if name not in self.negated:
                self.negated[name] = self.builder.neg(self.inputs[name])
            return self.negated[name]
        if isinstance(expr, Const):
            return self.builder.const(expr.value)
        if isinstance(expr, And):
            return self.builder.min(self.emit(expr.left), self.emit(expr.right))
        if isinstance(expr, Or):
            return self.builder.max(self.emit(expr.left), self.emit(expr.right))
        if isinstance(expr, MinN):
            return self.balanced(expr.items, self.builder.min)
        if isinstance(expr, MaxN):
            return self.balanced(expr.items, self.builder.max)
        raise TypeError(f"Not an expression node: {expr!r}")

    def balanced(self, items, gate):
        if len(items) == 1:
            return self.emit(items[0])
        middle = len(items) // 2
        return gate(self.balanced(items[:middle], gate), self.balanced(items[middle:], gate))


def compile_expr(expr):
    """
    Lower an expression to a single-output netlist of Min, Max, Neg and Const gates

    Inputs are named after the free variables in order of first appearance.
    Each negated variable gets one Neg gate right on its input, shared by
    every use, and n-ary min/max become balanced binary trees.

    Parameters:
    expr: Expression tree

    Returns:
    Netlist: Compiled circuit
    """
    if contains_implication(expr):
        logger.warning("Lowering implies to max(not a, b); compiled results differ from min(1, 1 - a + b)")
    lowered = push_negations(lower_implications(expr))
    emitter = _Emitter(free_variables(expr))
    output = emitter.emit(lowered)
    net = emitter.builder.build([output])
    logger.debug(f"Compiled {len(net.inputs)} inputs into {net.gate_count()} gates, depth {net.depth()}")
    return net
