import math

from core.errors import BindingError
from netlist.builders import lukasiewicz_implies
from .ast import And, Const, Implies, MaxN, MinN, Not, Or, Var


def eval_ast(expr, env):
    """
    Reference evaluation of an expression with exact fuzzy operators

    not is 1 - x, and/or are min/max, implies is min(1, 1 - a + b).

    Parameters:
    expr: Expression tree
    env (dict): Variable name -> value in [0, 1]

    Returns:
    float: Value in [0, 1]
    """
    if isinstance(expr, Var):
        if expr.name not in env:
            raise BindingError(f"Input {expr.name!r} is not bound")
        value = env[expr.name]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise BindingError(f"Input {expr.name!r}: expected a number, got {value!r}")
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            raise BindingError(f"Input {expr.name!r}: value {value} outside [0, 1]")
        return float(value)
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Not):
        return 1.0 - eval_ast(expr.operand, env)
    if isinstance(expr, And):
        return min(eval_ast(expr.left, env), eval_ast(expr.right, env))
    if isinstance(expr, Or):
        return max(eval_ast(expr.left, env), eval_ast(expr.right, env))
    if isinstance(expr, Implies):
        return lukasiewicz_implies(eval_ast(expr.left, env), eval_ast(expr.right, env))
    if isinstance(expr, MinN):
        return min(eval_ast(item, env) for item in expr.items)
    if isinstance(expr, MaxN):
        return max(eval_ast(item, env) for item in expr.items)
    raise TypeError(f"Not an expression node: {expr!r}")
