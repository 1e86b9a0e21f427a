import math
from dataclasses import dataclass

from core.errors import ParseError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    """Fuzzy constant in [0, 1]"""
    value: float

    def __post_init__(self):
        if (isinstance(self.value, bool) or not isinstance(self.value, (int, float))
                or not math.isfinite(self.value) or not 0.0 <= self.value <= 1.0):
            raise ParseError(f"constant {self.value!r} outside [0, 1]", 0, 0)
        object.__setattr__(self, 'value', float(self.value))


@dataclass(frozen=True)
class Not:
    operand: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Implies:
    left: object
    right: object


@dataclass(frozen=True)
class MinN:
    """min(e1, ..., ek) with k >= 1"""
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(self.items))
        if not self.items:
            raise ParseError("min() needs at least one argument", 0, 0)


@dataclass(frozen=True)
class MaxN:
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, 'items', tuple(self.items))
        if not self.items:
            raise ParseError("max() needs at least one argument", 0, 0)


_BINARY = {And: 'and', Or: 'or', Implies: 'implies'}


def to_text(expr):
    """
    Render an expression in the surface syntax

    Binary operators are fully parenthesised, so parsing the text gives back
    an equal tree.

    Parameters:
    expr: Expression tree

    Returns:
    str: Source text
    """
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Const):
        return repr(expr.value)
    if isinstance(expr, Not):
        return f"not {to_text(expr.operand)}"
    if type(expr) in _BINARY:
        return f"({to_text(expr.left)} {_BINARY[type(expr)]} {to_text(expr.right)})"
    if isinstance(expr, (MinN, MaxN)):
        name = 'min' if isinstance(expr, MinN) else 'max'
        return f"{name}({', '.join(to_text(item) for item in expr.items)})"
    raise TypeError(f"Not an expression node: {expr!r}")


def children(expr):
    if isinstance(expr, Not):
        return (expr.operand,)
    if type(expr) in _BINARY:
        return (expr.left, expr.right)
    if isinstance(expr, (MinN, MaxN)):
        return expr.items
    return ()


def free_variables(expr):
    """Variable names in order of first appearance, left to right"""
    names = []
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            if node.name not in names:
                names.append(node.name)
        else:
            stack.extend(reversed(children(node)))
    return names


def contains_implication(expr):
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Implies):
            return True
        stack.extend(children(node))
    return False
