from .ast import Var, Const, Not, And, Or, Implies, MinN, MaxN, to_text, free_variables
from .parser import parse, tokenize
from .evaluate import eval_ast
from .lowering import lower_implications, push_negations, compile_expr

__all__ = ['Var', 'Const', 'Not', 'And', 'Or', 'Implies', 'MinN', 'MaxN', 'to_text',
           'free_variables', 'parse', 'tokenize', 'eval_ast', 'lower_implications',
           'push_negations', 'compile_expr']
