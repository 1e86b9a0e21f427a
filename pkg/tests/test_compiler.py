import itertools
import logging

import numpy as np
import pytest
from hypothesis import given, strategies as st

from compiler import (And, Const, Implies, MaxN, MinN, Not, Or, Var, compile_expr, eval_ast, free_variables,
                      lower_implications, parse, push_negations, to_text)
from compiler.parser import MAX_NESTING
from core.errors import BindingError, ParseError
from netlist import NodeKind, evaluate_ideal, kleene_dienes_implies, lukasiewicz_implies

NAMES = ('a', 'b', 'c', 'x', 'y')


def random_expr(rng, depth, implies=False):
    """Random expression tree over NAMES with constants from a coarse grid"""
    if depth == 0 or rng.random() < 0.2:
        if rng.random() < 0.2:
            return Const(float(rng.integers(0, 11)) / 10.0)
        return Var(str(rng.choice(NAMES)))
    choices = ['not', 'and', 'or', 'min', 'max'] + (['implies'] if implies else [])
    op = choices[int(rng.integers(len(choices)))]
    if op == 'not':
        return Not(random_expr(rng, depth - 1, implies))
    if op in ('min', 'max'):
        items = [random_expr(rng, depth - 1, implies) for _ in range(int(rng.integers(1, 4)))]
        return MinN(items) if op == 'min' else MaxN(items)
    node = {'and': And, 'or': Or, 'implies': Implies}[op]
    return node(random_expr(rng, depth - 1, implies), random_expr(rng, depth - 1, implies))


expressions = st.recursive(
    st.one_of(st.sampled_from(NAMES).map(Var), st.floats(0.0, 1.0).map(Const)),
    lambda children: st.one_of(
        children.map(Not),
        st.tuples(children, children).map(lambda pair: And(*pair)),
        st.tuples(children, children).map(lambda pair: Or(*pair)),
        st.tuples(children, children).map(lambda pair: Implies(*pair)),
        st.lists(children, min_size=1, max_size=4).map(MinN),
        st.lists(children, min_size=1, max_size=4).map(MaxN),
    ),
    max_leaves=20,
)


class TestParser:
    def test_precedence(self):
        expr = parse("a or b and not c implies d")
        assert expr == Implies(Or(Var('a'), And(Var('b'), Not(Var('c')))), Var('d'))

    def test_implies_is_right_associative(self):
        assert parse("a implies b implies c") == Implies(Var('a'), Implies(Var('b'), Var('c')))

    def test_and_is_left_associative(self):
        assert parse("a and b and c") == And(And(Var('a'), Var('b')), Var('c'))

    def test_nary_forms_and_numbers(self):
        expr = parse("max(x, 0.5, min(y, 1e-1), .25)")
        assert expr == MaxN((Var('x'), Const(0.5), MinN((Var('y'), Const(0.1))), Const(0.25)))

    def test_multiline_source(self):
        assert parse("not\n  (x\n   or y)") == Not(Or(Var('x'), Var('y')))

    def test_error_position_and_expectation(self):
        with pytest.raises(ParseError) as info:
            parse("x and\n  or y")
        assert (info.value.line, info.value.column) == (2, 3)
        assert "'('" in info.value.expected
        assert 'line 2, column 3' in str(info.value)
        assert "found 'or'" in str(info.value)

    def test_trailing_input(self):
        with pytest.raises(ParseError) as info:
            parse("x y")
        assert info.value.column == 3
        assert 'end of input' in info.value.expected

    def test_unclosed_call(self):
        with pytest.raises(ParseError) as info:
            parse("min(a, b")
        assert "')'" in info.value.expected

    def test_bad_character(self):
        with pytest.raises(ParseError) as info:
            parse("a & b")
        assert info.value.column == 3

    def test_constant_out_of_range(self):
        with pytest.raises(ParseError, match='outside'):
            parse("x or 1.5")

    def test_keywords_are_reserved(self):
        with pytest.raises(ParseError):
            parse("and")

    def test_empty_call(self):
        with pytest.raises(ParseError):
            parse("max()")

    def test_nesting_up_to_the_limit_parses(self):
        depth = MAX_NESTING // 2
        expr = parse("(" * depth + "x" + ")" * depth)
        assert expr == Var('x')
        net = compile_expr(parse("not " * (depth - 1) + "x"))
        (out,) = evaluate_ideal(net, {'x': 0.25})
        assert out == pytest.approx(0.75)

    @pytest.mark.parametrize('text,column', [
        ("(" * 200 + "x" + ")" * 200, MAX_NESTING + 1),
        ("not " * 1000 + "x", 4 * MAX_NESTING + 1),
        ("max(" * 300 + "x" + ")" * 300, 4 * MAX_NESTING + 1),
        (" and ".join(["x"] * 2000), 6 * MAX_NESTING + 3),
        (" implies ".join(["x"] * 2000), 10 * MAX_NESTING + 3),
    ])
    def test_deep_nesting_is_a_parse_error(self, text, column):
        with pytest.raises(ParseError, match='nesting too deep') as info:
            parse(text)
        assert (info.value.line, info.value.column) == (1, column)

    @given(expressions)
    def test_printed_text_parses_back(self, expr):
        assert parse(to_text(expr)) == expr


class TestEvalAst:
    def test_basic(self):
        assert eval_ast(parse("x and not y"), {'x': 0.7, 'y': 0.2}) == pytest.approx(0.7)

    def test_implication_is_lukasiewicz(self):
        env = {'a': 0.9, 'b': 0.2}
        assert eval_ast(parse("a implies b"), env) == pytest.approx(lukasiewicz_implies(0.9, 0.2))

    def test_unbound(self):
        with pytest.raises(BindingError):
            eval_ast(parse("x or y"), {'x': 0.1})

    def test_free_variables_in_first_appearance_order(self):
        assert free_variables(parse("max(y, x) and not y or c")) == ['y', 'x', 'c']


class TestLowering:
    def test_de_morgan(self):
        assert push_negations(parse("not (a and b)")) == Or(Not(Var('a')), Not(Var('b')))
        assert push_negations(parse("not max(a, b)")) == MinN((Not(Var('a')), Not(Var('b'))))

    def test_double_negation_and_constants(self):
        assert push_negations(parse("not not a")) == Var('a')
        assert push_negations(parse("not 0.25")) == Const(0.75)

    def test_implication_lowering(self):
        assert lower_implications(parse("a implies b")) == Or(Not(Var('a')), Var('b'))

    def test_single_variable_has_no_gates(self):
        net = compile_expr(parse("x"))
        assert net.inputs == ('x',)
        assert net.gate_count() == 0
        assert evaluate_ideal(net, {'x': 0.3}) == (0.3,)

    def test_negations_shared_per_input(self):
        net = compile_expr(parse("(not x and y) or (not x and not y) or not x"))
        assert net.gate_count(NodeKind.NEG) == 2

    def test_balanced_nary_tree(self):
        net = compile_expr(parse("min(a, b, c, x, y)"))
        assert net.gate_count(NodeKind.MIN) == 4
        assert net.depth() == 3

    def test_implication_warns_and_uses_kleene_dienes(self, caplog):
        with caplog.at_level(logging.WARNING):
            net = compile_expr(parse("a implies b"))
        assert any('implies' in record.message for record in caplog.records)
        for a, b in itertools.product(np.linspace(0.0, 1.0, 11), repeat=2):
            (out,) = evaluate_ideal(net, {'a': a, 'b': b})
            assert out == pytest.approx(kleene_dienes_implies(a, b))

    def test_compiled_matches_reference_on_random_expressions(self):
        rng = np.random.Generator(np.random.PCG64(6))
        for _ in range(1000):
            expr = random_expr(rng, depth=5)
            net = compile_expr(expr)
            for gate in net.gates:
                if gate.kind is NodeKind.NEG:
                    assert gate.args[0] < len(net.inputs)
            env = {name: float(rng.uniform()) for name in NAMES}
            (out,) = evaluate_ideal(net, {name: env[name] for name in net.inputs})
            assert abs(out - eval_ast(expr, env)) <= 1e-12

    @given(expressions)
    def test_negations_only_on_inputs(self, expr):
        net = compile_expr(expr)
        assert all(gate.args[0] < len(net.inputs) for gate in net.gates if gate.kind is NodeKind.NEG)
