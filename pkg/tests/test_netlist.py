import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circuit import GateKind, gate_error_bound
from core.errors import BindingError, NetlistError
from devices import DeviceParams
from netlist import (Gate, Netlist, NetlistBuilder, NetlistInstance, NodeKind, bitonic_comparator_count,
                     bitonic_network, bitonic_stage_count, evaluate_batch, evaluate_ideal, evaluate_mu,
                     evaluate_transient, implication_network, kleene_dienes_implies, lukasiewicz_implies,
                     median_network)

PARAMS = DeviceParams(r_on=100.0, r_off=1e4)


class TestNetlistStructure:
    def test_builder_assigns_dense_ids(self):
        builder = NetlistBuilder()
        a = builder.add_input('a')
        b = builder.add_input('b')
        hi, lo = builder.comparator(a, b)
        net = builder.build([lo, hi])
        assert (a, b, hi, lo) == (0, 1, 2, 3)
        assert net.gate_count() == 2
        assert net.gate_count(NodeKind.MAX) == 1
        assert net.depth() == 1

    def test_input_after_gate_rejected(self):
        builder = NetlistBuilder()
        builder.const(0.5)
        with pytest.raises(NetlistError):
            builder.add_input('late')

    def test_forward_reference_names_gate(self):
        with pytest.raises(NetlistError, match='gate 1'):
            Netlist(('a',), (Gate(1, NodeKind.NEG, (2,)),), (1,))

    def test_wrong_arity(self):
        with pytest.raises(NetlistError, match='gate 2'):
            Netlist(('a', 'b'), (Gate(2, NodeKind.MIN, (0,)),), (2,))

    def test_sparse_ids(self):
        with pytest.raises(NetlistError, match='dense'):
            Netlist(('a',), (Gate(3, NodeKind.NEG, (0,)),), (3,))

    def test_const_range(self):
        with pytest.raises(NetlistError):
            Netlist((), (Gate(0, NodeKind.CONST, (), 1.5),), (0,))

    def test_duplicate_input(self):
        with pytest.raises(NetlistError):
            Netlist(('a', 'a'), (), (0,))

    def test_unknown_output(self):
        with pytest.raises(NetlistError):
            Netlist(('a',), (), (4,))

    def test_neg_does_not_add_depth(self):
        builder = NetlistBuilder()
        a = builder.add_input('a')
        net = builder.build([builder.neg(builder.neg(a))])
        assert net.depth() == 0


class TestEvaluate:
    def setup_method(self):
        builder = NetlistBuilder()
        x = builder.add_input('x')
        y = builder.add_input('y')
        self.net = builder.build([builder.min(x, builder.neg(y)), builder.max(x, y), builder.const(0.25)])

    def test_ideal(self):
        assert evaluate_ideal(self.net, {'x': 0.7, 'y': 0.2}) == pytest.approx((0.7, 0.7, 0.25))

    def test_degraded(self):
        out = evaluate_mu(self.net, {'x': 0.8, 'y': 0.3}, 10.0)
        assert out[1] == pytest.approx(0.754545, abs=1e-6)
        assert out[2] == 0.25

    def test_unbound_input(self):
        with pytest.raises(BindingError, match="'y'"):
            evaluate_ideal(self.net, {'x': 0.5})

    @pytest.mark.parametrize('value', [-0.01, 1.01, math.nan, 'high'])
    def test_out_of_range_input(self, value):
        with pytest.raises(BindingError):
            evaluate_ideal(self.net, {'x': value, 'y': 0.5})

    def test_batch_matches_scalar(self):
        rng = np.random.Generator(np.random.PCG64(5))
        matrix = rng.uniform(0.0, 1.0, size=(50, 2))
        batch = evaluate_batch(self.net, matrix, 10.0)
        for row, out in zip(matrix, batch):
            assert tuple(out) == evaluate_mu(self.net, self.net.bind(row), 10.0)

    def test_batch_rejects_wrong_width(self):
        with pytest.raises(NetlistError):
            evaluate_batch(self.net, np.zeros((3, 5)))


class TestBitonic:
    @pytest.mark.parametrize('n', [2, 4, 8, 16])
    def test_zero_one_principle(self, n):
        net = bitonic_network(n)
        vectors = np.array(list(itertools.product((0.0, 1.0), repeat=n)))
        sorted_out = evaluate_batch(net, vectors)
        np.testing.assert_array_equal(sorted_out, np.sort(vectors, axis=1))

    def test_sorts_random_vectors(self):
        rng = np.random.Generator(np.random.PCG64(11))
        for _ in range(1000):
            n = int(rng.integers(1, 40))
            values = rng.uniform(0.0, 1.0, size=n)
            net = bitonic_network(n)
            assert list(evaluate_ideal(net, net.bind(values))) == sorted(values)

    def test_four_inputs(self):
        net = bitonic_network(4)
        assert net.gate_count() // 2 == 6 == bitonic_comparator_count(4)
        assert net.depth() == 3 == bitonic_stage_count(4)

    @pytest.mark.parametrize('n', [2, 8, 16, 32])
    def test_comparator_count_closed_form(self, n):
        assert bitonic_network(n).gate_count() == 2 * bitonic_comparator_count(n)
        assert bitonic_network(n).depth() == bitonic_stage_count(n)

    @pytest.mark.parametrize('n', [3, 5, 6, 7, 12])
    def test_padded_sizes(self, n):
        net = bitonic_network(n)
        assert len(net.inputs) == len(net.outputs) == n
        assert net.depth() <= bitonic_stage_count(n)
        vectors = np.array(list(itertools.product((0.0, 1.0), repeat=n)))
        np.testing.assert_array_equal(evaluate_batch(net, vectors), np.sort(vectors, axis=1))

    def test_single_input_passes_through(self):
        net = bitonic_network(1)
        assert net.gate_count() == 0
        assert evaluate_ideal(net, {'x0': 0.3}) == (0.3,)

    @pytest.mark.parametrize('n', [0, -2, 2.5, True])
    def test_rejects_bad_size(self, n):
        with pytest.raises(NetlistError):
            bitonic_network(n)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.floats(0.0, 1.0), min_size=2, max_size=24), st.floats(1.01, 1e4))
    def test_degraded_sort_conserves_sum(self, values, mu):
        net = bitonic_network(len(values))
        out = evaluate_batch(net, [values], mu)[0]
        assert out.sum() == pytest.approx(sum(values), abs=1e-9)

    def test_fidelity_improves_with_mu(self):
        rng = np.random.Generator(np.random.PCG64(21))
        values = rng.uniform(0.0, 1.0, size=(1, 64))
        net = bitonic_network(64)
        ideal = evaluate_batch(net, values)
        errors = [np.abs(evaluate_batch(net, values, mu) - ideal).max() for mu in (10.0, 100.0, 1000.0, 1e5)]
        assert errors == sorted(errors, reverse=True)
        assert np.abs(evaluate_batch(net, values, math.inf) - ideal).max() == 0.0


class TestMedian:
    def test_rejects_even(self):
        with pytest.raises(NetlistError):
            median_network(4)

    def test_single_voter(self):
        assert evaluate_ideal(median_network(1), {'x0': 0.42}) == (0.42,)

    def test_matches_numpy_median(self):
        rng = np.random.Generator(np.random.PCG64(9))
        net = median_network(9)
        scores = rng.uniform(0.0, 1.0, size=(500, 9))
        np.testing.assert_array_equal(evaluate_batch(net, scores)[:, 0], np.median(scores, axis=1))

    def test_degraded_median_error(self):
        rng = np.random.Generator(np.random.PCG64(10))
        n = 9
        scores = rng.uniform(0.0, 1.0, size=(1000, n))
        net = median_network(n)
        error = np.abs(evaluate_batch(net, scores, 100.0)[:, 0] - np.median(scores, axis=1))
        levels = (n - 1).bit_length()
        assert error.max() <= gate_error_bound(100.0, 0.0) * levels * bitonic_stage_count(n)


class TestImplication:
    def test_network_outputs_complement(self):
        builder = NetlistBuilder()
        a = builder.add_input('a')
        b = builder.add_input('b')
        impl, not_impl = implication_network(builder, a, builder.neg(a), b, builder.neg(b))
        net = builder.build([impl, not_impl])
        for x, y in itertools.product(np.linspace(0.0, 1.0, 11), repeat=2):
            out = evaluate_ideal(net, {'a': x, 'b': y})
            assert out[0] == pytest.approx(kleene_dienes_implies(x, y))
            assert out[0] + out[1] == pytest.approx(1.0)

    def test_closed_forms(self):
        assert lukasiewicz_implies(0.6, 0.6) == 1.0
        assert lukasiewicz_implies(0.9, 0.2) == pytest.approx(0.3)
        assert kleene_dienes_implies(0.9, 0.2) == pytest.approx(0.2)
        assert kleene_dienes_implies(0.0, 0.0) == lukasiewicz_implies(0.0, 0.0) == 1.0


class TestTransient:
    def setup_method(self):
        self.net = bitonic_network(4)
        self.values = {'x0': 0.9, 'x1': 0.2, 'x2': 0.6, 'x3': 0.4}

    def test_fresh_instance_has_one_state_per_gate(self):
        instance = NetlistInstance.fresh(self.net, PARAMS, 1e7)
        assert len(instance.gate_states) == self.net.gate_count()
        kinds = {state.kind for state in instance.gate_states.values()}
        assert kinds == {GateKind.MAX, GateKind.MIN}

    def test_instance_rejects_missing_states(self):
        with pytest.raises(NetlistError):
            NetlistInstance(self.net, {})

    def test_settled_transient_close_to_degraded(self):
        instance = NetlistInstance.fresh(self.net, PARAMS, 1e7)
        transient = evaluate_transient(instance, self.values, 1e-3, 2.0)
        degraded = evaluate_mu(self.net, self.values, PARAMS.mu_eff)
        bound = gate_error_bound(PARAMS.mu_eff, 1e-3) * self.net.depth()
        for got, want in zip(transient, degraded):
            assert abs(got - want) <= bound

    def test_zero_budget_reads_out_without_charging(self):
        instance = NetlistInstance.fresh(self.net, PARAMS, 1e7)
        before = dict(instance.gate_states)
        evaluate_transient(instance, self.values, 1e-3, 0.0)
        assert instance.gate_states == before

    def test_repeated_evaluation_converges(self):
        instance = NetlistInstance.fresh(self.net, PARAMS, 1e7)
        degraded = evaluate_mu(self.net, self.values, PARAMS.mu_eff)
        errors = []
        for _ in range(40):
            outputs = evaluate_transient(instance, self.values, 1e-3, 0.05)
            errors.append(max(abs(got - want) for got, want in zip(outputs, degraded)))
        # leakage leaves a floor around 1e-8 once settled
        assert all(later <= earlier + 1e-8 for earlier, later in zip(errors, errors[1:]))
        assert errors[-1] < errors[0]
        assert errors[-1] <= gate_error_bound(PARAMS.mu_eff, 1e-3) * self.net.depth()

    def test_negative_budget_rejected(self):
        instance = NetlistInstance.fresh(self.net, PARAMS, 1e7)
        with pytest.raises(NetlistError):
            evaluate_transient(instance, self.values, 1e-3, -1.0)
