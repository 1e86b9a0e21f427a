import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd

from circuit import GateKind, GateState, gate_error_bound, gate_readout, simulate_gate, steady_state_max
from compiler import compile_expr, parse
from core.config import parse_semantics
from core.errors import ConfigError
from netlist import (NetlistInstance, bitonic_network, evaluate_batch, evaluate_ideal, evaluate_mu,
                     evaluate_transient, median_network)
from .artifacts import mu_label

logger = logging.getLogger(__name__)

# Input pairs of the learning experiment; B is A with the pins swapped
LEARNING_PAIRS = {'A': (0.8, 0.3), 'B': (0.3, 0.8)}

# Beta(a, b) score distributions of a voter for true label 1 and label 0
VOTER_SCORES = {1: (5.0, 2.0), 0: (2.0, 5.0)}

# Smallest settling band in volt
SETTLING_FLOOR = 1e-4


def make_rng(seed):
    """Seeded permuted-congruential generator used by every experiment"""
    return np.random.Generator(np.random.PCG64(seed))


def parallel_map(fn, items, workers=1):
    """Map fn over items, on a thread pool when workers > 1; results keep input order"""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))


def sqrt_ramp(n):
    """The values sqrt(k) / sqrt(n) for k = 1 .. n, so the largest is exactly 1"""
    return np.sqrt(np.arange(1, n + 1, dtype=float)) / math.sqrt(n)


def _shuffled_ramp(cfg):
    if cfg.n < 2:
        raise ConfigError(f"Sorting experiments need n >= 2, got {cfg.n}")
    return make_rng(cfg.seed).permutation(sqrt_ramp(cfg.n))


def _require_transient_budget(cfg):
    if cfg.t_max < cfg.dt:
        raise ConfigError(f"Transient experiments need t_max >= dt, got t_max={cfg.t_max}, dt={cfg.dt}")


def run_sort_experiment(cfg):
    """
    Sort a shuffled square-root ramp with the bitonic network under each semantics

    Parameters:
    cfg (ExperimentConfig): Uses n, seed, mu_list and workers

    Returns:
    pandas.DataFrame: Columns rank, ideal, mu_<v> ...
    """
    shuffled = _shuffled_ramp(cfg)
    net = bitonic_network(cfg.n)
    matrix = shuffled[np.newaxis, :]
    logger.info(f"Sorting {cfg.n} values through {net.gate_count()} gates, depth {net.depth()}")

    columns = {'rank': np.arange(1, cfg.n + 1), 'ideal': evaluate_batch(net, matrix)[0]}
    outputs = parallel_map(lambda mu: evaluate_batch(net, matrix, mu)[0], cfg.mu_list, cfg.workers)
    for mu, output in zip(cfg.mu_list, outputs):
        columns[mu_label(mu)] = output
    return pd.DataFrame(columns)


def run_sweep(cfg):
    """
    Distance of the degraded sort from the ideal sort for every mu

    Returns:
    pandas.DataFrame: Columns mu, linf_error, mean_abs_error, output_sum
    """
    shuffled = _shuffled_ramp(cfg)
    net = bitonic_network(cfg.n)
    matrix = shuffled[np.newaxis, :]
    ideal = evaluate_batch(net, matrix)[0]

    def measure(mu):
        output = evaluate_batch(net, matrix, mu)[0]
        deviation = np.abs(output - ideal)
        return {'mu': mu, 'linf_error': deviation.max(), 'mean_abs_error': deviation.mean(),
                'output_sum': output.sum()}

    rows = parallel_map(measure, cfg.mu_list, cfg.workers)
    return pd.DataFrame(rows, columns=['mu', 'linf_error', 'mean_abs_error', 'output_sum'])


def run_convergence(cfg):
    """
    Transient Max gates over an input grid against the settled closed form

    Every grid point starts a fresh gate with both devices at their
    midpoints. The settling tolerance is 1% of the output's total excursion,
    floored at 1e-4 V. Load leakage drifts equal-input gates by less than that.

    Parameters:
    cfg (ExperimentConfig): Uses grid_points, device, r_load, dt, t_max and workers

    Returns:
    pandas.DataFrame: Columns x, y, z_final, z_formula, abs_err, t_settle
    """
    _require_transient_budget(cfg)
    axis = np.linspace(0.0, 1.0, cfg.grid_points)
    points = [(float(x), float(y)) for x in axis for y in axis]
    mu = cfg.device.mu_eff
    r_load = cfg.load_resistance

    def settle(point):
        x, y = point
        gate = GateState.fresh(GateKind.MAX, cfg.device, r_load)
        z0 = gate_readout(x, y, gate)
        trace, _ = simulate_gate(x, y, gate, cfg.dt, cfg.t_max)
        z_final = trace.final_z
        z_formula = steady_state_max(x, y, mu)
        tolerance = max(0.01 * abs(z_final - z0), SETTLING_FLOOR)
        return {'x': x, 'y': y, 'z_final': z_final, 'z_formula': z_formula,
                'abs_err': abs(z_final - z_formula),
                't_settle': trace.settling_time(tolerance, initial_z=z0)}

    rows = parallel_map(settle, points, cfg.workers)
    df = pd.DataFrame(rows, columns=['x', 'y', 'z_final', 'z_formula', 'abs_err', 't_settle'])
    logger.info(f"Largest deviation from the closed form over {len(df)} points: {df['abs_err'].max():.3g}")
    return df


def run_learning(cfg):
    """
    Drive one persistent Max gate with a schedule of input pairs

    Epoch 0 runs for t_max, every later epoch for epoch_t. After each change
    of input pair the log reports how many epochs the gate needed to bring
    its error under gate_error_bound.

    Parameters:
    cfg (ExperimentConfig): Uses schedule, device, r_load, dt, t_max and epoch_t

    Returns:
    pandas.DataFrame: Columns epoch, input_label, z, err
    """
    _require_transient_budget(cfg)
    if cfg.epoch_t < cfg.dt:
        raise ConfigError(f"epoch_t must be >= dt, got epoch_t={cfg.epoch_t}, dt={cfg.dt}")

    r_load = cfg.load_resistance
    bound = gate_error_bound(cfg.device.mu_eff, cfg.device.r_off / r_load)
    gate = GateState.fresh(GateKind.MAX, cfg.device, r_load)

    rows = []
    run_start, reached = 0, False
    for epoch, label in enumerate(cfg.schedule):
        if epoch > 0 and label != cfg.schedule[epoch - 1]:
            if not reached:
                logger.warning(f"Input {cfg.schedule[epoch - 1]} never reached the error bound {bound:.4g}")
            run_start, reached = epoch, False

        x, y = LEARNING_PAIRS[label]
        duration = cfg.t_max if epoch == 0 else cfg.epoch_t
        trace, gate = simulate_gate(x, y, gate, cfg.dt, duration)
        z = trace.final_z
        err = abs(z - max(x, y))
        rows.append({'epoch': epoch, 'input_label': label, 'z': z, 'err': err})

        if not reached and err <= bound:
            reached = True
            logger.info(f"Input {label} reached the error bound {bound:.4g} after "
                        f"{epoch - run_start + 1} epoch(s) (epoch {epoch})")

    if not reached:
        logger.warning(f"Input {cfg.schedule[-1]} never reached the error bound {bound:.4g}")
    return pd.DataFrame(rows, columns=['epoch', 'input_label', 'z', 'err'])


def voter_scores(rng, trials, n):
    """
    Labels and classifier scores for the median-vote experiment

    Returns:
    tuple: (labels with shape (trials,), scores with shape (trials, n))
    """
    labels = rng.integers(0, 2, size=trials)
    a = np.where(labels == 1, VOTER_SCORES[1][0], VOTER_SCORES[0][0])
    b = np.where(labels == 1, VOTER_SCORES[1][1], VOTER_SCORES[0][1])
    scores = rng.beta(a[:, np.newaxis], b[:, np.newaxis], size=(trials, n))
    return labels, scores


def run_median_vote(cfg):
    """
    Median of n voter scores per trial through the median network

    Parameters:
    cfg (ExperimentConfig): Uses n (odd), trials, seed, mu_list and workers

    Returns:
    pandas.DataFrame: Columns trial, label, oracle, ideal, mu_<v> ...
    """
    if cfg.n % 2 == 0:
        raise ConfigError(f"Median voting needs an odd number of voters, got n={cfg.n}; "
                          f"set \"n\": {cfg.n - 1} (or another odd value) in the --config file")
    labels, scores = voter_scores(make_rng(cfg.seed), cfg.trials, cfg.n)
    net = median_network(cfg.n)

    columns = {'trial': np.arange(cfg.trials), 'label': labels,
               'oracle': np.median(scores, axis=1), 'ideal': evaluate_batch(net, scores)[:, 0]}
    outputs = parallel_map(lambda mu: evaluate_batch(net, scores, mu)[:, 0], cfg.mu_list, cfg.workers)
    for mu, output in zip(cfg.mu_list, outputs):
        columns[mu_label(mu)] = output
    df = pd.DataFrame(columns)
    agreement = ((df['ideal'] >= 0.5) == (df['label'] == 1)).mean()
    logger.info(f"Median vote agrees with the label in {agreement:.1%} of {cfg.trials} trials")
    return df


def run_eval(cfg, net, values):
    """
    Evaluate a netlist under cfg.semantics

    Parameters:
    cfg (ExperimentConfig): Uses semantics, and device, r_load, dt, t_max for transient runs
    net (Netlist): Circuit to evaluate
    values (dict): Input name -> value in [0, 1]

    Returns:
    tuple: Output values in netlist order
    """
    extra = sorted(set(values) - set(net.inputs))
    if extra:
        logger.warning(f"Ignoring bindings for unknown input(s): {extra}")
    name, mu = parse_semantics(cfg.semantics)
    if name == 'ideal':
        return evaluate_ideal(net, values)
    if name == 'mu':
        return evaluate_mu(net, values, mu)
    instance = NetlistInstance.fresh(net, cfg.device, cfg.load_resistance)
    return evaluate_transient(instance, values, cfg.dt, cfg.t_max)


def run_compile(text):
    """Parse expression source and compile it to a netlist"""
    return compile_expr(parse(text))
