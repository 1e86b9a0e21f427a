import logging
import sys

from analysis import (run_compile, run_convergence, run_eval, run_learning, run_median_vote,
                      run_sort_experiment, run_sweep, save_artifact, format_value)
from netlist import dump_netlist, load_netlist
from .errors import ConfigError

logger = logging.getLogger(__name__)


class ExperimentRunner:
    """Class for running one configured experiment and writing its artifact"""

    CSV_EXPERIMENTS = {
        'sort': run_sort_experiment,
        'sweep': run_sweep,
        'converge': run_convergence,
        'learn': run_learning,
        'median': run_median_vote,
    }

    def __init__(self, config):
        """
        Initialize Experiment Runner

        Parameters:
        config (ExperimentConfig): Validated configuration
        """
        self.config = config

    def header_mu_list(self):
        """mu values recorded in the artifact header; transient runs use the device's own"""
        if self.config.experiment in ('converge', 'learn'):
            return (self.config.device.mu_eff.mu,)
        return self.config.mu_list

    def run(self):
        """
        Run a CSV experiment and save its artifact

        Returns:
        pandas.DataFrame: The rows written
        """
        cfg = self.config
        experiment = self.CSV_EXPERIMENTS.get(cfg.experiment)
        if experiment is None:
            raise ConfigError(f"{cfg.experiment} is not a CSV experiment")

        destination = cfg.output_path or 'stdout'
        logger.info(f"Starting {cfg.experiment}: seed={cfg.seed}, output={destination}")
        df = experiment(cfg)
        save_artifact(df, cfg.experiment, cfg.seed, self.header_mu_list(), cfg.output_path)
        logger.info(f"Finished {cfg.experiment}: {len(df)} rows, seed={cfg.seed}, output={destination}")
        return df

    def evaluate(self, values, expr=None, netlist_path=None, stream=None):
        """
        Evaluate an expression or a netlist file and print one output per line

        Parameters:
        values (dict): Input name -> value
        expr (str): Expression source
        netlist_path (str): JSON netlist file, used when expr is None
        stream (file): Where to print, defaults to stdout

        Returns:
        tuple: Output values
        """
        if (expr is None) == (netlist_path is None):
            raise ConfigError("eval needs exactly one of an expression or a netlist")
        net = run_compile(expr) if expr is not None else load_netlist(netlist_path)
        logger.info(f"Evaluating {len(net.inputs)} inputs under {self.config.semantics} semantics")
        outputs = run_eval(self.config, net, values)
        stream = stream or sys.stdout
        for value in outputs:
            stream.write(format_value(value) + '\n')
        return outputs

    def compile(self, expr):
        """Compile expression source and write the JSON netlist to output_path or stdout"""
        net = run_compile(expr)
        destination = self.config.output_path or sys.stdout
        dump_netlist(net, destination)
        logger.info(f"Compiled {len(net.inputs)} inputs into {net.gate_count()} gates")
        return net
