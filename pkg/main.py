import argparse
import logging
import os
import sys

from dotenv import load_dotenv

from core.config import ExperimentConfig
from core.errors import ConfigError
from core.runner import ExperimentRunner

logger = logging.getLogger('memfuzz')

LOG_LEVELS = {'error': logging.ERROR, 'warn': logging.WARNING, 'info': logging.INFO, 'debug': logging.DEBUG}


def log_level_from_env():
    """Logging level named by MEMFUZZ_LOG (error, warn, info or debug; default info)"""
    name = os.environ.get('MEMFUZZ_LOG', 'info').strip().lower()
    if name not in LOG_LEVELS:
        raise ConfigError(f"MEMFUZZ_LOG must be one of {', '.join(LOG_LEVELS)}, got {name!r}")
    return LOG_LEVELS[name]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON experiment configuration')
    common.add_argument('--seed', type=int, help='PRNG seed, overrides the configuration')
    common.add_argument('--out', help='Output file (default: stdout)')

    parser = argparse.ArgumentParser(prog='memfuzz', description='Memristor fuzzy-logic simulator and compiler')
    subparsers = parser.add_subparsers(dest='experiment', required=True, metavar='experiment')
    for name in ('sort', 'converge', 'sweep', 'learn', 'median'):
        subparsers.add_parser(name, parents=[common], help=f'Run the {name} experiment and write CSV')

    for name in ('eval', 'compile'):
        sub = subparsers.add_parser(name, parents=[common],
                                    help='Evaluate a circuit' if name == 'eval' else 'Compile an expression to JSON')
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument('--expr', help='Expression source text')
        source.add_argument('--expr-file', help='File holding one expression')
        if name == 'eval':
            source.add_argument('--netlist', help='JSON netlist file')
            sub.add_argument('--semantics', help='ideal, mu=<v> or transient')
            sub.add_argument('bindings', nargs='*', metavar='name=value', help='Input values')
    return parser


def parse_bindings(pairs):
    """Turn ['x=0.7', 'y=0.2'] into {'x': 0.7, 'y': 0.2}"""
    values = {}
    for pair in pairs:
        name, sep, text = pair.partition('=')
        if not sep or not name:
            raise ConfigError(f"Binding must look like name=value, got {pair!r}")
        try:
            values[name] = float(text)
        except ValueError:
            raise ConfigError(f"Binding {pair!r}: {text!r} is not a number") from None
    return values


def read_expression(args):
    if args.expr is not None:
        return args.expr
    if getattr(args, 'expr_file', None) is not None:
        try:
            with open(args.expr_file, 'r', encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            raise ConfigError(f"Cannot read expression file {args.expr_file}: {e}") from e
    return None


def main(argv=None):
    """
    memfuzz command line

    Returns:
    int: 0 on success, 2 on a configuration error, 1 on any other failure
    """
    load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        level = log_level_from_env()
    except ConfigError as e:
        sys.stderr.write(f"memfuzz: {e}\n")
        return 2
    logging.basicConfig(level=level, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    try:
        cfg = ExperimentConfig.load(args.config) if args.config else ExperimentConfig()
        cfg = cfg.with_overrides(experiment=args.experiment, seed=args.seed, output_path=args.out,
                                 semantics=getattr(args, 'semantics', None))
        runner = ExperimentRunner(cfg)

        if args.experiment == 'eval':
            runner.evaluate(parse_bindings(args.bindings), expr=read_expression(args), netlist_path=args.netlist)
        elif args.experiment == 'compile':
            runner.compile(read_expression(args))
        else:
            runner.run()
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return 2
    except Exception as e:
        logger.error(f"{args.experiment} failed: {e}")
        logger.debug("Traceback", exc_info=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
