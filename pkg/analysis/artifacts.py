import logging
import math
import sys

logger = logging.getLogger(__name__)


def mu_label(mu):
    """Column name of an m-efficiency value, e.g. mu_10 or mu_inf"""
    return f"mu_{mu:g}"


def artifact_header(experiment, seed, mu_list):
    """Provenance line that starts every CSV artifact"""
    mus = ','.join(f"{mu:g}" for mu in mu_list)
    return f"# memfuzz {experiment} seed={seed} mu={mus}"


def format_artifact(df, experiment, seed, mu_list):
    """
    Render a result frame as CSV text with its provenance header

    Floats are written with %.17g and rows end in LF, so equal frames give
    byte-identical text on every platform.
    """
    body = df.to_csv(index=False, float_format='%.17g', lineterminator='\n')
    return artifact_header(experiment, seed, mu_list) + '\n' + body


def save_artifact(df, experiment, seed, mu_list, path=None):
    """
    Write a CSV artifact to a file, or to stdout when path is None

    Parameters:
    df (pandas.DataFrame): Result rows
    experiment (str): Experiment name for the header
    seed (int): Seed for the header
    mu_list (list): m-efficiency values for the header
    path (str): Destination file
    """
    text = format_artifact(df, experiment, seed, mu_list)
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    logger.info(f"Saved {len(df)} rows to {path}")


def format_value(value):
    """Shortest round-trip text of a float (at most 17 significant digits)"""
    value = float(value)
    if math.isfinite(value) and value == int(value):
        return str(int(value)) if abs(value) < 1e16 else repr(value)
    return repr(value)
