from .artifacts import mu_label, artifact_header, format_artifact, save_artifact, format_value
from .experiments import (
    make_rng,
    sqrt_ramp,
    voter_scores,
    run_sort_experiment,
    run_sweep,
    run_convergence,
    run_learning,
    run_median_vote,
    run_eval,
    run_compile,
)

__all__ = ['mu_label', 'artifact_header', 'format_artifact', 'save_artifact', 'format_value',
           'make_rng', 'sqrt_ramp', 'voter_scores', 'run_sort_experiment', 'run_sweep',
           'run_convergence', 'run_learning', 'run_median_vote', 'run_eval', 'run_compile']
