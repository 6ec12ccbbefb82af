"""Self-checking reproductions of the tables, identities and conjectures."""

from .fixtures import SequenceFixture, fixture_lookup, robbins
from .registry import REGISTRY, Experiment, experiment_names, get_experiment, run_all, run_experiment
from .report import CONJECTURE_HOLDS_TO_DEPTH, ERROR, FAIL, PASS, ExperimentReport

__all__ = [
    "CONJECTURE_HOLDS_TO_DEPTH",
    "ERROR",
    "FAIL",
    "PASS",
    "REGISTRY",
    "Experiment",
    "ExperimentReport",
    "SequenceFixture",
    "experiment_names",
    "fixture_lookup",
    "get_experiment",
    "robbins",
    "run_all",
    "run_experiment",
]
