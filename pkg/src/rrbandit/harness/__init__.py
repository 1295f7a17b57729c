"""Experiment harness: spec files, runners, and the command-line tool."""

from .boundsio import run_bounds
from .config import ConfigError, RunSpec, load_spec, parse_overrides
from .toy import make_toy_bandit, run_toy, smooth_minimizer, toy_objective
from .vqa import aggregate, build_instance, run_single, run_vqa

__all__ = ["ConfigError", "RunSpec", "aggregate", "build_instance",
           "load_spec", "make_toy_bandit", "parse_overrides", "run_bounds",
           "run_single", "run_toy", "run_vqa", "smooth_minimizer",
           "toy_objective"]
