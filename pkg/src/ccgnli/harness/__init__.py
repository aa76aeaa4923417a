"""Corpus loading, the end-to-end pipeline, evaluation and the CLI."""

from .estimator import EntailmentClassifier, LogicalFormTransformer, as_problem
from .pipeline import PROVERS, Config, Outcome, ParseFailure, Resources, bundled_resources, data_path, derive, logical_form, run_problem
from .problems import FORMATS, TAGS, FormatError, Problem, Sentence, UnknownLabel, load_problems, problem_from_record, problem_to_record
from .report import Report, evaluate

__all__ = [
    "EntailmentClassifier",
    "LogicalFormTransformer",
    "as_problem",
    "PROVERS",
    "Config",
    "Outcome",
    "ParseFailure",
    "Resources",
    "bundled_resources",
    "data_path",
    "derive",
    "logical_form",
    "run_problem",
    "FORMATS",
    "TAGS",
    "FormatError",
    "Problem",
    "Sentence",
    "UnknownLabel",
    "load_problems",
    "problem_from_record",
    "problem_to_record",
    "Report",
    "evaluate",
]
