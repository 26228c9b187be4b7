"""Exact computations in the symplectic oscillator algebra sp_2n x H_n.

Elements are passed as strings in the same syntax the ``oak`` command line
tool uses; reports come back as parsed JSON.
"""

import json

from . import _oak
from ._oak import DivisionByZero, ParseError, basis, bracket, dim, f_map, normal_order, act

__all__ = [
    "DivisionByZero",
    "ParseError",
    "act",
    "basis",
    "bracket",
    "classify",
    "dim",
    "f_map",
    "normal_order",
    "run_cli",
    "verify_hom",
    "verify_twist",
    "verify_verma_factorization",
    "verma_char",
]


def _scalars(values):
    return [str(v) for v in values]


def verify_hom(map="f", rank=1):
    return json.loads(_oak.verify_hom(map, rank))


def verify_twist(b, rank, indices=None, a=None, depth=4):
    b = _scalars(b)
    if indices is None:
        indices = list(range(1, len(b) + 1))
    return json.loads(_oak.verify_twist(list(indices), b, rank, None if a is None else _scalars(a), depth))


def verma_char(lambda_, algebra="g", depth=4):
    return json.loads(_oak.verma_char(_scalars(lambda_), algebra, depth))


def verify_verma_factorization(lambda_, depth=6):
    return json.loads(_oak.verify_verma_factorization(_scalars(lambda_), depth))


def classify(table, depth=0):
    """Flag sets of a character table (a dict as returned by verma_char)."""
    if not isinstance(table, str):
        table = json.dumps(table)
    return json.loads(_oak.classify(table, depth))


def run_cli(*args):
    """Runs one ``oak`` invocation in-process; returns (exit_code, stdout, stderr)."""
    return _oak.run_cli([str(a) for a in args])
