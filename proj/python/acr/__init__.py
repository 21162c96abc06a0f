"""Python access to the acr engine.

Exact values come back as "p/2^q" strings; use `to_fraction` for arithmetic.
"""

import json
from fractions import Fraction

from . import _acr
from ._acr import AcrError, CapacityError, DomainError, IntegrityError, ParameterError, ParseError

__all__ = [
    "AcrError", "CapacityError", "DomainError", "IntegrityError", "ParameterError", "ParseError",
    "average_cut_rank", "build_family", "census", "cut_rank", "enumerate_graphs", "graph6",
    "is_vertex_minor", "max_cut_rank", "obstructions", "orbit_classes", "run_suite", "suite_names",
    "to_fraction", "x_sequence",
]


def to_fraction(text):
    num, _, den = text.partition("/")
    if not den:
        return Fraction(int(num))
    if den.startswith("2^"):
        return Fraction(int(num), 2 ** int(den[2:]))
    return Fraction(int(num), int(den))


def graph6(named=None, edges=None):
    if (named is None) == (edges is None):
        raise ValueError("give exactly one of named, edges")
    return _acr.graph6_of_named(named) if named is not None else _acr.graph6_of_edges(edges)


def average_cut_rank(g6, workers=1):
    return _acr.average_cut_rank(g6, workers)


def max_cut_rank(g6):
    return _acr.max_cut_rank(g6)


def cut_rank(g6, mask):
    return _acr.cut_rank(g6, mask)


def x_sequence(eps, n):
    return int(_acr.x_sequence(eps, n))


def enumerate_graphs(n):
    return _acr.enumerate_graphs(n)


def orbit_classes(g6, cap=200000):
    codes, truncated = _acr.orbit_classes(g6, cap)
    return list(codes), truncated


def is_vertex_minor(minor, host):
    return json.loads(_acr.is_vertex_minor(minor, host))


def obstructions(alpha, mode="le", n_max=8, workers=1):
    return json.loads(_acr.obstructions(alpha, mode, n_max, workers))


def census(n_max, cap="3/2", workers=1):
    return json.loads(_acr.census(n_max, cap, workers))


def build_family(eps, n):
    return json.loads(_acr.build_family(eps, n))


def run_suite(name, max_n=None, samples=None, seed=1, workers=1):
    return json.loads(_acr.run_suite(name, max_n, samples, seed, workers))


def suite_names():
    return list(_acr.suite_names())
