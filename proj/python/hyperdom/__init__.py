"""Exact domination invariants, reductions and checks for small hypergraphs."""

import json

from ._core import (
    Hypergraph,
    HyperdomError,
    brute_force,
    canonical_code,
    construction_names,
    domination_number,
    find_isomorphism,
    generate,
    is_isomorphic,
    load,
    matching_number,
    parse,
    quasidegree,
    random_hypergraph,
    transversal_number,
    write,
)
from . import _core

__all__ = [
    "Hypergraph",
    "HyperdomError",
    "brute_force",
    "canonical_code",
    "construction_names",
    "domination_number",
    "find_isomorphism",
    "generate",
    "is_isomorphic",
    "lemma_report",
    "load",
    "matching_number",
    "parse",
    "quasidegree",
    "random_hypergraph",
    "reduce",
    "transversal_number",
    "verify_all",
    "verify_bound",
    "write",
]


def reduce(h):
    """Peel and shrink; returns the trace as a dict."""
    return json.loads(_core.reduce_json(h))


def lemma_report(h, r=4):
    return json.loads(_core.lemma_report_json(h, r))


def verify_bound(r, trials=500, seed=42):
    return json.loads(_core.verify_bound_json(r, trials, seed))


def verify_all(seed=42, trials=500):
    return json.loads(_core.verify_all_json(seed, trials))
