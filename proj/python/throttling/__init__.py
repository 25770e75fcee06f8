"""Exact throttling numbers for zero forcing, PSD forcing and power domination."""

import json

from ._throttling import (
    Graph,
    ParseError,
    __version__,
    are_isomorphic,
    domination_number,
    fixture,
    fixture_names,
    graphs,
    is_matched_sum,
    k_of_p,
    parameter,
    propagation_time,
    property_suite_names,
    throttle,
    throttle_set,
)
from . import _throttling


def certificate(graph, target="prodx"):
    """Power dominating set built from an optimal dominating set, as a dict."""
    return json.loads(_throttling._certificate_json(graph, target))


def paper_suite(filters=None, workers=1):
    """Runs the reference-value table; filters is a dict of tag values."""
    pairs = list((filters or {}).items())
    return json.loads(_throttling._paper_suite_json(pairs, workers))


def property_suite(name, nmax, samples=200, workers=1):
    return json.loads(_throttling._property_suite_json(name, nmax, samples, workers))


__all__ = [
    "Graph",
    "ParseError",
    "are_isomorphic",
    "certificate",
    "domination_number",
    "fixture",
    "fixture_names",
    "graphs",
    "is_matched_sum",
    "k_of_p",
    "paper_suite",
    "parameter",
    "propagation_time",
    "property_suite",
    "property_suite_names",
    "throttle",
    "throttle_set",
]
