"""Exact verification of modular invariant ring examples over prime fields."""

import json

from ._core import (
    REPORT_SCHEMA_VERSION,
    PaperlabError,
    compute_json,
    default_degree_bound,
    invariant_generators,
    verify_json,
    verify_text,
)

__all__ = [
    "REPORT_SCHEMA_VERSION",
    "PaperlabError",
    "compute",
    "default_degree_bound",
    "groebner_basis",
    "invariant_generators",
    "verify",
    "verify_text",
]


def verify(p, d=3, max_degree=None, stretch=False, timings=True):
    """Run the verification pipeline and return the JSON report as a dict."""
    return json.loads(verify_json(p, d, max_degree, stretch, timings))


def compute(operation, p, variables, polynomials, weights=None, order="grevlex"):
    """Run "groebner", "depth" or "presentation" on a polynomial ring over F_p."""
    doc = {"p": p, "variables": list(variables), "polynomials": list(polynomials), "order": order}
    if weights is not None:
        doc["weights"] = list(weights)
    return json.loads(compute_json(operation, json.dumps(doc)))


def groebner_basis(p, variables, polynomials, order="grevlex"):
    return compute("groebner", p, variables, polynomials, order=order)["result"]["basis"]
