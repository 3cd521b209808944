"""Super commuting graphs of finite groups and their spectra."""

import json

from ._supergraph import (
    Graph,
    Group,
    Partition,
    SupergraphError,
    center,
    charpoly,
    commuting_graph,
    compressed_graph,
    conjugacy_partition,
    cyclic,
    dihedral,
    eigenvalues,
    element_orders,
    group,
    order_partition,
    quaternion,
    quotient_charpoly,
    refines,
    semidirect,
    super_commuting_graph,
    super_graph,
)
from . import _supergraph

__all__ = [
    "Graph",
    "Group",
    "Partition",
    "SupergraphError",
    "center",
    "charpoly",
    "closed_form",
    "commuting_graph",
    "compressed_graph",
    "conjugacy_partition",
    "cyclic",
    "dihedral",
    "eigenvalues",
    "element_orders",
    "group",
    "order_partition",
    "quaternion",
    "quotient_charpoly",
    "refines",
    "run_suite",
    "semidirect",
    "super_commuting_graph",
    "super_graph",
    "verify",
    "verify_generic",
]


def closed_form(claim, **params):
    """Displayed spectrum of a claim as a list of (value, multiplicity)."""
    spectrum = json.loads(_supergraph._closed_form(claim, json.dumps(params)))
    return [(e["value"], e["multiplicity"]) for e in spectrum["eigenvalues"]]


def verify(claim, **params):
    """Report for one spectral or structure claim, as a dict."""
    return json.loads(_supergraph._verify(claim, json.dumps(params)))


def verify_generic(claim, seed=42, trials=200):
    return json.loads(_supergraph._verify_generic(claim, seed, trials))


def run_suite(suite="all", jobs=1):
    return json.loads(_supergraph._run_suite(suite, jobs))
