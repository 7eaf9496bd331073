"""Entanglement of two atoms from post-selected photon coincidences."""

import json

from ._ebitsim import (
    EbitsimError,
    coincidence_project,
    coincidence_project_bruteforce,
    entanglement_vs_width_sweep,
    gaussian_schmidt_oracle,
    max_entangle_local_filter,
    permanent,
    permanent_bruteforce,
    schmidt,
    single_detection_state,
    symmetric_collector_unitary,
)
from . import _ebitsim

__all__ = [
    "EbitsimError",
    "coincidence_project",
    "coincidence_project_bruteforce",
    "compose",
    "entanglement_vs_width_sweep",
    "gaussian_schmidt_oracle",
    "max_entangle_local_filter",
    "permanent",
    "permanent_bruteforce",
    "reck_decompose",
    "run_protocol",
    "schmidt",
    "single_detection_state",
    "symmetric_collector_unitary",
]


def reck_decompose(u):
    """Netlist (list of element dicts) whose composition reproduces ``u``."""
    return json.loads(_ebitsim.reck_decompose_json(u))


def compose(elements, ports):
    """Transfer matrix of a netlist; the first element acts first."""
    return _ebitsim.compose_json(json.dumps(list(elements)), ports)


def run_protocol(protocol):
    """Run a protocol given as a dict, e.g. ``{"kind": "symmetric_n", "n": 3}``."""
    return json.loads(_ebitsim.run_protocol_json(json.dumps(protocol)))
