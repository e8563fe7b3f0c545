"""Visual splittings of Artin groups.

Enumerate the visual splittings of an Artin group given by its labelled
presentation graph, decide for each whether it is acylindrical (odd-path
criterion on the side neighbourhoods, with PIP/RP certified through known
classes), and build recursive certificates for the strong Tits alternative.
"""
from .classes import classify, induced_embedding, pip_rp_certificate
from .corpus import load_corpus
from .coxeter import coxeter_matrix, is_spherical, recognize_finite_type, sphericity_partition
from .graph import (PresentationGraph, connected_components, diameter, induced_subgraph,
                    joined_by_odd_path, link, neighbourhood, odd_components, perp)
from .splittings import (criterion, enumerate_splittings, even_diameter_criterion,
                         pair_criterion, theorem_verdict, validate_splitting, witness_word)
from .io import load, parse
from .tits import certify, render_certificate

__version__ = "0.1.0"

__all__ = [
    "PresentationGraph", "certify", "classify", "connected_components", "coxeter_matrix",
    "criterion", "diameter", "enumerate_splittings", "even_diameter_criterion",
    "induced_embedding", "induced_subgraph", "is_spherical", "joined_by_odd_path", "link",
    "load", "load_corpus", "neighbourhood", "parse", "odd_components", "pair_criterion", "perp", "pip_rp_certificate",
    "recognize_finite_type", "render_certificate", "sphericity_partition", "theorem_verdict",
    "validate_splitting", "witness_word",
]
