"""Normal forms and equality for morphism terms."""

from .axioms import (AXIOMS, Axiom, canonical_iso, coherence_axioms, invert,
                     parenthesizations)
from .betaeta import Normalized, beta_eta_normalize
from .decide import EqVerdict, Strategy, Witness, eq_decide
from .graph import NotDecidable, PortGraph, canonical, graph_of
from .normal import normal_form_key, symmetric_normal_form
from .strict import Block, PermLayer, StrictTerm, desugar, strict_to_term, strictify

__all__ = [
    "AXIOMS", "Axiom", "canonical_iso", "coherence_axioms", "invert", "parenthesizations",
    "Normalized", "beta_eta_normalize", "EqVerdict", "Strategy", "Witness", "eq_decide",
    "NotDecidable", "PortGraph", "canonical", "graph_of", "normal_form_key",
    "symmetric_normal_form", "Block", "PermLayer", "StrictTerm", "desugar",
    "strict_to_term", "strictify",
]
