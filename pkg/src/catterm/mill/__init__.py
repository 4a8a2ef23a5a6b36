"""Multiplicative intuitionistic linear logic: proof trees, checking, compilation."""

from .proof import (HOLE, MACROS, RULES, CheckReport, InvalidProof, ProofTree, Sequent,
                    Violation, arity, check_proof, default_signature, expand_all,
                    expand_macro, proof_to_mor, show_path, subst_proof)
from .syntax import parse_proof, parse_proof_file, parse_sequent, show_proof

__all__ = [
    "HOLE", "MACROS", "RULES", "CheckReport", "InvalidProof", "ProofTree", "Sequent",
    "Violation", "arity", "check_proof", "default_signature", "expand_all", "expand_macro",
    "proof_to_mor", "show_path", "subst_proof", "parse_proof", "parse_proof_file",
    "parse_sequent", "show_proof",
]
