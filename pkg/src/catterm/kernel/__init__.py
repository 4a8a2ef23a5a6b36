"""Type expressions, signatures, morphism terms, parsing and typing."""

from .infer import infer_dom_cod
from .modes import Mode, mode_allows, mode_leq
from .signature import GenDecl, Signature, Violation, open_signature, validate_signature
from .syntax import parse_mor, parse_signature, parse_type, show_mor, show_signature
from .terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup, Ev, Gen,
                    Id, LeftU, MorTerm, Name, Pair, Par, Proj1, Proj2, RightU,
                    Seq, Unassoc, Uncurry, UnleftU, UnrightU, seq_all)
from .types import (UNIT, BasicType, Dual, Hom, Tensor, TypeExpr, Unit, dual,
                    flatten, show_type, tensor_all)

__all__ = [
    "Mode", "mode_allows", "mode_leq", "GenDecl", "Signature", "Violation",
    "open_signature", "validate_signature", "infer_dom_cod", "parse_mor",
    "parse_signature", "parse_type", "show_mor", "show_signature", "show_type",
    "TypeExpr", "BasicType", "Unit", "UNIT", "Tensor", "Hom", "Dual", "dual",
    "flatten", "tensor_all", "MorTerm", "Gen", "Id", "Seq", "Par", "Assoc",
    "Unassoc", "LeftU", "UnleftU", "RightU", "UnrightU", "Braid", "BraidInv",
    "Curry", "Uncurry", "Ev", "Cup", "Cap", "Dup", "Del", "Pair", "Proj1",
    "Proj2", "Name", "seq_all",
]
