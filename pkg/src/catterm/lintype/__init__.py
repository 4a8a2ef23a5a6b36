"""Linear type theories: combinators, variable-linear terms, cp/vp, and the kernel bridge."""

from .core import (BASIC_TAGS, Apply, BasicC, Comp, Combinator, CurryC, FnSym, LinTerm,
                   LinTheory, LinType, LinearityError, One, TensorC, TensorTm, Var, annotate,
                   canonical_basic_term, comb_type, cpvp, is_basic, lin_typecheck,
                   rename_canonical, resolve, variables)
from .syntax import parse_combinator, parse_lin_term, parse_lin_theory, show_comb, show_lin
from .theory import (IDENTIFICATIONS, INDUCED_EQUATIONS, STRUCTURAL, KernelView,
                     kernel_to_theory, lin_equiv_combinators, lin_equiv_terms, lin_normalize,
                     rewrite_steps, theory_signature, theory_to_kernel, to_mor)

__all__ = [
    "BASIC_TAGS", "Apply", "BasicC", "Comp", "Combinator", "CurryC", "FnSym", "LinTerm",
    "LinTheory", "LinType", "LinearityError", "One", "TensorC", "TensorTm", "Var", "annotate",
    "canonical_basic_term", "comb_type", "cpvp", "is_basic", "lin_typecheck",
    "rename_canonical", "resolve", "variables", "parse_combinator", "parse_lin_term",
    "parse_lin_theory", "show_comb", "show_lin", "IDENTIFICATIONS", "INDUCED_EQUATIONS",
    "STRUCTURAL", "KernelView", "kernel_to_theory", "lin_equiv_combinators",
    "lin_equiv_terms", "lin_normalize", "rewrite_steps", "theory_signature",
    "theory_to_kernel", "to_mor",
]
