"""Lambda calculi: untyped with Church numerals, SKI, typed with products, and the Lambek category."""

from .lambek import (LambekCategory, LMor, kernel_equiv, kernel_to_typed, lambda_to_ccc,
                     theory_signature, typed_to_kernel)
from .ski import (SApp, SVar, Comb, I, K, S, SkiTerm, parse_ski, show_ski, ski_eliminate,
                  ski_eval, ski_to_lambda)
from .syntax import LambdaFile, parse_lambda_file, parse_typed, parse_untyped
from .typed import (EQUAL, NOT_EQUAL, UNKNOWN, P1, P2, Basic, FreeVariableEscape,
                    LambdaTheory, PairT, TApp, TLam, TVar, TypedTerm, UnitT, equiv_typed,
                    normalize_typed, show_typed, substitute_typed, typecheck)
from .untyped import (TIMES, App, Lam, NotANumeral, Term, Var, alpha_eq, church,
                      church_decode, church_encode, normalize_untyped, show, substitute, times)
