"""Concrete strict models: exact matrices, finite sets and permutations."""

from .base import Model, Refuted, dagger, eval_mor, refute_eq
from .finset import FinSetModel, Table
from .io import dump_model, load_model, random_bindings, random_matrix, random_model
from .matrix import Matrix, MatrixModel
from .numbers import QQi, parse_rational
from .perm import Perm, PermModel

__all__ = [
    "Model", "Refuted", "dagger", "eval_mor", "refute_eq", "FinSetModel",
    "Table", "dump_model", "load_model", "random_bindings", "random_matrix",
    "random_model", "Matrix", "MatrixModel", "QQi", "parse_rational", "Perm",
    "PermModel",
]


def __getattr__(name):
    # laws import the rewrite package, which itself uses models
    if name == "check_model_laws":
        from .laws import check_model_laws
        return check_model_laws
    raise AttributeError(name)
