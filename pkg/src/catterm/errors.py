"""Exception types shared across the package."""

from __future__ import annotations


class CatTermError(Exception):
    """Base class for every error raised by catterm."""


class ParseError(CatTermError):
    def __init__(self, message: str, pos: int | None = None, src: str | None = None):
        self.pos = pos
        self.src = src
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UnknownName(CatTermError):
    pass


class ModeError(CatTermError):
    """A constructor was used in a mode that does not admit it."""


class TypeMismatch(CatTermError):
    def __init__(self, message: str, left=None, right=None):
        self.left = left
        self.right = right
        super().__init__(message)


class ModelError(CatTermError):
    pass


class ShapeMismatch(ModelError):
    pass


class FuelExhausted(CatTermError):
    def __init__(self, message: str = "fuel exhausted", last=None):
        self.last = last
        super().__init__(message)
