"""Sparse exact matrices.

Basis order is row-major: for ``C^m (x) C^n`` the basis vector
``e_i (x) e_j`` has index ``i * n + j``.
"""

from __future__ import annotations

from collections import defaultdict

from .numbers import ONE, QQi


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.data = {k: v for k, v in (data or {}).items() if v}

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def from_map(cls, rows: int, cols: int, fn) -> "Matrix":
        """0/1 matrix sending basis column ``c`` to basis row ``fn(c)``."""
        return cls(rows, cols, {(fn(c), c): ONE for c in range(cols)})

    @classmethod
    def from_rows(cls, rows: list[list]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = v if isinstance(v, QQi) else QQi(v)
                if v:
                    data[(i, j)] = v
        return cls(r, c, data)

    def to_rows(self) -> list[list[QQi]]:
        out = [[QQi(0) for _ in range(self.cols)] for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row = defaultdict(list)
        for (k, c), v in other.data.items():
            by_row[k].append((c, v))
        acc: dict = {}
        for (r, k), a in self.data.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                p = a * b
                acc[key] = acc[key] + p if key in acc else p
        return Matrix(self.rows, other.cols, acc)

    def kron(self, other: "Matrix") -> "Matrix":
        data = {}
        for (r1, c1), a in self.data.items():
            for (r2, c2), b in other.data.items():
                data[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * b
        return Matrix(self.rows * other.rows, self.cols * other.cols, data)

    def dagger(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(c, r): v.conjugate() for (r, c), v in self.data.items()})

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.data.items()})

    def column(self, c: int) -> dict:
        return {r: v for (r, cc), v in self.data.items() if cc == c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.data.items())))

    def first_difference(self, other: "Matrix") -> int | None:
        """Index of the first basis input (column) on which the two differ."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            return 0
        cols = {c for (_, c), v in self.data.items() if other.data.get((_, c)) != v}
        cols |= {c for (_, c), v in other.data.items() if self.data.get((_, c)) != v}
        return min(cols) if cols else None

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.to_rows()})"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[v.to_json() for v in row] for row in self.to_rows()]}


# -- the model ---------------------------------------------------------------

from .base import Model  # noqa: E402
from ..kernel.modes import Mode  # noqa: E402


class MatrixModel(Model):
    """Finite-dimensional complex vector spaces with exact entries.

    A morphism ``X -> Y`` is a ``dim Y x dim X`` matrix.  ``X -o Y`` and
    ``X^ * Y`` share the carrier ``C^(dim X * dim Y)`` with the ``X`` index
    most significant.
    """

    kind = "matrix"
    max_mode = Mode.COMPACT_SYMMETRIC

    def hom_size(self, a, b):
        return a * b

    def dual_size(self, a):
        return a

    def identity(self, n):
        return Matrix.identity(n)

    def compose(self, f, g):
        return g @ f

    def tensor(self, f, g):
        return f.kron(g)

    def swap(self, a, b):
        # e_i (x) e_j  |->  e_j (x) e_i
        return Matrix.from_map(a * b, a * b, lambda c: (c % b) * a + c // b)

    def curry(self, f, x, y, z):
        data = {}
        for (zi, xy), v in f.data.items():
            xi, yi = divmod(xy, y)
            data[(xi * z + zi, yi)] = v
        return Matrix(x * z, y, data)

    def uncurry(self, g, x, y, z):
        data = {}
        for (xz, yi), v in g.data.items():
            xi, zi = divmod(xz, z)
            data[(zi, xi * y + yi)] = v
        return Matrix(z, x * y, data)

    def ev(self, x, y):
        data = {}
        for xi in range(x):
            for yi in range(y):
                data[(yi, xi * (x * y) + xi * y + yi)] = ONE
        return Matrix(y, x * x * y, data)

    def name_of(self, f, x, y):
        return Matrix(x * y, 1, {(xi * y + yi, 0): v for (yi, xi), v in f.data.items()})

    def cup_matrix(self, n):
        return Matrix(n * n, 1, {(i * n + i, 0): ONE for i in range(n)})

    def cup(self, n):
        return self.cup_matrix(n)

    def cap(self, n):
        return self.cup_matrix(n).transpose()

    def dagger(self, c):
        return c.dagger()

    def shape(self, dom, cod):
        return (cod, dom)

    def binding_shape(self, c):
        return (c.rows, c.cols)

    def describe_shape(self, shp):
        return f"{shp[0]}x{shp[1]}"
