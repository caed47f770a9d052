"""Dense exact linear algebra over :mod:`superz.scalars`.

Vectors are tuples of scalars, matrices are :class:`Matrix` objects (row
major).  Every subspace is stored in reduced row-echelon form, so two
:class:`Subspace` objects are equal exactly when they span the same space.
Pivoting takes the first nonzero entry in a column, which keeps RREF output
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .scalars import div

ZERO = Q(0)
ONE = Q(1)


def zeros(n: int) -> tuple:
    return (ZERO,) * n


def unit(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> tuple:
    return tuple(c * a for a in v)


def dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def is_zero_vec(v) -> bool:
    return not any(v)


def lincomb(coeffs, vectors, n: int) -> tuple:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                out[i] = out[i] + c * a
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([unit(n, i) for i in range(n)], n)

    @classmethod
    def zero(cls, r: int, c: int) -> "Matrix":
        return cls(r, c, (ZERO,) * (r * c))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, v) -> tuple:
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix.from_rows([[dot(self.row(i), c) for c in cols] for i in range(self.rows)],
                                other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, add(self.entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, sub(self.entries, other.entries))

    def scaled(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, scale(c, self.entries))

    def is_zero(self) -> bool:
        return is_zero_vec(self.entries)

    def map(self, f) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(f(x) for x in self.entries))


def _rref_rows(rows: list, ncols: int) -> tuple[list, list]:
    """Row-reduce a list of row lists in place order; returns (rows, pivots)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        if lead != 1:
            m[r] = [div(x, lead) if x else ZERO for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [x - f * y if y else x for x, y in zip(row, pr)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    rows, _ = _rref_rows(m.row_list(), m.cols)
    rows += [zeros(m.cols)] * (m.rows - len(rows))
    return Matrix.from_rows(rows, m.cols)


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.row_list(), m.cols)[1])


def _kernel_vectors(rows: list, ncols: int) -> list:
    red, pivots = _rref_rows(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for fcol in free:
        v = [ZERO] * ncols
        v[fcol] = ONE
        for row, pc in zip(red, pivots):
            if row[fcol]:
                v[pc] = -row[fcol]
        out.append(tuple(v))
    return out


def kernel(m: Matrix) -> "Subspace":
    """Null space ``{v : m v = 0}``."""
    return Subspace.span(m.cols, _kernel_vectors(m.row_list(), m.cols))


def solve(m: Matrix, b) -> tuple | None:
    """One solution of ``m x = b`` (free variables set to 0), or ``None``."""
    aug = [tuple(m.row(i)) + (b[i],) for i in range(m.rows)]
    red, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return tuple(x)


class Subspace:
    """A subspace of ``Q^n`` (or ``Q(a)^n``) held as an RREF basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: tuple, pivots: tuple):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, ambient: int, vectors: Iterable) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        red, piv = _rref_rows(vecs, ambient)
        return cls(ambient, tuple(red), tuple(piv))

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit(n, i) for i in range(n)), tuple(range(n)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, (), ())

    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim()}, ambient={self.ambient})"

    def coordinates(self, v) -> tuple | None:
        """Coefficients of ``v`` in this basis, or ``None`` if ``v`` is outside."""
        if len(v) != self.ambient:
            raise ValueError("length mismatch")
        coeffs = tuple(v[p] for p in self.pivots)
        if tuple(v) != lincomb(coeffs, self.basis, self.ambient):
            return None
        return coeffs

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.ambient, self.basis + other.basis)

    __add__ = sum

    def annihilator(self) -> list:
        """Vectors ``w`` with ``w . v = 0`` for all ``v`` here."""
        return _kernel_vectors(list(self.basis), self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient)
        eqs = other.annihilator()
        if not eqs:
            return self
        rows = [[dot(w, a) for a in self.basis] for w in eqs]
        sols = _kernel_vectors(rows, len(self.basis))
        return Subspace.span(self.ambient, [lincomb(c, self.basis, self.ambient) for c in sols])

    __and__ = intersect

    def complement_in(self, other: "Subspace") -> list:
        """Vectors of ``other``'s basis extending this basis to a basis of
        ``self + other`` (a greedy, deterministic choice)."""
        acc = self
        out = []
        for v in other.basis:
            if not acc.contains(v):
                out.append(v)
                acc = acc.sum(Subspace.span(self.ambient, [v]))
        return out


def restrict(m: Matrix, s: Subspace) -> Matrix:
    """Matrix of ``m`` on the invariant subspace ``s`` in its RREF basis."""
    cols = []
    for v in s.basis:
        c = s.coordinates(m.apply(v))
        if c is None:
            raise ValueError("subspace is not invariant under the operator")
        cols.append(c)
    return Matrix.from_columns(cols, s.dim()) if cols else Matrix.zero(0, 0)


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix; singular input raises ``ValueError``."""
    n = m.rows
    if m.cols != n:
        raise ValueError("inverse of a non-square matrix")
    aug = [m.row(i) + unit(n, i) for i in range(n)]
    red, piv = _rref_rows(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return Matrix.from_rows([r[n:] for r in red], n)


def expm_nilpotent(m: Matrix) -> Matrix:
    """``exp(m)`` for nilpotent ``m`` (the series is checked to terminate)."""
    n = m.rows
    out = term = Matrix.identity(n)
    for k in range(1, n + 1):
        term = (term @ m).scaled(Q(1, k))
        if term.is_zero():
            return out
        out = out + term
    if not (term @ m).is_zero():
        raise ValueError("matrix is not nilpotent")
    return out
