"""Structure-constant model of a finite-dimensional Lie superalgebra.

A :class:`SuperAlgebra` holds an ordered, parity-tagged basis and a table
``(i, j) -> {k: c}`` giving ``[b_i, b_j] = sum c b_k``.  Both orders of every
pair are stored; graded antisymmetry is checked, never assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .linalg import Matrix, Subspace
from .scalars import format_scalar, parse_scalar

EVEN, ODD = 0, 1


@dataclass(frozen=True)
class BasisLabel:
    name: str
    parity: int


@dataclass
class AxiomReport:
    """Violations found by :meth:`SuperAlgebra.verify_axioms`; empty means pass."""

    algebra: str
    parity: list = field(default_factory=list)
    antisymmetry: list = field(default_factory=list)
    jacobi: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.parity or self.antisymmetry or self.jacobi)

    def summary(self) -> str:
        if self.ok:
            return f"{self.algebra}: axioms OK"
        return (f"{self.algebra}: {len(self.parity)} parity, "
                f"{len(self.antisymmetry)} antisymmetry, {len(self.jacobi)} Jacobi violations")


class SuperAlgebra:
    """Immutable Lie superalgebra given by structure constants.

    ``aliases`` maps extra display names to coordinate vectors, so that
    e.g. ``R[e2,e1]`` or a monomial spinor name can be parsed.
    """

    def __init__(self, name: str, labels: Sequence[BasisLabel], table: Mapping,
                 aliases: Mapping[str, tuple] | None = None, meta: dict | None = None):
        self.name = name
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self.index = {b.name: i for i, b in enumerate(self.labels)}
        if len(self.index) != self.n:
            raise ValueError("duplicate basis names")
        self.parities = tuple(b.parity for b in self.labels)
        self.table = {k: dict(v) for k, v in table.items() if any(v.values())}
        for v in self.table.values():
            for k in [k for k, c in v.items() if not c]:
                del v[k]
        self.aliases = dict(aliases or {})
        self.meta = dict(meta or {})
        self._ad_cache: dict = {}

    # basics -----------------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.n

    def names(self) -> tuple:
        return tuple(b.name for b in self.labels)

    def even_indices(self) -> list:
        return [i for i, p in enumerate(self.parities) if p == EVEN]

    def odd_indices(self) -> list:
        return [i for i, p in enumerate(self.parities) if p == ODD]

    def basis_vector(self, i: int | str) -> tuple:
        if isinstance(i, str):
            i = self.index[i]
        return la.unit(self.n, i)

    def zero(self) -> tuple:
        return la.zeros(self.n)

    def element(self, spec) -> "Element":
        return Element(self, self.vector(spec))

    def vector(self, spec) -> tuple:
        """Coordinates from a name, a linear-combination string, an
        :class:`Element` or a coordinate sequence."""
        if isinstance(spec, Element):
            if spec.algebra is not self:
                raise ValueError("element belongs to a different algebra")
            return spec.coords
        if isinstance(spec, str):
            return parse_combination(self, spec)
        v = tuple(spec)
        if len(v) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(v)}")
        return v

    def parity_of(self, v) -> int | None:
        """Parity of a homogeneous vector; ``None`` for mixed, ``EVEN`` for 0."""
        ps = {self.parities[i] for i, c in enumerate(v) if c}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else EVEN

    # bracket ----------------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def bracket(self, x, y) -> tuple:
        if isinstance(x, Element) and isinstance(y, Element) and x.algebra is not y.algebra:
            raise ValueError("bracket of elements from different algebras")
        x, y = self.vector(x), self.vector(y)
        out = [Q(0)] * self.n
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            for j, b in ys:
                t = self.table.get((i, j))
                if t:
                    ab = a * b
                    for k, c in t.items():
                        out[k] = out[k] + ab * c
        return tuple(out)

    def ad_matrix(self, x) -> Matrix:
        """Matrix of ``ad x``: column ``j`` holds the coordinates of ``[x, b_j]``."""
        x = self.vector(x)
        key = x
        if key in self._ad_cache:
            return self._ad_cache[key]
        cols = [[Q(0)] * self.n for _ in range(self.n)]
        for i, a in enumerate(x):
            if not a:
                continue
            for j in range(self.n):
                t = self.table.get((i, j))
                if t:
                    col = cols[j]
                    for k, c in t.items():
                        col[k] = col[k] + a * c
        m = Matrix.from_columns(cols, self.n)
        if len(self._ad_cache) < 256:
            self._ad_cache[key] = m
        return m

    def eigenspace(self, x, lam) -> Subspace:
        """``{y : [x, y] = lam y}``."""
        return eigenspace(self.ad_matrix(x), lam)

    # verification -----------------------------------------------------------
    def verify_axioms(self, jacobi: bool = True) -> AxiomReport:
        rep = AxiomReport(self.name)
        n, par = self.n, self.parities
        for (i, j), t in self.table.items():
            want = (par[i] + par[j]) % 2
            if any(par[k] != want for k in t):
                rep.parity.append((i, j))
        for i in range(n):
            for j in range(i, n):
                sgn = -1 if par[i] * par[j] else 1
                a = self.table.get((i, j), {})
                b = self.table.get((j, i), {})
                keys = set(a) | set(b)
                if any(a.get(k, 0) + sgn * b.get(k, 0) for k in keys):
                    rep.antisymmetry.append((i, j))
        if jacobi:
            rep.jacobi = self._jacobi_violations()
        return rep

    def _jacobi_violations(self) -> list:
        n, par, tab = self.n, self.parities, self.table

        def br(i, vec):
            out = {}
            for j, c in vec.items():
                t = tab.get((i, j))
                if t:
                    for k, d in t.items():
                        out[k] = out.get(k, 0) + c * d
            return out

        def br_left(vec, k):
            out = {}
            for j, c in vec.items():
                t = tab.get((j, k))
                if t:
                    for m, d in t.items():
                        out[m] = out.get(m, 0) + c * d
            return out

        bad = []
        for i in range(n):
            for j in range(n):
                ij = tab.get((i, j), {})
                sgn = -1 if par[i] * par[j] else 1
                for k in range(n):
                    lhs = br(i, tab.get((j, k), {}))
                    r1 = br_left(ij, k)
                    r2 = br(j, tab.get((i, k), {}))
                    keys = set(lhs) | set(r1) | set(r2)
                    if any(lhs.get(m, 0) - r1.get(m, 0) - sgn * r2.get(m, 0) for m in keys):
                        bad.append((i, j, k))
        return bad

    # subspaces --------------------------------------------------------------
    def span(self, vectors: Iterable) -> Subspace:
        return Subspace.span(self.n, [self.vector(v) for v in vectors])

    def whole(self) -> Subspace:
        return Subspace.whole(self.n)

    def is_closed(self, s: Subspace) -> bool:
        return all(s.contains(self.bracket(a, b)) for a in s.basis for b in s.basis)

    def subalgebra_closure(self, generators: Iterable) -> Subspace:
        s = self.span(generators)
        for _ in range(self.n + 1):
            new = [self.bracket(a, b) for a in s.basis for b in s.basis]
            t = s.sum(Subspace.span(self.n, new))
            if t == s:
                return s
            s = t
        raise RuntimeError("closure did not stabilize")

    def even_part(self, s: Subspace) -> Subspace:
        return s.intersect(Subspace.span(self.n, [la.unit(self.n, i) for i in self.even_indices()]))

    def odd_part(self, s: Subspace) -> Subspace:
        return s.intersect(Subspace.span(self.n, [la.unit(self.n, i) for i in self.odd_indices()]))

    # rendering --------------------------------------------------------------
    def format(self, v) -> str:
        return format_combination(self, self.vector(v))

    def to_json(self) -> str:
        doc = {
            "algebra": self.name,
            "basis": [{"name": b.name, "parity": "odd" if b.parity else "even"} for b in self.labels],
            "brackets": [
                {"i": self.labels[i].name, "j": self.labels[j].name,
                 "value": {self.labels[k].name: format_scalar(c) for k, c in sorted(t.items())}}
                for (i, j), t in sorted(self.table.items())
            ],
        }
        return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False)

    def __repr__(self):
        ne = len(self.even_indices())
        return f"SuperAlgebra({self.name!r}, dim={self.n} = {ne}|{self.n - ne})"


def eigenspace(m: Matrix, lam) -> Subspace:
    if m.rows != m.cols:
        raise ValueError("eigenspace of a non-square matrix")
    shifted = m - Matrix.identity(m.rows).scaled(lam)
    return la.kernel(shifted)


@dataclass(frozen=True)
class Element:
    """An element of a :class:`SuperAlgebra`, not necessarily homogeneous."""

    algebra: SuperAlgebra
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.algebra.n:
            raise ValueError("coordinate length does not match the algebra")

    def __add__(self, other):
        return Element(self.algebra, la.add(self.coords, self.algebra.vector(other)))

    def __sub__(self, other):
        return Element(self.algebra, la.sub(self.coords, self.algebra.vector(other)))

    def __neg__(self):
        return Element(self.algebra, la.scale(-1, self.coords))

    def __rmul__(self, c):
        return Element(self.algebra, la.scale(c, self.coords))

    def bracket(self, other) -> "Element":
        return Element(self.algebra, self.algebra.bracket(self.coords, other))

    def is_zero(self) -> bool:
        return la.is_zero_vec(self.coords)

    def parity(self):
        return self.algebra.parity_of(self.coords)

    def __str__(self):
        return format_combination(self.algebra, self.coords)


# linear-combination grammar ---------------------------------------------------
#
#   combo := ["-"] term { (" + " | " - ") term }
#   term  := [coef "*"] name
#   coef  := any scalar expression accepted by parse_scalar, e.g. 1/2 or (1+a)
#   name  := a basis name or alias of the algebra
#
# Terms are separated by a plus or minus sign with whitespace on both sides,
# since names themselves may contain "-" (v(1,-1,1), R[e1,e-2], v-1.e3).

def _split_terms(text: str) -> list:
    """Split at whitespace-padded + / - outside parentheses."""
    terms, depth, start, i = [], 0, 0, 0
    sign = 1
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif (ch in "+-" and depth == 0 and i > 0 and text[i - 1] == " "
              and i + 1 < len(text) and text[i + 1] == " "):
            terms.append((sign, text[start:i].strip()))
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    terms.append((sign, text[start:].strip()))
    return terms


def _resolve(alg: SuperAlgebra, name: str) -> tuple:
    if name in alg.index:
        return la.unit(alg.n, alg.index[name])
    if name in alg.aliases:
        return alg.aliases[name]
    raise KeyError(f"unknown basis element {name!r} in {alg.name}")


def parse_terms(text: str) -> list:
    """``[(coef, name), ...]`` for a linear-combination string."""
    text = text.strip()
    if text in ("0", ""):
        return []
    sign = 1
    if text.startswith("-"):  # no basis name starts with a minus sign
        sign, text = -1, text[1:].strip()
    terms = _split_terms(text)
    terms[0] = (sign, terms[0][1])
    out = []
    for s, term in terms:
        if "*" in term:
            coef_txt, name = term.rsplit("*", 1)
            coef = parse_scalar(coef_txt)
        else:
            coef, name = Q(1), term
        out.append((s * coef, name.strip()))
    return out


def parse_combination(alg: SuperAlgebra, text: str) -> tuple:
    out = alg.zero()
    for coef, name in parse_terms(text):
        out = la.add(out, la.scale(coef, _resolve(alg, name)))
    return out


def parse_in_basis(names: Sequence[str], text: str) -> tuple:
    """Coordinates of a combination over an explicit list of names."""
    idx = {n: i for i, n in enumerate(names)}
    out = [Q(0)] * len(names)
    for coef, name in parse_terms(text):
        if name not in idx:
            raise KeyError(f"unknown name {name!r}")
        out[idx[name]] += coef
    return tuple(out)


def format_combination(alg: SuperAlgebra, v) -> str:
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        name = alg.labels[i].name
        if isinstance(c, Q):
            neg, txt = c < 0, format_scalar(abs(c))
            body = name if txt == "1" else f"{txt}*{name}"
        else:
            neg, body = False, f"({format_scalar(c)})*{name}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


def make_table(n: int, bracket_fn) -> dict:
    """Tabulate ``bracket_fn(i, j) -> vector`` over all ordered basis pairs."""
    table = {}
    for i in range(n):
        for j in range(n):
            v = bracket_fn(i, j)
            t = {k: c for k, c in enumerate(v) if c}
            if t:
                table[(i, j)] = t
    return table
