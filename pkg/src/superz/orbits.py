"""Bundled nilpotent orbit representatives and their expected values.

The catalog lives in ``data/orbits.json``; its layout is documented in
``data/ORBITS.md``.  Every case carries ``e`` and ``h`` as linear-combination
strings; ``f`` is solved for, and the three sl(2) relations are asserted when
the case is loaded.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import linalg as la
from .builders import get_algebra
from .centralizer import eigen_decomposition
from .linalg import Matrix
from .superalgebra import EVEN, SuperAlgebra


class CatalogError(ValueError):
    """A cataloged triple that does not satisfy the sl(2) relations."""


@dataclass(frozen=True)
class SL2Triple:
    e: tuple
    h: tuple
    f: tuple

    def __iter__(self):
        return iter((self.e, self.h, self.f))

    def check(self, g: SuperAlgebra) -> list:
        """Relations that fail, as short strings (empty list = fine)."""
        bad = []
        if g.bracket(self.h, self.e) != la.scale(2, self.e):
            bad.append("[h,e] != 2e")
        if g.bracket(self.h, self.f) != la.scale(-2, self.f):
            bad.append("[h,f] != -2f")
        if g.bracket(self.e, self.f) != self.h:
            bad.append("[e,f] != h")
        for name, v in (("e", self.e), ("h", self.h), ("f", self.f)):
            if g.parity_of(v) != EVEN:
                bad.append(f"{name} is not even")
        return bad


def derive_f(g: SuperAlgebra, e, h) -> tuple:
    """An f with ``[h,f] = -2f`` and ``[e,f] = h``, searched in the -2
    eigenspace of ad h.  Raises :class:`CatalogError` if there is none."""
    e, h = g.vector(e), g.vector(h)
    if g.bracket(h, e) != la.scale(2, e):
        raise CatalogError("[h,e] != 2e")
    if not any(e) and not any(h):
        return g.zero()
    space = g.eigenspace(h, -2)
    cols = [g.bracket(e, b) for b in space.basis]
    if not cols:
        raise CatalogError("ad h has no -2 eigenspace")
    x = la.solve(Matrix.from_columns(cols, g.n), h)
    if x is None:
        raise CatalogError("no f with [e,f] = h in the -2 eigenspace of ad h")
    return la.lincomb(x, space.basis, g.n)


def _norm_name(s: str) -> str:
    return re.sub(r"[\s()]", "", s).lower()


@dataclass
class OrbitCase:
    """One cataloged orbit: the triple plus the raw expected record."""

    algebra_id: str
    name: str
    e_text: str
    h_text: str
    record: dict = field(repr=False)
    triple: SL2Triple | None = field(default=None, repr=False)
    alpha: object = None

    @property
    def algebra(self) -> SuperAlgebra:
        return get_algebra(self.algebra_id, self.alpha)

    @property
    def e(self) -> tuple:
        return self.triple.e

    @property
    def h(self) -> tuple:
        return self.triple.h

    @property
    def components(self) -> list:
        return list(self.record.get("components", []))

    @property
    def eps(self) -> int:
        return int(self.record.get("eps", 0))

    def table(self, key, default=None):
        """The value as tabulated (before any derived override)."""
        return self.record.get(key, default)

    def expected(self, key, default=None):
        """The frozen reference value: a derived override when the case
        records a conflict for ``key``, the tabulated value otherwise."""
        over = self.record.get("derived", {})
        if key in over:
            return over[key]
        return self.record.get(key, default)

    def conflicts(self) -> list:
        return list(self.record.get("conflicts", []))

    def vectors(self, names) -> list:
        """Coordinate vectors for a list of combination strings, where the
        token ``e`` stands for the case's nilpotent element."""
        g = self.algebra
        return [self.e if s == "e" else g.vector(s) for s in names]

    def span(self, names) -> la.Subspace:
        return la.Subspace.span(self.algebra.n, self.vectors(names))

    def labels(self, source: str = "expected") -> dict:
        lab = self.expected("labels") if source == "expected" else self.table("labels")
        return {k: tuple(v) for k, v in lab.items()}

    def systems(self) -> dict:
        """Frozen simple systems per figure name (roots as strings)."""
        return {k: list(v["roots"]) for k, v in self.record.get("systems", {}).items()}


def _load_raw() -> dict:
    text = resources.files("superz").joinpath("data/orbits.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def _raw() -> dict:
    return _load_raw()


def _build_case(alg_id: str, rec: dict, check: bool = True, alpha=None) -> OrbitCase:
    g = get_algebra(alg_id, alpha)
    e, h = g.vector(rec["e"]), g.vector(rec["h"])
    f = derive_f(g, e, h)
    triple = SL2Triple(e, h, f)
    if check:
        bad = triple.check(g)
        if bad:
            raise CatalogError(f"{alg_id} {rec['name']}: " + ", ".join(bad))
        eig = eigen_decomposition(g.ad_matrix(h))
        if any(lam.denominator != 1 for lam in eig):
            raise CatalogError(f"{alg_id} {rec['name']}: ad h has a non-integer eigenvalue")
    return OrbitCase(alg_id, rec["name"], rec["e"], rec["h"], rec, triple, alpha)


@lru_cache(maxsize=None)
def _catalog(alg_id: str, alpha) -> tuple:
    return tuple(_build_case(alg_id, rec, alpha=alpha) for rec in _raw()[alg_id])


def catalog(alg_id: str, alpha=None) -> list:
    """All cases for ``d21``, ``g3`` or ``f4`` in table order.  ``alpha``
    specializes D(2,1;alpha) and is ignored for the other two."""
    key = alg_id.lower()
    if key not in _raw():
        raise KeyError(f"unknown algebra {alg_id!r}; expected one of d21, g3, f4")
    return list(_catalog(key, alpha if key == "d21" else None))


def get_case(alg_id: str, name: str, alpha=None) -> OrbitCase:
    """Look a case up by name; spaces and parentheses are ignored."""
    want = _norm_name(name)
    for c in catalog(alg_id, alpha):
        if _norm_name(c.name) == want or _norm_name(c.e_text) == want:
            return c
    raise KeyError(f"no case {name!r} for {alg_id}")


def case_names(alg_id: str) -> list:
    return [rec["name"] for rec in _raw()[alg_id.lower()]]
