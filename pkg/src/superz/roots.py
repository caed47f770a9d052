"""Root data, simple systems, edge multiplicities and labelled Dynkin diagrams.

Weights are tuples of scalars in the orthogonal coordinates recorded in an
algebra's ``meta["coords"]``: ``(b1, b2, b3)`` for D(2,1;a), ``(d, e1, e2)``
for G(3) (with ``e3 = -e1 - e2`` eliminated) and ``(d, e1, e2, e3)`` for F(4).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Sequence

from . import linalg as la
from .scalars import ALPHA, eval_at, format_scalar, is_symbolic, parse_scalar
from .superalgebra import EVEN, SuperAlgebra, parse_terms

WHITE, GREY, BLACK = "white", "grey", "black"
GLYPH = {WHITE: "o", GREY: "x", BLACK: "*"}
DEFAULT_SAMPLE = Q(1)


class RootError(ValueError):
    pass


# ---------------------------------------------------------------------------
# weights

def parse_weight(coords: Sequence[str], text: str) -> tuple:
    """``"1/2*d + 1/2*e1 - e3"`` -> coordinate tuple.  For a rank-two epsilon
    part (G(3)) the name ``e3`` stands for ``-e1 - e2``."""
    n = len(coords)
    out = [Q(0)] * n
    for coef, name in parse_terms(text):
        if name in coords:
            out[coords.index(name)] += coef
        elif name == "e3" and coords == ("d", "e1", "e2"):
            out[1] -= coef
            out[2] -= coef
        else:
            raise RootError(f"unknown coordinate {name!r}; expected one of {coords}")
    return tuple(out)


def format_weight(coords: Sequence[str], w) -> str:
    parts = []
    for name, c in zip(coords, w):
        if not c:
            continue
        txt = format_scalar(abs(c)) if not is_symbolic(c) else f"({format_scalar(c)})"
        neg = not is_symbolic(c) and c < 0
        parts.append(("-" if neg else "+", name if txt == "1" else f"{txt}*{name}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


# ---------------------------------------------------------------------------
# root datum

@dataclass
class RootDatum:
    """Roots of one algebra, each with its (1-dimensional) root vector."""

    algebra: SuperAlgebra
    coords: tuple
    gram: tuple
    roots: dict            # weight tuple -> basis index of the root vector
    parity: dict           # weight tuple -> EVEN / ODD
    _weyl: list | None = field(default=None, repr=False, compare=False)

    def inner(self, a, b):
        s = Q(0)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y and self.gram[i][j]:
                    s = s + x * y * self.gram[i][j]
        return s

    def norm(self, a):
        return self.inner(a, a)

    def weight(self, text: str) -> tuple:
        w = parse_weight(self.coords, text) if isinstance(text, str) else tuple(text)
        if w not in self.roots:
            raise RootError(f"{format_weight(self.coords, w)} is not a root of {self.algebra.name}")
        return w

    def fmt(self, w) -> str:
        return format_weight(self.coords, w)

    def root_vector(self, w) -> tuple:
        return la.unit(self.algebra.n, self.roots[tuple(w)])

    def style(self, w) -> str:
        if self.parity[w] == EVEN:
            return WHITE
        return GREY if not self.norm(w) else BLACK

    def min_norm(self, sample=DEFAULT_SAMPLE):
        vals = [abs(_numeric(self.norm(r), sample)) for r in self.roots]
        return min(v for v in vals if v)

    def reflect(self, alpha, x) -> tuple:
        c = 2 * self.inner(x, alpha) / self.norm(alpha)
        return tuple(xi - c * ai for xi, ai in zip(x, alpha))

    def weyl_group(self) -> list:
        """The Weyl group of the even part, as permutations of the root set
        realised by products of reflections in even roots.  Elements are
        returned as dicts ``root -> image`` in a deterministic order."""
        if self._weyl is None:
            self._weyl = self._generate_weyl()
        return self._weyl

    def _generate_weyl(self) -> list:
        roots = sorted(self.roots, key=_key)
        gens = []
        for a in roots:
            if self.parity[a] == EVEN and self.norm(a):
                perm = {r: self.reflect(a, r) for r in roots}
                if perm not in gens:
                    gens.append(perm)
        ident = {r: r for r in roots}
        seen = {_perm_key(ident): ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for s in gens:
                    p = {r: s[w[r]] for r in roots}
                    k = _perm_key(p)
                    if k not in seen:
                        seen[k] = p
                        nxt.append(p)
            frontier = nxt
        return [seen[k] for k in sorted(seen)]


def _key(w):
    return tuple(str(x) for x in w)


def _perm_key(p):
    return tuple(_key(p[r]) for r in sorted(p, key=_key))


def _numeric(x, sample):
    return eval_at(x, sample) if is_symbolic(x) else x


def root_datum(g: SuperAlgebra) -> RootDatum:
    """Build and check the root datum recorded in ``g.meta``.

    Every root vector must satisfy ``[t, v] = alpha(t) v`` for each Cartan
    basis element t, root spaces must be 1-dimensional, and -alpha must be a
    root whenever alpha is.
    """
    meta = g.meta
    coords, evals = tuple(meta["coords"]), meta["cartan_eval"]
    roots, parity = {}, {}
    for name, w in meta["weights"].items():
        w = tuple(Q(x) for x in w)
        if w in roots:
            raise RootError(f"root space of {format_weight(coords, w)} is not 1-dimensional")
        i = g.index[name]
        roots[w] = i
        parity[w] = g.labels[i].parity
    for w, i in roots.items():
        if tuple(-x for x in w) not in roots:
            raise RootError(f"{format_weight(coords, w)} is a root but its negative is not")
        v = la.unit(g.n, i)
        for t, ev in zip(meta["cartan"], evals):
            val = sum((Q(c) * x for c, x in zip(ev, w)), Q(0))
            if g.bracket(g.vector(t), v) != la.scale(val, v):
                raise RootError(f"{g.labels[i].name} is not a weight vector of weight "
                                f"{format_weight(coords, w)} for {t}")
    gram = tuple(tuple(x if is_symbolic(x) else Q(x) for x in row) for row in meta["gram"])
    return RootDatum(g, coords, gram, roots, parity)


# ---------------------------------------------------------------------------
# edges

@dataclass(frozen=True)
class Edge:
    mu: object             # scalar
    lines: int | None      # drawn lines when mu is a natural number
    arrow: tuple | None    # (from_node, to_node)
    flag: str = ""         # set when the arrow rule is ambiguous


def mu(datum: RootDatum, a, b, sample=DEFAULT_SAMPLE):
    """Number of lines between simple roots ``a`` and ``b``.

    Absolute values of rational functions are taken on the branch where the
    function is evaluated at ``sample`` (default a = 1); a sign that cannot
    be decided there raises ``RootError``.
    """
    na, nb, ab = datum.norm(a), datum.norm(b), datum.inner(a, b)

    def absval(x):
        if not is_symbolic(x):
            return abs(x)
        v = eval_at(x, sample)
        if v == 0:
            raise RootError(f"sign of {format_scalar(x)} undecided at a={sample}; "
                            "pass a concrete alpha")
        return x if v > 0 else -x

    if not na and not nb:
        return absval(ab)
    if na and nb:
        m = min(absval(na), absval(nb), key=lambda x: _numeric(x, sample))
        return 2 * absval(ab) / m
    return 2 * absval(ab) / datum.min_norm(sample)


def _arrow(na, nb, sample):
    """Direction for the ordered pair (i, j): +1 for i -> j, -1 for j -> i,
    0 for none; the second value counts how many clauses applied."""
    na, nb = _numeric(na, sample), _numeric(nb, sample)
    hits = []
    if na and nb:
        if na > nb:
            hits.append(1)
        elif nb > na:
            hits.append(-1)
    elif not na and nb:
        if abs(nb) < 2:
            hits.append(1)
        elif abs(nb) > 2:
            hits.append(-1)
    elif na and not nb:
        if abs(na) < 2:
            hits.append(-1)
        elif abs(na) > 2:
            hits.append(1)
    return hits


def edge(datum: RootDatum, i: int, j: int, a, b, sample=DEFAULT_SAMPLE) -> Edge | None:
    m = mu(datum, a, b, sample)
    if not m:
        return None
    mv = _numeric(m, sample)
    lines = int(mv) if not is_symbolic(m) and mv == int(mv) and mv > 0 else None
    arrow, flag = None, ""
    if mv > 1:
        hits = _arrow(datum.norm(a), datum.norm(b), sample)
        if len(set(hits)) == 1:
            arrow = (i, j) if hits[0] > 0 else (j, i)
        elif not datum.norm(a) or not datum.norm(b) or datum.norm(a) != datum.norm(b):
            flag = "no arrow clause applies" if not hits else "conflicting arrow clauses"
    return Edge(m, lines, arrow, flag)


# ---------------------------------------------------------------------------
# labelled diagrams

@dataclass
class LabelledDiagram:
    name: str
    roots: tuple                  # simple roots (weight tuples)
    styles: tuple
    labels: tuple
    edges: dict = field(default_factory=dict)    # (i, j) with i < j -> Edge
    coords: tuple = ()

    @property
    def rank(self) -> int:
        return len(self.roots)

    def render(self) -> str:
        """Deterministic one-block text rendering."""
        lines = [f"{self.name}:"]
        for k, (r, s, a) in enumerate(zip(self.roots, self.styles, self.labels)):
            lines.append(f"  {k + 1} {GLYPH[s]} [{format_scalar(a)}] "
                         f"{format_weight(self.coords, r)}")
        for (i, j), e in sorted(self.edges.items()):
            arrow = "" if e.arrow is None else f" arrow {e.arrow[0] + 1}->{e.arrow[1] + 1}"
            shape = f"{e.lines} lines" if e.lines else f"mu={format_scalar(e.mu)}"
            flag = f" ({e.flag})" if e.flag else ""
            lines.append(f"  {i + 1}-{j + 1}: {shape}{arrow}{flag}")
        return "\n".join(lines)

    def to_graph(self) -> dict:
        """Graph description for external renderers."""
        return {
            "name": self.name,
            "nodes": [{"id": k + 1, "root": format_weight(self.coords, r), "style": s,
                       "label": format_scalar(a)}
                      for k, (r, s, a) in enumerate(zip(self.roots, self.styles, self.labels))],
            "edges": [{"source": i + 1, "target": j + 1, "mu": format_scalar(e.mu),
                       "lines": e.lines,
                       "arrow": None if e.arrow is None else [e.arrow[0] + 1, e.arrow[1] + 1]}
                      for (i, j), e in sorted(self.edges.items())],
        }

    def to_dot(self) -> str:
        g = self.to_graph()
        out = [f'graph "{self.name}" {{']
        shape = {WHITE: "circle", GREY: "doublecircle", BLACK: "point"}
        for n in g["nodes"]:
            out.append(f'  n{n["id"]} [label="{n["label"]}", shape={shape[n["style"]]}];')
        for e in g["edges"]:
            out.append(f'  n{e["source"]} -- n{e["target"]} [label="{e["mu"]}"];')
        out.append("}")
        return "\n".join(out)


def h_eigenvalue(g: SuperAlgebra, h, v):
    """The scalar c with ``[h, v] = c v``; ``RootError`` if v is not an
    eigenvector."""
    w = g.bracket(h, v)
    i = next(k for k, x in enumerate(v) if x)
    c = w[i] / v[i]
    if w != la.scale(c, v):
        raise RootError(f"{g.format(v)} is not an ad-h eigenvector")
    return c


def label_diagram(g: SuperAlgebra, datum: RootDatum, name: str, pi: Sequence, h,
                  sample=DEFAULT_SAMPLE) -> LabelledDiagram:
    """Labels ``a_i`` are the ad-h eigenvalues on the simple root vectors."""
    h = g.vector(h) if isinstance(h, str) else h
    pi = tuple(datum.weight(r) for r in pi)
    labels = tuple(h_eigenvalue(g, h, datum.root_vector(r)) for r in pi)
    edges = {}
    for i in range(len(pi)):
        for j in range(i + 1, len(pi)):
            e = edge(datum, i, j, pi[i], pi[j], sample)
            if e is not None:
                edges[(i, j)] = e
    return LabelledDiagram(name, pi, tuple(datum.style(r) for r in pi), labels, edges,
                           datum.coords)


# ---------------------------------------------------------------------------
# simple systems

_SYSTEMS = None


def _load_systems() -> dict:
    global _SYSTEMS
    if _SYSTEMS is None:
        from importlib import resources
        text = resources.files("superz").joinpath("data/simple_systems.json").read_text()
        _SYSTEMS = json.loads(text)
    return _SYSTEMS


def simple_systems(alg_id: str) -> list:
    """The bundled figure systems as ``[(name, [root strings])]``."""
    data = _load_systems()
    if alg_id not in data:
        raise KeyError(f"unknown algebra {alg_id!r}")
    return [(s["name"], list(s["roots"])) for s in data[alg_id]]


def figure_system(alg_id: str, name: str) -> list:
    for nm, roots in simple_systems(alg_id):
        if nm == name:
            return roots
    raise KeyError(f"no simple system {name!r} for {alg_id}")


def positive_roots(datum: RootDatum, pi: Sequence) -> list | None:
    """Roots that are non-negative integral combinations of ``pi``, or
    ``None`` when some root is not an integral combination of one sign (so
    ``pi`` is not a simple system)."""
    pi = [tuple(r) for r in pi]
    m = la.Matrix.from_columns(pi, len(datum.coords))
    pos = []
    for r in datum.roots:
        c = la.solve(m, r)
        if c is None or m.apply(c) != tuple(r):
            return None
        vals = [_numeric(x, DEFAULT_SAMPLE) for x in c]
        if any(x != int(x) for x in vals):
            return None
        if all(x >= 0 for x in vals):
            pos.append(r)
        elif not all(x <= 0 for x in vals):
            return None
    return pos


def check_simple_system(datum: RootDatum, pi: Sequence) -> list:
    """Problems with ``pi`` as a simple system (empty list = fine)."""
    issues = []
    try:
        pi = [datum.weight(r) for r in pi]
    except RootError as exc:
        return [str(exc)]
    if len(pi) != len(datum.coords):
        issues.append(f"{len(pi)} roots for rank {len(datum.coords)}")
        return issues
    if positive_roots(datum, pi) is None:
        issues.append("some root is not an integral combination of one sign")
    return issues


def dominant_images(g: SuperAlgebra, datum: RootDatum, pi: Sequence, h) -> list:
    """Weyl images ``w(pi)`` on which every label is non-negative, paired
    with their labels, in a deterministic order."""
    h = g.vector(h) if isinstance(h, str) else h
    pi = [datum.weight(r) for r in pi]
    ev = {r: h_eigenvalue(g, h, datum.root_vector(r)) for r in datum.roots}
    out, seen = [], set()
    for w in datum.weyl_group():
        img = tuple(w[r] for r in pi)
        if img in seen:
            continue
        seen.add(img)
        labels = tuple(ev[r] for r in img)
        if all(x >= 0 for x in labels):
            out.append((img, labels))
    return out


def sample_alpha(alpha) -> Q:
    """Concrete sample used for sign decisions over Q(a)."""
    return DEFAULT_SAMPLE if alpha is None or is_symbolic(alpha) else Q(alpha)


__all__ = ["RootDatum", "LabelledDiagram", "Edge", "RootError", "root_datum", "mu", "edge",
           "label_diagram", "simple_systems", "figure_system", "dominant_images",
           "check_simple_system", "positive_roots", "parse_weight", "format_weight",
           "h_eigenvalue", "ALPHA", "parse_scalar"]
