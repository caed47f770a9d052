"""Mechanical checks of the three centre theorems on the orbit catalog.

Theorem 1: if no label equals 1, dim z(g^e)^{G^e} = n2 = dim z(g^h).
Theorem 2: with g0 generated by the root vectors of the 2-free core and e0 in
g0 the matching nilpotent, dim g^e - dim g0^{e0} = n2 and the same holds for
fixed centres.
Theorem 3: dim z(g^e)^{G^e} = ceil(sum(a_i) / 2) + eps.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction as Q

from . import linalg as la
from .centralizer import (centralizer, centralizer_in, centre_of, component_action,
                          fixed_points)
from .linalg import Matrix, Subspace
from .orbits import OrbitCase, catalog, derive_f
from .roots import LabelledDiagram, RootDatum, h_eigenvalue, label_diagram, root_datum
from .superalgebra import EVEN, SuperAlgebra


class LabelError(ValueError):
    """A label outside {0, 1, 2}."""


@dataclass(frozen=True)
class LabelCounts:
    n0: int
    n1: int
    n2: int


def count_labels(d: LabelledDiagram) -> LabelCounts:
    counts = [0, 0, 0]
    for a in d.labels:
        if a not in (0, 1, 2):
            raise LabelError(f"label {a} on {d.name} is not 0, 1 or 2")
        counts[int(a)] += 1
    return LabelCounts(*counts)


def two_free_core(d: LabelledDiagram) -> LabelledDiagram:
    """Drop the nodes labelled 2 together with their edges."""
    keep = [i for i, a in enumerate(d.labels) if a != 2]
    if len(keep) == len(d.labels):
        return d
    new = {old: k for k, old in enumerate(keep)}
    edges = {}
    for (i, j), ed in d.edges.items():
        if i in new and j in new:
            arrow = None if ed.arrow is None else (new[ed.arrow[0]], new[ed.arrow[1]])
            edges[(new[i], new[j])] = type(ed)(ed.mu, ed.lines, arrow, ed.flag)
    return LabelledDiagram(d.name + " core", tuple(d.roots[i] for i in keep),
                           tuple(d.styles[i] for i in keep), tuple(d.labels[i] for i in keep),
                           edges, d.coords)


# ---------------------------------------------------------------------------
# per-case building blocks

def case_diagrams(case: OrbitCase, sample=None) -> dict:
    """Labelled diagrams on the frozen simple systems, keyed by figure."""
    g = case.algebra
    datum = root_datum(g)
    kw = {} if sample is None else {"sample": sample}
    return {fig: label_diagram(g, datum, fig, roots, case.h, **kw)
            for fig, roots in case.systems().items()}


def actions_for(case: OrbitCase) -> list:
    return [component_action(case.algebra, k) for k in case.components]


def centre_data(case: OrbitCase) -> tuple:
    """``(g^e, z(g^e), fixed centre)`` for a case."""
    g = case.algebra
    ge = centralizer(g, case.e)
    z = centre_of(g, ge)
    return ge, z, fixed_points(z, actions_for(case))


def centre_of_gh(case: OrbitCase) -> Subspace:
    g = case.algebra
    return centre_of(g, centralizer(g, case.h))


def _neg(r) -> tuple:
    return tuple(-x for x in r)


def core_subalgebra(g: SuperAlgebra, datum: RootDatum, roots) -> Subspace:
    """Subalgebra generated by the root vectors of ``±roots``."""
    gens = []
    for r in roots:
        gens += [datum.root_vector(r), datum.root_vector(_neg(r))]
    return g.subalgebra_closure(gens)


def core_h0(g: SuperAlgebra, datum: RootDatum, roots, labels) -> tuple:
    """The element of span{[e_r, e_-r]} with ``r(h0) = label`` for each core root."""
    if not roots:
        return g.zero()
    cor = [g.bracket(datum.root_vector(r), datum.root_vector(_neg(r))) for r in roots]
    m = Matrix.from_rows([[h_eigenvalue(g, c, datum.root_vector(r)) for c in cor]
                          for r in roots], len(cor))
    x = la.solve(m, [Q(a) for a in labels])
    if x is None:
        raise ValueError("core labels are not realised by a coroot combination")
    return la.lincomb(x, cor, g.n)


def find_e0(g: SuperAlgebra, datum: RootDatum, g0: Subspace, h0) -> tuple | None:
    """Smallest 0/1 combination of even root vectors of g0 in the h0-degree-2
    piece that sits in an sl(2)-triple with h0 inside g0."""
    if not any(h0):
        return g.zero()
    ev = [r for r in sorted(datum.roots) if datum.parity[r] == EVEN
          and g0.contains(datum.root_vector(r))]
    two = [r for r in ev if h_eigenvalue(g, h0, datum.root_vector(r)) == 2]
    for k in range(1, len(two) + 1):
        for sub in itertools.combinations(two, k):
            e0 = la.lincomb([Q(1)] * k, [datum.root_vector(r) for r in sub], g.n)
            try:
                f0 = derive_f(g, e0, h0)
            except ValueError:
                continue
            if g0.contains(f0):
                return e0
    return None


@dataclass
class CoreData:
    figure: str
    core_labels: tuple
    g0: Subspace
    h0: tuple
    e0: tuple


def core_data(case: OrbitCase) -> CoreData | None:
    """g0, h0 and e0 from the frozen Theorem-2 record, or ``None`` if the
    case has no label 2."""
    rec = case.record.get("theorem2")
    if not rec or "figure" not in rec:
        return None
    g = case.algebra
    datum = root_datum(g)
    roots = [datum.weight(r) for r in case.systems()[rec["figure"]]]
    diag = label_diagram(g, datum, rec["figure"], roots, case.h)
    core = [(r, a) for r, a in zip(diag.roots, diag.labels) if a != 2]
    g0 = core_subalgebra(g, datum, [r for r, _ in core])
    h0 = core_h0(g, datum, [r for r, _ in core], [a for _, a in core])
    e0 = g.vector(rec["e0"])
    if not g0.contains(e0):
        raise ValueError(f"e0 = {rec['e0']} is not in g0 for {case.name}")
    return CoreData(rec["figure"], tuple(a for _, a in core), g0, h0, e0)


# ---------------------------------------------------------------------------
# reports

@dataclass
class TheoremEntry:
    theorem: int
    algebra: str
    case: str
    applicable: bool
    passed: bool | None
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    detail: str = ""


def _counts(case: OrbitCase, diagrams: dict | None = None) -> dict:
    diagrams = diagrams if diagrams is not None else case_diagrams(case)
    return {fig: count_labels(d) for fig, d in diagrams.items()}


def verify_theorem1(case: OrbitCase) -> TheoremEntry:
    counts = _counts(case)
    n1s = {c.n1 for c in counts.values()}
    entry = TheoremEntry(1, case.algebra_id, case.name, n1s == {0}, None)
    if not entry.applicable:
        entry.detail = "some label equals 1"
        return entry
    n2 = {c.n2 for c in counts.values()}
    _, _, fz = centre_data(case)
    zh = centre_of_gh(case)
    entry.computed = {"dim_fixed_z": fz.dim(), "n2": sorted(n2), "dim_z_gh": zh.dim()}
    entry.passed = len(n2) == 1 and fz.dim() == zh.dim() == n2.pop()
    if not entry.passed:
        entry.detail = "dim fixed z, n2 and dim z(g^h) differ"
    return entry


def verify_theorem2(case: OrbitCase) -> TheoremEntry:
    cd = core_data(case)
    entry = TheoremEntry(2, case.algebra_id, case.name, cd is not None, None)
    if cd is None:
        entry.detail = "no label 2"
        return entry
    g = case.algebra
    n2 = count_labels(case_diagrams(case)[cd.figure]).n2
    ge, _, fz = centre_data(case)
    g0e0 = centralizer_in(g, cd.g0, cd.e0)
    z0 = centre_of(g, g0e0)
    fz0 = fixed_points(z0, actions_for(case))
    entry.computed = {"figure": cd.figure, "n2": n2, "dim_ge": ge.dim(),
                      "dim_g0": cd.g0.dim(), "dim_g0e0": g0e0.dim(),
                      "dim_fixed_z": fz.dim(), "dim_fixed_z0": fz0.dim()}
    want = case.expected("theorem2", {}).get("dim_g0e0")
    if want is not None:
        entry.expected = {"dim_g0e0": want}
    ok = ge.dim() - g0e0.dim() == n2 and fz.dim() - fz0.dim() == n2
    if want is not None and want != g0e0.dim():
        ok = False
        entry.detail = f"dim g0^e0 = {g0e0.dim()}, reference {want}"
    elif not ok:
        entry.detail = "dimension differences do not equal n2"
    entry.passed = ok
    return entry


def verify_theorem3(case: OrbitCase) -> TheoremEntry:
    diagrams = case_diagrams(case)
    sums = {fig: sum(d.labels) for fig, d in diagrams.items()}
    entry = TheoremEntry(3, case.algebra_id, case.name, True, None)
    _, _, fz = centre_data(case)
    total = set(sums.values())
    s = max(total) if total else 0
    predicted = math.ceil(Q(s) / 2) + case.eps
    entry.computed = {"label_sums": {k: int(v) for k, v in sums.items()},
                      "dim_fixed_z": fz.dim(), "predicted": int(predicted), "eps": case.eps}
    entry.passed = len(total) <= 1 and fz.dim() == predicted
    if len(total) > 1:
        entry.detail = "label sums differ between simple systems"
    elif not entry.passed:
        entry.detail = f"dim fixed z = {fz.dim()}, formula gives {predicted}"
    return entry


@dataclass
class TheoremReport:
    entries: list

    @property
    def ok(self) -> bool:
        return all(e.passed is not False for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if e.passed is False]

    def to_json(self) -> str:
        return json.dumps([asdict(e) for e in self.entries], indent=2, sort_keys=True)

    def to_markdown(self) -> str:
        lines = ["| theorem | algebra | case | result | values |", "|---|---|---|---|---|"]
        for e in self.entries:
            res = "n/a" if not e.applicable else ("pass" if e.passed else "FAIL")
            vals = ", ".join(f"{k}={v}" for k, v in e.computed.items())
            if e.detail and e.passed is False:
                vals += f" ({e.detail})"
            lines.append(f"| {e.theorem} | {e.algebra} | {e.case} | {res} | {vals} |")
        return "\n".join(lines) + "\n"


def verify_case(case: OrbitCase) -> list:
    return [verify_theorem1(case), verify_theorem2(case), verify_theorem3(case)]


def verify_all(alg_id: str) -> TheoremReport:
    out = []
    for case in catalog(alg_id):
        out += verify_case(case)
    return TheoremReport(out)


__all__ = ["LabelCounts", "count_labels", "two_free_core", "case_diagrams", "centre_data",
           "centre_of_gh", "core_subalgebra", "core_h0", "find_e0", "core_data",
           "verify_theorem1", "verify_theorem2", "verify_theorem3", "verify_case",
           "verify_all", "TheoremEntry", "TheoremReport"]
