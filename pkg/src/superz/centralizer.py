"""Centralizers, centres, ad-h gradings, module decompositions and
component-group fixed points.

Every subspace here is a :class:`~superz.linalg.Subspace` in the coordinates
of one :class:`~superz.superalgebra.SuperAlgebra`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence

from . import linalg as la
from .linalg import Matrix, Subspace, kernel
from .scalars import is_symbolic
from .superalgebra import EVEN, ODD, SuperAlgebra, eigenspace

SCAN = range(-20, 21)


class DecompositionError(ValueError):
    """A weight profile that no direct sum of simple modules can produce."""


# ---------------------------------------------------------------------------
# centralizers and centres

def centralizer(g: SuperAlgebra, e) -> Subspace:
    """``g^e``, the kernel of ``ad e``."""
    return kernel(g.ad_matrix(g.vector(e)))


def centralizer_in(g: SuperAlgebra, s: Subspace, e) -> Subspace:
    """``s^e = s ∩ g^e``."""
    return s.intersect(centralizer(g, e))


def centre_of(g: SuperAlgebra, s: Subspace) -> Subspace:
    """Centre of the subalgebra ``s``: the x in s with ``[x, b] = 0`` for
    every basis vector b of s."""
    if not g.is_closed(s):
        raise ValueError("centre_of needs a bracket-closed subspace")
    basis = list(s.basis)
    if not basis:
        return s
    rows = []
    for bj in basis:
        cols = [g.bracket(bi, bj) for bi in basis]
        for r in range(g.n):
            row = [c[r] for c in cols]
            if any(row):
                rows.append(row)
    coeffs = la._kernel_vectors(rows, len(basis)) if rows else [la.unit(len(basis), i)
                                                                 for i in range(len(basis))]
    return Subspace.span(g.n, [la.lincomb(c, basis, g.n) for c in coeffs])


# ---------------------------------------------------------------------------
# eigen-decompositions

def eigen_decomposition(m: Matrix, candidates: Iterable = ()) -> dict:
    """Split a diagonalizable matrix with rational eigenvalues.

    Candidate eigenvalues are the given ones plus the diagonal of ``m``;
    if those do not exhaust the space, integers in [-20, 20] are scanned.
    """
    n = m.rows
    found: dict = {}

    def take(lams):
        for lam in lams:
            if lam in found or is_symbolic(lam):
                continue
            sp = eigenspace(m, lam)
            if sp.dim():
                found[lam] = sp

    take(list(candidates) + [m[i, i] for i in range(n)])
    if sum(s.dim() for s in found.values()) < n:
        take(Q(k) for k in SCAN)
    total = sum(s.dim() for s in found.values())
    if total != n:
        raise DecompositionError(
            f"operator is not split over the candidates: eigenspaces cover {total} of {n}")
    return dict(sorted(found.items()))


@dataclass(frozen=True)
class GradedSubspace:
    base: Subspace
    pieces: dict = field(default_factory=dict)   # eigenvalue -> Subspace

    def dims(self) -> dict:
        return {j: s.dim() for j, s in self.pieces.items()}

    def piece(self, j) -> Subspace:
        return self.pieces.get(Q(j), Subspace.zero(self.base.ambient))

    def degrees(self) -> list:
        return list(self.pieces)


def grade(g: SuperAlgebra, s: Subspace, h) -> GradedSubspace:
    """Decompose ``s`` into ``ad h`` eigenspaces."""
    adh = g.ad_matrix(g.vector(h))
    for v in s.basis:
        if not s.contains(adh.apply(v)):
            raise ValueError("ad h does not preserve the subspace")
    pieces = {}
    for lam, sp in eigen_decomposition(adh).items():
        part = s.intersect(sp)
        if part.dim():
            pieces[lam] = part
    if sum(p.dim() for p in pieces.values()) != s.dim():
        raise DecompositionError("graded pieces do not add up to the subspace")
    return GradedSubspace(s, pieces)


def _restricted_profile(g: SuperAlgebra, s: Subspace, x) -> Counter:
    """Eigenvalue multiplicities of ``ad x`` on the invariant subspace s."""
    if not s.dim():
        return Counter()
    m = la.restrict(g.ad_matrix(g.vector(x)), s)
    return Counter({lam: sp.dim() for lam, sp in eigen_decomposition(m).items()})


def _peel(profile: Counter, step: int) -> list:
    """Highest weights of a ladder decomposition: weight ``m`` modules carry
    eigenvalues ``m, m-step, ..., -m`` once each."""
    out = []
    prof = Counter(profile)
    for lam in list(prof):
        if lam != int(lam):
            raise DecompositionError(f"non-integral eigenvalue {lam}")
    while +prof:
        top = max(k for k, v in prof.items() if v > 0)
        if top < 0:
            raise DecompositionError("weight profile is not symmetric")
        mult = prof[top]
        ladder = [top - step * i for i in range(int(2 * top) // step + 1)]
        if ladder[-1] != -top:
            raise DecompositionError(f"no ladder of step {step} ends at {-top}")
        for lam in ladder:
            if prof[lam] < mult:
                raise DecompositionError(f"ladder from {top} broken at {lam}")
            prof[lam] -= mult
        out += [int(top)] * mult
    return sorted(out)


def _check_invariant(g: SuperAlgebra, s: Subspace, xs):
    for x in xs:
        ad = g.ad_matrix(g.vector(x))
        for v in s.basis:
            if not s.contains(ad.apply(v)):
                raise ValueError(f"subspace not invariant under {g.format(g.vector(x))}")


def decompose_sl2_module(g: SuperAlgebra, s: Subspace, triple) -> list:
    """Highest weights ``d_i`` with ``s ≅ ⊕ V(d_i)`` under an sl(2)-triple
    ``(e, h, f)`` acting by ``ad``."""
    e, h, f = triple
    _check_invariant(g, s, (e, h, f))
    return _peel(_restricted_profile(g, s, h), 2)


def decompose_osp_module(g: SuperAlgebra, s: Subspace, u0) -> list:
    """Highest ``u0``-eigenvalues of the osp(1|2) summands of ``s``.

    ``u0`` is normalized so that ``[u0, u2] = 2 u2``; the summand with
    highest weight m then has eigenvalues m, m-1, ..., -m (dim 2m+1).
    """
    return _peel(_restricted_profile(g, s, u0), 1)


# ---------------------------------------------------------------------------
# osp(1|2) recognition

@dataclass(frozen=True)
class OspRecognition:
    ok: bool
    assignment: tuple = ()      # (u_-2, u_-1, u_0, u_1, u_2) as coordinate vectors
    constants: dict = field(default_factory=dict)
    reason: str = ""

    def __bool__(self):
        return self.ok


def _rational_sqrt(x):
    if is_symbolic(x) or x <= 0:
        return None
    x = Q(x)
    import math
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Q(n, d)
    return None


def _first_index(v) -> int:
    return next(i for i, c in enumerate(v) if c)


def _single(sp: Subspace):
    return sp.basis[0] if sp.dim() == 1 else None


def _try_u0(g: SuperAlgebra, s: Subspace, s0: Subspace, s1: Subspace, u0, canonical=True):
    if la.is_zero_vec(u0):
        return None
    ad = g.ad_matrix(u0)
    try:
        m1 = la.restrict(ad, s1)
        m0 = la.restrict(ad, s0)
    except ValueError:
        return None
    if m1[0, 0] + m1[1, 1]:
        return None
    mu = _rational_sqrt(-(m1[0, 0] * m1[1, 1] - m1[0, 1] * m1[1, 0]))
    if not mu:
        return None
    u0 = la.scale(1 / mu, u0)
    ad = g.ad_matrix(u0)
    pick = {}
    for lam, space in ((2, s0), (0, s0), (-2, s0), (1, s1), (-1, s1)):
        v = _single(space.intersect(eigenspace(ad, Q(lam))))
        if v is None:
            return None
        pick[lam] = v
    if not Subspace.span(g.n, [pick[0]]).contains(u0):
        return None
    if canonical and _first_index(pick[2]) > _first_index(pick[-2]):
        u0 = la.scale(-1, u0)
        pick = {-k: v for k, v in pick.items()}
    pick[0] = u0
    return pick


def _coefficient(v, target):
    """c with v = c * target, or None."""
    i = _first_index(target)
    c = v[i] / target[i]
    return c if la.scale(c, target) == tuple(v) else None


def recognize_osp12(g: SuperAlgebra, s: Subspace, u0_hint=None) -> OspRecognition:
    """Decide whether ``s`` (3 even + 2 odd dimensions) has a basis
    ``u_-2, u_-1, u_0, u_1, u_2`` with

    1. ``[u0, u_i] = a_i u_i`` (a_i nonzero for i != 0),
    2. ``[u1, u1] = a u2`` and ``[u_-1, u_-1] = b u_-2``,
    3. ``[u2, u_-2] = c u0``,

    with a, b, c nonzero, which forces ``s ≅ osp(1|2)``.  The returned
    assignment has ``u0`` scaled so that ``[u0, u2] = 2 u2``.
    """
    s0, s1 = g.even_part(s), g.odd_part(s)
    if (s0.dim(), s1.dim()) != (3, 2) or s0.dim() + s1.dim() != s.dim():
        return OspRecognition(False, reason=f"wrong shape {s0.dim()}|{s1.dim()}")
    if not g.is_closed(s):
        return OspRecognition(False, reason="not a subalgebra")
    cands = []
    if u0_hint is not None:
        # a hinted u0 keeps its sign; only the scale is normalized
        pick = _try_u0(g, s, s0, s1, g.vector(u0_hint), canonical=False)
        if pick is not None:
            cands.append(pick[0])
    cands += [g.bracket(a, b) for a in s1.basis for b in s1.basis]
    cands += list(s0.basis)
    cands += [la.add(a, b) for i, a in enumerate(s0.basis) for b in s0.basis[i + 1:]]
    cands += [g.bracket(a, b) for a in s0.basis for b in s0.basis]
    last = "no semisimple candidate with eigenvalues (2,0,-2 | 1,-1)"
    for cand in cands:
        pick = _try_u0(g, s, s0, s1, cand)
        if pick is None:
            continue
        u = {k: pick[k] for k in (-2, -1, 0, 1, 2)}
        a = _coefficient(g.bracket(u[1], u[1]), u[2])
        b = _coefficient(g.bracket(u[-1], u[-1]), u[-2])
        c = _coefficient(g.bracket(u[2], u[-2]), u[0])
        if not (a and b and c):
            last = "condition (2) or (3) fails"
            continue
        return OspRecognition(True, tuple(u[k] for k in (-2, -1, 0, 1, 2)),
                              {"a": a, "b": b, "c": c})
    return OspRecognition(False, reason=last)


# ---------------------------------------------------------------------------
# group actions

@dataclass(frozen=True)
class GroupElementAction:
    """A parity-preserving linear map of g that is checked to be an
    automorphism on construction."""

    algebra: SuperAlgebra
    matrix: Matrix
    name: str = "g"

    def __post_init__(self):
        g, a = self.algebra, self.matrix
        if (a.rows, a.cols) != (g.n, g.n):
            raise ValueError("action matrix has the wrong shape")
        for j in range(g.n):
            col = a.column(j)
            if g.parity_of(col) not in (g.parities[j],) and any(col):
                raise ValueError(f"{self.name} does not preserve parity at {g.labels[j].name}")
        if la.rank(a) != g.n:
            raise ValueError(f"{self.name} is not invertible")
        bad = automorphism_defects(g, a, limit=1)
        if bad:
            i, j = bad[0]
            raise ValueError(f"{self.name} is not an automorphism: fails on "
                             f"[{g.labels[i].name}, {g.labels[j].name}]")

    def apply(self, v) -> tuple:
        return self.matrix.apply(v)

    def even_block(self) -> Matrix:
        ev = self.algebra.even_indices()
        return Matrix.from_rows([[self.matrix[i, j] for j in ev] for i in ev], len(ev))

    def odd_block(self) -> Matrix:
        od = self.algebra.odd_indices()
        return Matrix.from_rows([[self.matrix[i, j] for j in od] for i in od], len(od))


def automorphism_defects(g: SuperAlgebra, a: Matrix, limit: int | None = None) -> list:
    cols = [a.column(j) for j in range(g.n)]
    out = []
    for i in range(g.n):
        for j in range(i, g.n):
            lhs = a.apply(g.bracket(la.unit(g.n, i), la.unit(g.n, j)))
            if lhs != g.bracket(cols[i], cols[j]):
                out.append((i, j))
                if limit and len(out) >= limit:
                    return out
    return out


def parity_action(g: SuperAlgebra) -> GroupElementAction:
    """The central element -1 of the SL2 factor: +1 on g_0, -1 on g_1."""
    diag = [Q(1) if p == EVEN else Q(-1) for p in g.parities]
    m = Matrix.from_rows([[diag[i] if i == j else Q(0) for j in range(g.n)]
                          for i in range(g.n)], g.n)
    return GroupElementAction(g, m, "parity")


def fixed_points(s: Subspace, actions: Sequence[GroupElementAction]) -> Subspace:
    """``s`` intersected with the fixed space of every action."""
    out = s
    for act in actions:
        for v in s.basis:
            if not s.contains(act.apply(v)):
                raise ValueError(f"{act.name} does not preserve the subspace")
        n = act.matrix.rows
        fix = kernel(act.matrix - Matrix.identity(n))
        out = out.intersect(fix)
    return out


# ---------------------------------------------------------------------------
# explicit component-group representatives

def _block_matrix(n: int, blocks) -> Matrix:
    """Block-diagonal map: ``blocks`` is a list of (indices, square Matrix);
    unlisted coordinates are fixed."""
    rows = [[Q(0)] * n for _ in range(n)]
    seen = set()
    for idx, m in blocks:
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                rows[i][j] = m[a, b]
        seen |= set(idx)
    for i in range(n):
        if i not in seen:
            rows[i][i] = Q(1)
    return Matrix.from_rows(rows, n)


def _kron_identity(k: int, m: Matrix) -> Matrix:
    """``I_k ⊗ m`` (block diagonal with k copies of m)."""
    n = m.rows
    rows = []
    for b in range(k):
        for i in range(n):
            rows.append([Q(0)] * (b * n) + list(m.row(i)) + [Q(0)] * ((k - b - 1) * n))
    return Matrix.from_rows(rows, k * n)


def conjugation_block(mla, k: Matrix) -> Matrix:
    """Matrix of ``X -> k X k^-1`` on the basis of a matrix Lie algebra."""
    dec = mla.decomposer()
    kinv = la.inverse(k)
    return Matrix.from_columns([dec(k @ x @ kinv) for x in mla.matrices], mla.dim)


def g2_element_action(g3: SuperAlgebra, k: Matrix, name: str = "k") -> GroupElementAction:
    """Action of ``k`` in GL(V7) on G(3): conjugation on G2, ``1 ⊗ k`` on
    ``V2 ⊗ V7``, trivial on sl(2)."""
    from .builders import build_g2
    mla = build_g2().meta["matrices"]
    ev = [g3.index[nm] for nm in mla.names]
    od = g3.odd_indices()
    m = _block_matrix(g3.n, [(ev, conjugation_block(mla, k)), (od, _kron_identity(2, k))])
    return GroupElementAction(g3, m, name)


def spin_lift(g7: Matrix) -> Matrix:
    """The 8x8 ``S`` (v-basis) with ``S rho(X) S^-1 = rho(g X g^-1)`` and
    preserving psi8; determined up to sign, the ``+`` choice is returned."""
    from .builders import SPIN_V, build_so7, psi8, spin_action_v
    mla = build_so7().meta["matrices"]
    rho = spin_action_v()
    conj = conjugation_block(mla, g7)
    reps = [rho[nm] for nm in mla.names]
    rows = []
    for j, x in enumerate(reps):
        y = Matrix.zero(8, 8)
        for k, c in enumerate(conj.column(j)):
            if c:
                y = y + reps[k].scaled(c)
        # (S x - y S)_{ab} = sum_c S_ac x_cb - y_ac S_cb; unknown S_pq at 8p+q
        for a in range(8):
            for b in range(8):
                row = [Q(0)] * 64
                for c in range(8):
                    if x[c, b]:
                        row[8 * a + c] += x[c, b]
                    if y[a, c]:
                        row[8 * c + b] -= y[a, c]
                if any(row):
                    rows.append(row)
    sols = la._kernel_vectors(rows, 64)
    if len(sols) != 1:
        raise ValueError(f"intertwiner space has dimension {len(sols)}, expected 1")
    s = Matrix(8, 8, sols[0])
    psi = Matrix.from_rows([[psi8(a, b) for b in SPIN_V] for a in SPIN_V], 8)
    form = s.transpose() @ psi @ s
    ratio = next(form[i, j] / psi[i, j] for i in range(8) for j in range(8) if psi[i, j])
    if form != psi.scaled(ratio):
        raise ValueError("intertwiner does not preserve psi8 up to scale")
    c = _rational_sqrt(ratio)
    if c is None:
        raise ValueError(f"psi8 scale {ratio} is not a rational square")
    return s.scaled(1 / c)


def so7_element_action(f4: SuperAlgebra, g7: Matrix, sign: int = 1,
                       name: str = "g") -> GroupElementAction:
    """Action of ``g7`` in SO(7) on F(4) via conjugation and its spin lift."""
    from .builders import build_so7
    mla = build_so7().meta["matrices"]
    ev = [f4.index[nm] for nm in mla.names]
    od = f4.odd_indices()
    s = spin_lift(g7).scaled(Q(sign))
    m = _block_matrix(f4.n, [(ev, conjugation_block(mla, g7)), (od, _kron_identity(2, s))])
    return GroupElementAction(f4, m, name)


# The 7x7 element of SO(7) (basis e1,e2,e3,e0,e-3,e-2,e-1) that swaps e1<->e2,
# e3<->e-3, e-2<->e-1 and negates e0.  It normalizes e(3^2,1) and sends
# R[e1,e2] to -R[e1,e2].
SO7_SWAP = ((0, 1, 0, 0, 0, 0, 0),
            (1, 0, 0, 0, 0, 0, 0),
            (0, 0, 0, 0, 1, 0, 0),
            (0, 0, 0, -1, 0, 0, 0),
            (0, 0, 1, 0, 0, 0, 0),
            (0, 0, 0, 0, 0, 0, 1),
            (0, 0, 0, 0, 0, 1, 0))


def so7_swap_matrix() -> Matrix:
    return Matrix.from_rows([[Q(x) for x in r] for r in SO7_SWAP], 7)


def g2_swap_matrix() -> Matrix:
    """An element of G2 in GL(V7) exchanging x2 and x5 (and negating x6).

    It is ``t * n`` with ``n = exp(x1) exp(-y1) exp(x1)`` and ``t`` the torus
    element with characters th on e1 and -th/6 on e2, where th^3 = -36.  No
    element over Q does this in the chosen basis normalization, so the
    entries live in Q(th).
    """
    from .builders import G2_V, V7_WEIGHTS, build_g2
    from .scalars import NumberField
    mla = build_g2().meta["matrices"]
    x1, y1 = mla.matrix("x1"), mla.matrix("y1")
    n = la.expm_nilpotent(x1) @ la.expm_nilpotent(y1.scaled(Q(-1))) @ la.expm_nilpotent(x1)
    th = NumberField((36, 0, 0, 1), "th").gen()
    a, b = th, -th / 6
    diag = [a ** V7_WEIGHTS[v][0] * b ** V7_WEIGHTS[v][1] for v in G2_V]
    t = Matrix.from_rows([[diag[i] if i == j else Q(0) for j in range(7)] for i in range(7)], 7)
    return t @ n


def component_action(g: SuperAlgebra, key: str) -> GroupElementAction:
    """Named component-group representatives used by the orbit catalog."""
    if key == "parity":
        return parity_action(g)
    if key in ("so7_swap", "so7_swap-"):
        return so7_element_action(g, so7_swap_matrix(), -1 if key.endswith("-") else 1, key)
    if key == "g2_swap":
        return g2_element_action(g, g2_swap_matrix(), key)
    raise KeyError(f"unknown component element {key!r}")
