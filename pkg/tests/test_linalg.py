from fractions import Fraction as Q

from hypothesis import given, settings, strategies as st

from superz import linalg as la
from superz.linalg import Matrix, Subspace
from superz.scalars import ALPHA

entries = st.integers(-3, 3).map(Q)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, c)


@st.composite
def subspace_pair(draw, n=5):
    vec = st.lists(entries, min_size=n, max_size=n).map(tuple)
    a = draw(st.lists(vec, max_size=4))
    b = draw(st.lists(vec, max_size=4))
    return Subspace.span(n, a), Subspace.span(n, b)


@given(matrices())
@settings(max_examples=120, deadline=None)
def test_rank_nullity(m):
    ker = la.kernel(m)
    assert la.rank(m) + ker.dim() == m.cols
    for v in ker.basis:
        assert la.is_zero_vec(m.apply(v))


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_rref_idempotent_and_row_space(m):
    r = la.rref(m)
    assert la.rref(r) == r
    assert Subspace.span(m.cols, m.row_list()) == Subspace.span(m.cols, r.row_list())


@given(subspace_pair())
@settings(max_examples=120, deadline=None)
def test_intersection_dimension_formula(pair):
    a, b = pair
    s, i = a.sum(b), a.intersect(b)
    assert a.dim() + b.dim() == s.dim() + i.dim()
    assert a.contains_space(i) and b.contains_space(i)
    assert s.contains_space(a) and s.contains_space(b)


@given(subspace_pair())
@settings(max_examples=60, deadline=None)
def test_subspace_equality_is_canonical(pair):
    a, _ = pair
    shuffled = Subspace.span(a.ambient, list(reversed(a.basis)) + [la.add(*a.basis[:2])]
                             if a.dim() >= 2 else a.basis)
    assert shuffled == a and hash(shuffled) == hash(a)


@given(matrices(4), st.lists(entries, min_size=4, max_size=4))
@settings(max_examples=80, deadline=None)
def test_solve(m, x):
    x = tuple(x[:m.cols]) + (Q(0),) * max(0, m.cols - len(x))
    b = m.apply(x)
    y = la.solve(m, b)
    assert y is not None and m.apply(y) == b


def test_solve_inconsistent():
    m = Matrix.from_rows([[1, 0], [0, 0]])
    assert la.solve(m, (Q(0), Q(1))) is None


def test_symbolic_kernel():
    m = Matrix.from_rows([[ALPHA, 1], [ALPHA * ALPHA, ALPHA]])
    ker = la.kernel(m)
    assert ker.dim() == 1
    assert la.is_zero_vec(m.apply(ker.basis[0]))


def test_inverse_and_expm():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert la.inverse(m) @ m == Matrix.identity(2)
    n = Matrix.from_rows([[0, 1], [0, 0]])
    assert la.expm_nilpotent(n) == Matrix.from_rows([[1, 1], [0, 1]])


def test_restrict():
    m = Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    s = Subspace.span(3, [(Q(0), Q(1), Q(0))])
    assert la.restrict(m, s) == Matrix.from_rows([[2]])
