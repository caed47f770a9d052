from fractions import Fraction as Q

import pytest

from superz import linalg as la
from superz.builders import get_algebra
from superz.centralizer import (DecompositionError, GroupElementAction, centralizer,
                                centralizer_in, centre_of, component_action,
                                decompose_osp_module, decompose_sl2_module,
                                eigen_decomposition, fixed_points, grade, recognize_osp12)
from superz.linalg import Matrix
from superz.orbits import SL2Triple, get_case


def test_centralizer_of_zero_is_everything():
    g = get_algebra("g3")
    assert centralizer(g, g.zero()) == g.whole()


def test_centre_of_simple_algebra_vanishes():
    for alg in ("sl2", "so7", "g2", "d21", "g3", "f4"):
        g = get_algebra(alg)
        assert centre_of(g, g.whole()).dim() == 0


def test_centre_requires_subalgebra():
    g = get_algebra("d21")
    with pytest.raises(ValueError):
        centre_of(g, g.span([g.vector("E1"), g.vector("F1")]))


def test_centralizer_in():
    g = get_algebra("d21")
    s = g.span([g.vector(x) for x in ("E1", "H1", "F1", "E2")])
    assert centralizer_in(g, s, g.vector("E1")) == g.span([g.vector("E1"), g.vector("E2")])


def test_eigen_decomposition():
    m = Matrix.from_rows([[2, 1], [0, -3]])
    dec = eigen_decomposition(m)
    assert [(k, v.dim()) for k, v in dec.items()] == [(-3, 1), (2, 1)]
    with pytest.raises(DecompositionError):
        eigen_decomposition(Matrix.from_rows([[0, 1], [0, 0]]))


def test_grade_requires_invariance():
    g = get_algebra("d21")
    with pytest.raises(ValueError):
        grade(g, g.span([g.vector("E1 + F1")]), g.vector("H1"))


def test_sl2_decomposition_of_adjoint():
    g = get_algebra("sl2")
    t = SL2Triple(g.vector("E"), g.vector("H"), g.vector("F"))
    assert decompose_sl2_module(g, g.whole(), t) == [2]
    d = get_algebra("d21")
    t = SL2Triple(d.vector("E1"), d.vector("H1"), d.vector("F1"))
    # three copies of sl2 on g0 plus (2-dim) x 4 on g1
    assert decompose_sl2_module(d, d.whole(), t) == [0] * 6 + [1] * 4 + [2]


@pytest.mark.parametrize("alg,name", [("d21", "E1+E2"), ("g3", "E+x2"), ("f4", "e(7)")])
def test_osp_recognition_matches_assignment(alg, name):
    c = get_case(alg, name)
    g = c.algebra
    piece = grade(g, centralizer(g, c.e), c.h).piece(0)
    rec = recognize_osp12(g, piece)
    assert rec.ok
    for got, want in zip(rec.assignment, c.expected("osp")["assignment"]):
        assert la.Subspace.span(g.n, [got]) == la.Subspace.span(g.n, [g.vector(want)])


def test_osp_recognition_rejects():
    g = get_algebra("d21")
    rec = recognize_osp12(g, g.span([g.vector(x) for x in ("E1", "H1", "F1")]))
    assert not rec and "shape" in rec.reason


def test_osp_decomposition_e_x2():
    c = get_case("g3", "E+x2")
    g = c.algebra
    gr = grade(g, centralizer(g, c.e), c.h)
    u0 = recognize_osp12(g, gr.piece(0)).assignment[2]
    assert decompose_osp_module(g, gr.piece(1), u0) == [3]
    assert decompose_osp_module(g, gr.piece(2), u0) == [0, 1]


def test_parity_action_and_fixed_points():
    g = get_algebra("d21")
    p = component_action(g, "parity")
    assert fixed_points(g.whole(), [p]) == g.even_part(g.whole())


def test_non_automorphism_rejected():
    g = get_algebra("sl2")
    m = Matrix.from_rows([[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ValueError, match="automorphism"):
        GroupElementAction(g, m, "bad")


def test_so7_swap_signs_give_same_fixed_centre():
    for name in ("e(3^2,1)", "E+e(3^2,1)"):
        c = get_case("f4", name)
        g = c.algebra
        z = centre_of(g, centralizer(g, c.e))
        plus = fixed_points(z, [component_action(g, "parity"), component_action(g, "so7_swap")])
        minus = fixed_points(z, [component_action(g, "parity"), component_action(g, "so7_swap-")])
        assert plus == minus == c.span(["e"])
        assert z.dim() == 2


def test_g2_swap_exchanges_x2_x5():
    g = get_algebra("g3")
    a = component_action(g, "g2_swap")
    assert a.apply(g.vector("x2")) == g.vector("x5")
    assert a.apply(g.vector("x6")) == g.vector("-x6")


def test_unknown_component():
    with pytest.raises(KeyError):
        component_action(get_algebra("g3"), "nope")
