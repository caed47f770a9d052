from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from superz import linalg as la
from superz.builders import get_algebra
from superz.superalgebra import EVEN, ODD, BasisLabel, SuperAlgebra, parse_terms


def supercommutator(g, x, y):
    ax, ay = g.ad_matrix(x), g.ad_matrix(y)
    px, py = g.parity_of(x), g.parity_of(y)
    sign = -1 if px * py else 1
    return ax @ ay - (ay @ ax).scaled(sign)


@pytest.mark.parametrize("alg", ["d21", "g3", "f4"])
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_ad_is_a_representation(alg, data):
    g = get_algebra(alg)
    i = data.draw(st.integers(0, g.n - 1))
    j = data.draw(st.integers(0, g.n - 1))
    x, y = la.unit(g.n, i), la.unit(g.n, j)
    assert g.ad_matrix(g.bracket(x, y)) == supercommutator(g, x, y)


@given(st.integers(0, 30), st.integers(0, 30))
@settings(max_examples=60, deadline=None)
def test_graded_antisymmetry(i, j):
    g = get_algebra("g3")
    x, y = la.unit(g.n, i), la.unit(g.n, j)
    sign = 1 if g.parities[i] * g.parities[j] else -1
    assert g.bracket(x, y) == la.scale(sign, g.bracket(y, x))


def test_combination_grammar():
    g = get_algebra("g3")
    assert parse_terms("0") == []
    assert g.vector("0") == g.zero()
    v = g.vector("2*h1 + 3*h2 - 1/2*x1")
    assert g.format(v) == "2*h1 + 3*h2 - 1/2*x1"
    assert g.vector("-E") == la.scale(-1, g.vector("E"))
    with pytest.raises(Exception):
        g.vector("nonsense_name")


def test_aliases_resolve():
    g = get_algebra("f4")
    assert g.vector("R[e2,e1]") == la.scale(-1, g.vector("R[e1,e2]"))


def test_parity_of():
    g = get_algebra("d21")
    assert g.parity_of(g.vector("E1")) == EVEN
    assert g.parity_of(g.vector("v(1,1,1)")) == ODD
    assert g.parity_of(g.vector("E1 + v(1,1,1)")) is None


def test_even_odd_parts_and_closure():
    g = get_algebra("d21")
    assert g.even_part(g.whole()).dim() == 9
    assert g.odd_part(g.whole()).dim() == 8
    s = g.subalgebra_closure([g.vector("E1"), g.vector("F1")])
    assert s.dim() == 3 and g.is_closed(s)


def test_axiom_report_detects_broken_table():
    labels = [BasisLabel("a", EVEN), BasisLabel("b", EVEN)]
    bad = SuperAlgebra("bad", labels, {(0, 1): {0: Q(1)}, (1, 0): {0: Q(1)}})
    rep = bad.verify_axioms()
    assert not rep.ok and rep.antisymmetry
    good = SuperAlgebra("ok", labels, {(0, 1): {0: Q(1)}, (1, 0): {0: Q(-1)}})
    assert good.verify_axioms().ok


def test_eigenspace():
    g = get_algebra("d21")
    h = g.vector("H1")
    assert g.eigenspace(h, 2).contains(g.vector("E1"))
    assert g.eigenspace(h, -2).contains(g.vector("F1"))


def test_to_json_is_deterministic():
    g = get_algebra("g3")
    assert g.to_json() == g.to_json()
