import json

import pytest

from superz.orbits import catalog, get_case
from superz.roots import label_diagram, root_datum
from superz.theorems import (LabelCounts, LabelError, count_labels, two_free_core, verify_all,
                             verify_case, verify_theorem1, verify_theorem2, verify_theorem3)


@pytest.mark.parametrize("alg", ["d21", "g3", "f4"])
def test_all_theorems_pass(alg):
    rep = verify_all(alg)
    assert rep.ok, rep.to_markdown()
    assert len(rep.entries) == 3 * len(catalog(alg))
    json.loads(rep.to_json())
    assert rep.to_markdown().count("\n") == len(rep.entries) + 2


def test_count_labels_and_core():
    c = get_case("f4", "e(7)")
    g = c.algebra
    d = root_datum(g)
    diag = label_diagram(g, d, "S4", c.systems()["S4"], c.h)
    assert count_labels(diag) == LabelCounts(2, 0, 2)
    core = two_free_core(diag)
    assert core.labels == (0, 0) and core.rank == 2


def test_label_error():
    c = get_case("f4", "e(7)")
    g = c.algebra
    d = root_datum(g)
    diag = label_diagram(g, d, "S4", c.systems()["S4"], tuple(2 * x for x in c.h))
    with pytest.raises(LabelError):
        count_labels(diag)


def test_applicability():
    assert verify_theorem1(get_case("g3", "E+x2")).applicable is False
    assert verify_theorem2(get_case("g3", "E+x2")).applicable is False
    t = verify_theorem2(get_case("f4", "e(3^2,1)"))
    assert t.passed and t.computed["dim_ge"] - t.computed["dim_g0e0"] == 1


def test_theorem3_eps():
    t = verify_theorem3(get_case("d21", "E1+E2+E3"))
    assert t.passed and t.computed["eps"] == -1 and t.computed["predicted"] == 1


def test_verify_case_order():
    assert [t.theorem for t in verify_case(get_case("d21", "0"))] == [1, 2, 3]
