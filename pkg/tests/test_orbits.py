import pytest

from superz.builders import get_algebra
from superz.orbits import CatalogError, case_names, catalog, derive_f, get_case


@pytest.mark.parametrize("alg,n", [("d21", 4), ("g3", 10), ("f4", 14)])
def test_catalog_sizes_and_triples(alg, n):
    cases = catalog(alg)
    assert len(cases) == n
    assert [c.name for c in cases] == case_names(alg)
    for c in cases:
        assert c.triple.check(c.algebra) == []


def test_lookup_is_lenient():
    assert get_case("f4", "e(3^2,1)") is get_case("F4", "E3^2,1")
    assert get_case("g3", "E + (x1 + x2)").name == "E+(x1+x2)"
    assert get_case("f4", "R[e1,e2]").name == "e(2^2,1^3)"
    with pytest.raises(KeyError):
        get_case("g3", "x3")
    with pytest.raises(KeyError):
        catalog("e8")


def test_derive_f_errors():
    g = get_algebra("d21")
    with pytest.raises(CatalogError):
        derive_f(g, g.vector("E1"), g.vector("H2"))
    assert derive_f(g, g.zero(), g.zero()) == g.zero()


def test_expected_prefers_derived_override():
    c = get_case("d21", "E1+E2+E3")
    assert c.table("z_basis") == ["e"]
    assert c.expected("z_basis") == ["e", "v(1,1,1)"]
    assert [x["field"] for x in c.conflicts()] == ["z_basis"]


def test_alpha_specialised_catalog():
    cases = catalog("d21", 2)
    assert all(c.alpha == 2 for c in cases)
    assert cases[0].algebra is get_algebra("d21", 2)
    assert catalog("g3", 5)[0].alpha is None


def test_span_token_e():
    c = get_case("g3", "E+x2")
    assert c.span(["e"]) == c.algebra.span([c.e])
