"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run ``python3 tests/test_acceptance.py`` (or pytest with ``-s``) to see the
lines as they are produced; a full pytest run repeats them in the terminal
summary.  A criterion whose reference value disagrees with the computation
prints FAIL and is marked as a strict xfail instead of being adjusted.
"""

import random
import sys
from fractions import Fraction as Q

import pytest

import conftest
from superz import builders, linalg as la
from superz.builders import get_algebra
from superz.centralizer import centralizer, centre_of, decompose_osp_module, grade, recognize_osp12
from superz.orbits import catalog, get_case
from superz.roots import mu, root_datum
from superz.scalars import ALPHA
from superz.superalgebra import parse_terms
from superz.theorems import (case_diagrams, centre_data, count_labels, verify_theorem1,
                             verify_theorem2, verify_theorem3)


def record(n: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    conftest.ACCEPTANCE_LINES[:] = [x for x in conftest.ACCEPTANCE_LINES
                                    if not x.startswith(f"CRITERION {n}:")] + [line]


def table_ge_ok(case, ge) -> bool:
    g = case.algebra
    basis = case.table("ge_basis")
    if basis == "all":
        return ge == g.whole()
    target = g.odd_part(ge) if case.table("ge_basis_part") == "odd" else ge
    ok = target == case.span(basis)
    even = case.table("ge_even_basis")
    if even == "E+so7":
        even = ["E"] + [lab.name for lab in g.labels[3:24]]
    if even is not None:
        ok &= g.even_part(ge) == case.span(even)
    return ok


# ---------------------------------------------------------------------------

def test_c01_axioms():
    algs = [("sl2", None), ("so7", None), ("g2", None), ("d21", None), ("d21", Q(2)),
            ("d21", Q(-3)), ("d21", Q(1, 2)), ("g3", None), ("f4", None)]
    bad = []
    for alg, a in algs:
        if not get_algebra(alg, a).verify_axioms().ok:
            bad.append(f"{alg}@{a}")
    ok = not bad
    record(1, ok, f"verify_axioms on {len(algs)} algebras" + (f", failing {bad}" if bad else ""))
    assert ok


def test_c02_spin_oracle():
    oracle, table = builders.clifford_oracle(), builders.spin_action()
    entries = [(nm, j) for nm in builders.SO7_NAMES for j in range(8)]
    mism = [(nm, j) for nm, j in entries if oracle[nm].column(j) != table[nm].column(j)]
    ok = len(entries) == 168 and not mism
    record(2, ok, f"Clifford oracle vs spin table on {len(entries)} entries, {len(mism)} differ")
    assert ok


def test_c03_so7_centralizers():
    so7 = get_algebra("so7")
    names = ["e(7)", "e(5,1^2)", "e(3^2,1)", "e(3,2^2)", "e(3,1^4)", "e(2^2,1^3)", "0"]
    dims = tuple(centralizer(so7, so7.vector(get_case("f4", n).e_text)).dim() for n in names)
    ok = dims == (3, 5, 7, 9, 11, 13, 21)
    record(3, ok, f"so(7) centralizer dims {dims}")
    assert ok


@pytest.mark.xfail(strict=True, reason="z(g^e) for E1+E2+E3 is <e, v(1,1,1)>, dim 2; "
                   "the reference (6,1) and span <e> are not attainable")
def test_c04_golden_d21():
    want = {"0": (17, 0), "E1": (11, 1), "E1+E2": (9, 1), "E1+E2+E3": (6, 1)}
    got, bad = {}, []
    for c in catalog("d21"):
        ge, z, _ = centre_data(c)
        got[c.name] = (ge.dim(), z.dim())
        if got[c.name] != want[c.name] or z != c.span(c.table("z_basis")) \
                or not table_ge_ok(c, ge):
            bad.append(c.name)
    ok = not bad
    record(4, ok, f"D(2,1;a) (dim g^e, dim z) = {list(got.values())}"
           + (f"; differs from reference at {bad}" if bad else ""))
    assert ok


def test_c05_golden_g3():
    bad = []
    for c in catalog("g3"):
        ge, z, _ = centre_data(c)
        if ge.dim() != c.table("dim_ge") or not table_ge_ok(c, ge) \
                or z != c.span(c.table("z_basis")):
            bad.append(c.name)
    c = get_case("g3", "E+(x1+x2)")
    z_special = centre_data(c)[1] == c.span(["e", "x6", "v1.e3"])
    d16 = centre_data(get_case("g3", "E+x2"))[0].dim() == 16
    ok = not bad and z_special and d16 and len(catalog("g3")) == 10
    record(5, ok, "G(3) 10 cases: g^e bases and z spans" + (f", failing {bad}" if bad else "")
           + f"; z(E+(x1+x2)) = <e,x6,v1.e3> {z_special}; dim g^(E+x2) = 16 {d16}")
    assert ok


def test_c06_golden_f4():
    bad = []
    for c in catalog("f4"):
        ge, z, _ = centre_data(c)
        if ge.dim() != c.table("dim_ge") or not table_ge_ok(c, ge) \
                or z != c.span(c.table("z_basis")):
            bad.append(c.name)
    c = get_case("f4", "e(7)")
    g = c.algebra
    ge, z, _ = centre_data(c)
    z7 = z == c.span(["e", "R[e1,e2]"])
    dims = {int(k): v.dim() for k, v in grade(g, ge, c.h).pieces.items()}
    gr = dims == {0: 5, 2: 1, 6: 3, 10: 1}
    ok = not bad and z7 and gr and len(catalog("f4")) == 14
    record(6, ok, "F(4) 14 cases: g^e bases and z spans" + (f", failing {bad}" if bad else "")
           + f"; z(e(7)) = <e(7), R[e1,e2]> {z7}; grading {dims}")
    assert ok


def test_c07_labels():
    bad, total = [], 0
    for alg in ("d21", "g3", "f4"):
        for c in catalog(alg):
            diags = case_diagrams(c)
            for fig, want in c.table("labels").items():
                total += 1
                got = tuple(diags[fig].labels)
                if got != tuple(want) or not set(got) <= {0, 1, 2}:
                    bad.append(f"{alg}:{c.name}:{fig}")
    ex = case_diagrams(get_case("g3", "E+x2"))
    ex_f4 = case_diagrams(get_case("f4", "e(7)"))
    spot = all(d.labels == (0, 0, 1) for d in ex.values()) and len(ex) == 3 \
        and all(d.labels == (0, 0, 2, 2) for d in ex_f4.values()) and len(ex_f4) == 3
    ok = not bad and spot
    record(7, ok, f"{total} (case, system) label sets" + (f", failing {bad}" if bad else "")
           + f"; G(3) E+x2 and F(4) e(7) spot checks {spot}")
    assert ok


def _worked_mu(alg, case, name, pairs):
    c = get_case(alg, case)
    d = root_datum(c.algebra)
    ws = next(w for w in c.table("worked_systems") if w["name"] == name)
    roots = [d.weight(r) for r in ws["roots"]]
    return tuple(mu(d, roots[i - 1], roots[j - 1]) for i, j in pairs)


def test_c08_mu_spot_checks():
    d21 = _worked_mu("d21", "E1+E2", "P1", [(2, 3)])
    f4 = _worked_mu("f4", "e(7)", "P1", [(1, 2), (1, 3), (2, 3), (3, 4)])
    g3 = _worked_mu("g3", "E+x2", "P2", [(1, 2), (2, 3)])
    ok = d21 == (ALPHA,) and f4 == (3, 2, 1, 2) and g3 == (1, 3)
    record(8, ok, f"mu: D(2,1;a) P1 mu23 = {d21[0]}; F(4) e(7) P1 {tuple(map(int, f4))}; "
           f"G(3) E+x2 P2 {tuple(map(int, g3))}")
    assert ok


def test_c09_theorem1():
    want = {("d21", "E1+E2"), ("g3", "x1+x2"), ("g3", "x2+x5"), ("f4", "E+e(5,1^2)"),
            ("f4", "E+e(3,1^4)"), ("f4", "e(7)"), ("f4", "e(3^2,1)"),
            ("d21", "0"), ("g3", "0"), ("f4", "0")}
    applicable, failed = set(), []
    for alg in ("d21", "g3", "f4"):
        for c in catalog(alg):
            t = verify_theorem1(c)
            if t.applicable:
                applicable.add((alg, c.name))
                if not t.passed:
                    failed.append(c.name)
    ok = applicable == want and not failed
    record(9, ok, f"Theorem 1 on {len(applicable)} cases with no label 1"
           + (f", failing {failed}" if failed else "")
           + ("" if applicable == want else f", applicable set {sorted(applicable)}"))
    assert ok


def test_c10_theorem2():
    n, failed = 0, []
    for alg in ("d21", "g3", "f4"):
        for c in catalog(alg):
            t = verify_theorem2(c)
            if t.applicable:
                n += 1
                if not t.passed:
                    failed.append(c.name)
    t = verify_theorem2(get_case("f4", "e(3^2,1)")).computed
    ex = (t["dim_ge"], t["dim_g0e0"], t["n2"]) == (18, 17, 1)
    ok = not failed and ex
    record(10, ok, f"Theorem 2 on {n} cases with a label 2" + (f", failing {failed}" if failed else "")
           + f"; F(4) e(3^2,1): {t['dim_ge']} - {t['dim_g0e0']} = {t['n2']}")
    assert ok


def test_c11_theorem3():
    failed, eps = [], set()
    n = 0
    for alg in ("d21", "g3", "f4"):
        for c in catalog(alg):
            n += 1
            t = verify_theorem3(c)
            if not t.passed:
                failed.append(f"{alg}:{c.name}")
            if c.eps:
                eps.add((alg, c.name, c.eps))
    eps_ok = eps == {("d21", "E1+E2+E3", -1), ("f4", "E+e(7)", -1)}
    ok = n == 28 and not failed and eps_ok
    record(11, ok, f"Theorem 3 on {n} cases" + (f", failing {failed}" if failed else "")
           + f"; eps = -1 exactly on {sorted((a, c) for a, c, _ in eps)}")
    assert ok


def _render(terms):
    parts = [("-" if c < 0 else "+", nm if abs(c) == 1 else f"{abs(c)}*{nm}") for c, nm in terms]
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return text + "".join(f" {s} {b}" for s, b in parts[1:])


def test_c12_mutation_sensitivity():
    rng = random.Random(20261014)
    results = []
    for which, load, build in (("p7", builders.load_p7, lambda t: builders.build_g3(p7_text=t)),
                               ("p8", builders.load_p8, lambda t: builders.build_f4(p8_text=t))):
        tab = load()
        for _ in range(6):
            key = rng.choice(tab.nonzero_cells())
            terms = parse_terms(tab.cells[key])
            k = rng.randrange(len(terms))
            terms[k] = (-terms[k][0], terms[k][1])
            caught = not build(tab.with_cell(key, _render(terms)).to_text()).verify_axioms().ok
            results.append((which, key, caught))
    missed = [r for r in results if not r[2]]
    ok = len(results) >= 10 and not missed
    record(12, ok, f"{len(results)} random single-sign flips in p7/p8, "
           f"{len(results) - len(missed)} detected by the axiom suite")
    assert ok


def test_c13_osp_recognition():
    ok_rec = []
    for alg, name in (("d21", "E1+E2"), ("g3", "E+x2"), ("f4", "e(7)")):
        c = get_case(alg, name)
        g = c.algebra
        piece = grade(g, centralizer(g, c.e), c.h).piece(0)
        rec = recognize_osp12(g, piece)
        want = [g.vector(w) for w in c.table("osp")["assignment"]]
        same = rec.ok and all(la.Subspace.span(g.n, [a]) == la.Subspace.span(g.n, [b])
                              for a, b in zip(rec.assignment, want))
        ok_rec.append(same)
    c = get_case("g3", "E+x2")
    g = c.algebra
    gr = grade(g, centralizer(g, c.e), c.h)
    u0 = recognize_osp12(g, gr.piece(0)).assignment[2]
    m1, m2 = decompose_osp_module(g, gr.piece(1), u0), decompose_osp_module(g, gr.piece(2), u0)
    ok = all(ok_rec) and m1 == [3] and m2 == [0, 1]
    record(13, ok, f"osp(1|2) recognised with reference generators {ok_rec}; "
           f"g^(E+x2)(1) = {m1}, g^(E+x2)(2) = {m2}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
