"""Per-case reports and full result tables (JSON and Markdown).

A case report bundles the computed quantities with a ``checks`` record that
compares each of them with the catalog's reference values.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor

from .centralizer import (DecompositionError, decompose_osp_module, grade,
                          recognize_osp12)
from .orbits import OrbitCase, catalog, get_case
from .scalars import format_scalar
from .theorems import case_diagrams, centre_data, verify_case

SCHEMA_VERSION = 1


def _names(g, space) -> list:
    return [g.format(v) for v in space.basis]


def _reference_ge(case: OrbitCase, ge) -> dict:
    """Compare g^e with the reference basis listing(s)."""
    g = case.algebra
    out = {}
    basis = case.expected("ge_basis")
    if basis == "all":
        out["ge_basis"] = ge == g.whole()
        return out
    part = case.expected("ge_basis_part", "all")
    target = g.odd_part(ge) if part == "odd" else ge
    out["ge_basis"] = target == case.span(basis)
    even = case.expected("ge_even_basis")
    if even == "E+so7":
        names = ["E"] + [lab.name for lab in g.labels[3:24]]
        out["ge_even_basis"] = g.even_part(ge) == case.span(names)
    elif even is not None:
        out["ge_even_basis"] = g.even_part(ge) == case.span(even)
    return out


def module_structure(case: OrbitCase, graded) -> dict | None:
    """osp(1|2) highest weights on each positive piece when g^e(0) is osp(1|2)."""
    g = case.algebra
    rec = recognize_osp12(g, graded.piece(0))
    if not rec:
        return None
    u0 = rec.assignment[2]
    out = {}
    for j, sp in graded.pieces.items():
        if j > 0:
            try:
                out[str(int(j))] = decompose_osp_module(g, sp, u0)
            except DecompositionError as exc:
                out[str(int(j))] = f"error: {exc}"
    return out


def case_report(case: OrbitCase, sample=None) -> dict:
    g = case.algebra
    ge, z, fz = centre_data(case)
    graded = grade(g, ge, case.h)
    dims = {str(int(j)): s.dim() for j, s in graded.pieces.items()}
    diagrams = case_diagrams(case, sample)
    modules = module_structure(case, graded)
    theorems = verify_case(case)
    checks = {"dim_ge": ge.dim() == case.expected("dim_ge")}
    checks.update(_reference_ge(case, ge))
    checks["z_basis"] = z == case.span(case.expected("z_basis"))
    checks["dim_fixed_z"] = fz.dim() == case.expected("fixed_z_dim")
    if case.expected("fixed_z_basis") is not None:
        checks["fixed_z_basis"] = fz == case.span(case.expected("fixed_z_basis"))
    want_labels = case.labels()
    checks["labels"] = all(tuple(int(x) for x in diagrams[k].labels) == tuple(v)
                           for k, v in want_labels.items())
    grading = case.expected("grading")
    if grading:
        checks["grading"] = all(dims.get(k) == v for k, v in grading["dims"].items())
    mods = case.expected("modules")
    if mods:
        checks["modules"] = modules is not None and all(
            modules.get(k) == sorted(v) for k, v in mods["pieces"].items())
    for t in theorems:
        if t.applicable:
            checks[f"theorem{t.theorem}"] = bool(t.passed)
    report = {
        "schema": SCHEMA_VERSION,
        "algebra": case.algebra_id,
        "case": case.name,
        "e": g.format(case.e),
        "h": g.format(case.h),
        "f": g.format(case.triple.f),
        "dim_ge": ge.dim(),
        "dim_ge_even": g.even_part(ge).dim(),
        "dim_ge_odd": g.odd_part(ge).dim(),
        "z_basis": _names(g, z),
        "dim_z": z.dim(),
        "fixed_z_basis": _names(g, fz),
        "dim_fixed_z": fz.dim(),
        "components": case.components,
        "graded_dims": dims,
        "modules": modules,
        "diagrams": {k: {"labels": [format_scalar(a) for a in d.labels],
                         "text": d.render(), "graph": d.to_graph()}
                     for k, d in diagrams.items()},
        "theorems": {str(t.theorem): {"applicable": t.applicable, "passed": t.passed,
                                      "computed": t.computed, "detail": t.detail}
                     for t in theorems},
        "conflicts": case.conflicts(),
        "checks": checks,
        "ok": all(checks.values()),
    }
    if case.alpha is not None:
        report["alpha"] = format_scalar(case.alpha)
    return report


def _job(args):
    alg_id, name, alpha = args
    return case_report(get_case(alg_id, name, alpha))


def table_report(alg_id: str, alpha=None, serial: bool = False) -> list:
    """Reports for all cases in catalog order."""
    jobs = [(alg_id, c.name, alpha) for c in catalog(alg_id, alpha)]
    if serial or len(jobs) < 2:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor() as pool:
        return list(pool.map(_job, jobs))


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _span(names) -> str:
    return "<" + ", ".join(names) + ">" if names else "{0}"


def case_markdown(r: dict) -> str:
    lines = [f"## {r['algebra']} {r['case']}", "",
             f"- e = {r['e']}", f"- h = {r['h']}", f"- f = {r['f']}",
             f"- dim g^e = {r['dim_ge']} ({r['dim_ge_even']}|{r['dim_ge_odd']})",
             f"- z(g^e) = {_span(r['z_basis'])}, dim {r['dim_z']}",
             f"- fixed centre = {_span(r['fixed_z_basis'])}, dim {r['dim_fixed_z']}",
             "- graded dims: " + ", ".join(f"{k}:{v}" for k, v in
                                             sorted(r["graded_dims"].items(),
                                                    key=lambda kv: int(kv[0])))]
    if r["modules"]:
        lines.append("- osp(1|2) modules: " + ", ".join(
            f"g^e({k}) = {v}" for k, v in sorted(r["modules"].items(), key=lambda kv: int(kv[0]))))
    lines += ["", "```"] + [d["text"] for _, d in sorted(r["diagrams"].items())] + ["```", ""]
    bad = [k for k, v in r["checks"].items() if not v]
    lines.append("checks: " + ("all pass" if not bad else "FAIL " + ", ".join(bad)))
    for c in r["conflicts"]:
        lines.append(f"- conflict on {c['field']}: tabulated {c['table']}, "
                     f"computed {c['derived']}")
    return "\n".join(lines) + "\n"


def table_markdown(reports: list) -> str:
    if not reports:
        return ""
    alg = reports[0]["algebra"]
    lines = [f"# {alg}", "",
             "| e | dim g^e | z(g^e) | dim z | fixed | labels | checks |",
             "|---|---|---|---|---|---|---|"]
    for r in reports:
        labels = "; ".join(f"{k}: {','.join(d['labels'])}" for k, d in sorted(r["diagrams"].items()))
        ok = "pass" if r["ok"] else "FAIL"
        lines.append(f"| {r['case']} | {r['dim_ge']} | {_span(r['z_basis'])} | {r['dim_z']} | "
                     f"{r['dim_fixed_z']} | {labels} | {ok} |")
    return "\n".join(lines) + "\n"


__all__ = ["case_report", "table_report", "case_markdown", "table_markdown", "to_json",
           "module_structure", "SCHEMA_VERSION"]
