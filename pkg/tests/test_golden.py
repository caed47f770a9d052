"""Regression against the frozen JSON tables in tests/golden/.

Regenerate with ``superz table <alg> --format json --out tests/golden/<alg>.json``
after an intended change, and review the diff.
"""

from pathlib import Path

import pytest

from conftest import reports
from superz.orbits import case_names
from superz.report import table_markdown, to_json

GOLDEN = Path(__file__).parent / "golden"
CASES = [(a, n) for a in ("d21", "g3", "f4") for n in case_names(a)]


@pytest.mark.parametrize("alg", ["d21", "g3", "f4"])
def test_table_matches_golden_bytes(alg):
    assert to_json(list(reports(alg))) == (GOLDEN / f"{alg}.json").read_text(encoding="utf-8")


@pytest.mark.parametrize("alg,name", CASES, ids=[f"{a}:{n}" for a, n in CASES])
def test_case_checks(alg, name):
    r = next(r for r in reports(alg) if r["case"] == name)
    bad = [k for k, v in r["checks"].items() if not v]
    assert not bad, bad
    assert r["dim_z"] == len(r["z_basis"])
    assert r["dim_fixed_z"] == len(r["fixed_z_basis"])
    assert r["dim_ge"] == r["dim_ge_even"] + r["dim_ge_odd"] == sum(r["graded_dims"].values())
    for d in r["diagrams"].values():
        assert set(d["labels"]) <= {"0", "1", "2"}


@pytest.mark.parametrize("alg", ["d21", "g3", "f4"])
def test_markdown_carries_json_numbers(alg):
    rs = reports(alg)
    rows = [ln for ln in table_markdown(list(rs)).splitlines() if ln.startswith("| ")][1:]
    assert len(rows) == len(rs)
    for row, r in zip(rows, rs):
        cells = [c.strip() for c in row.strip("|").split("|")]
        assert cells[0] == r["case"]
        assert int(cells[1]) == r["dim_ge"]
        assert int(cells[3]) == r["dim_z"]
        assert int(cells[4]) == r["dim_fixed_z"]
