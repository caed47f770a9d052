"""Recompute and freeze the derived fields of src/superz/data/orbits.json.

For every case and every figure named in its ``labels`` record, the Weyl
group of the even part is searched for images w(Pi) of the figure's simple
system on which all labels alpha(h) are non-negative; the image whose labels
equal the recorded ones is frozen under ``systems``.  For cases with a label
2 the e0 witness is searched inside g0 (see ``superz.theorems.find_e0``) and
frozen under ``theorem2``.

Run from the repository root:  python3 tools/freeze_derived.py [--check]
With --check nothing is written; the exit status is 1 if the file is stale.
"""

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from superz import theorems as th  # noqa: E402
from superz.builders import get_algebra  # noqa: E402
from superz.centralizer import centralizer_in  # noqa: E402
from superz.roots import dominant_images, figure_system, root_datum  # noqa: E402

DATA = ROOT / "src" / "superz" / "data" / "orbits.json"


def freeze_case(alg_id, rec):
    g = get_algebra(alg_id)
    datum = root_datum(g)
    h = g.vector(rec["h"])
    labels = rec.get("derived", {}).get("labels", rec["labels"])
    systems = {}
    for fig, want in labels.items():
        images = dominant_images(g, datum, figure_system(alg_id, fig), h)
        hit = [img for img, lab in images if [int(x) for x in lab] == want]
        if not hit:
            raise SystemExit(f"{alg_id} {rec['name']} {fig}: no Weyl image carries labels {want}")
        systems[fig] = {"source": "derived", "roots": [datum.fmt(r) for r in hit[0]],
                        "dominant_images": len(images)}
    out = dict(rec)
    out["systems"] = systems
    fig = next((f for f, lab in labels.items() if 2 in lab), None)
    if fig is None:
        out.pop("theorem2", None)
        return out
    roots = [datum.weight(r) for r in systems[fig]["roots"]]
    lab = labels[fig]
    core = [r for r, a in zip(roots, lab) if a != 2]
    core_lab = [a for a in lab if a != 2]
    g0 = th.core_subalgebra(g, datum, core)
    h0 = th.core_h0(g, datum, core, core_lab)
    e0 = th.find_e0(g, datum, g0, h0)
    if e0 is None:
        raise SystemExit(f"{alg_id} {rec['name']}: no e0 witness in g0")
    t2 = dict(rec.get("theorem2", {"source": "derived"}))
    t2.update({"figure": fig, "e0": g.format(e0), "h0": g.format(h0),
               "dim_g0": g0.dim(), "witness": "derived"})
    if "dim_g0e0" not in t2:
        t2["dim_g0e0"] = centralizer_in(g, g0, e0).dim()
    out["theorem2"] = t2
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args(argv)
    data = json.loads(DATA.read_text())
    new = {a: [freeze_case(a, rec) for rec in cases] for a, cases in data.items()}
    text = json.dumps(new, indent=1, ensure_ascii=False) + "\n"
    if args.check:
        stale = text != DATA.read_text()
        print("stale" if stale else "up to date")
        return 1 if stale else 0
    DATA.write_text(text)
    print(f"wrote {DATA.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
