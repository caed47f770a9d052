import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def test_frozen_derived_values_are_current():
    """Weyl images and reduction witnesses in orbits.json match a fresh run."""
    res = subprocess.run([sys.executable, str(ROOT / "tools" / "freeze_derived.py"), "--check"],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stdout + res.stderr
