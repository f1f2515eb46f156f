import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("path", DEMOS, ids=lambda p: p.stem)
def test_demo_runs(path):
    proc = subprocess.run([sys.executable, str(path)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr


def test_tour_script_passes():
    from etcs.dsl.cli import main

    assert main([str(DEMOS[0].parent / "tour.etcs")]) == 0
