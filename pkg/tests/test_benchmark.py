import runpy
from pathlib import Path

import pytest

from echkit import _backend

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_maxplus.py"


@pytest.mark.skipif(_backend.BACKEND != "cython", reason="compiled kernels not built")
def test_benchmark_smoke(capsys):
    mod = runpy.run_path(str(BENCH))
    assert mod["main"](["--balls", "3", "--kmax", "20", "--repeat", "1"]) == 0
    assert "speedup" in capsys.readouterr().out
