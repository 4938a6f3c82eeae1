"""The compiled and pure-Python scans must agree exactly."""

from __future__ import annotations

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from invconj import _kernels, catalog
from invconj._kernels import _pykernels as py
from invconj.charts import _encoded, partial_injections
from invconj.table import s1_data

ck = pytest.importorskip("invconj._kernels._ckernels")

TABLES = list(catalog.theorem_corpus().values()) + [
    catalog.coset_monoid(catalog.cyclic_group(4)),
    catalog.brandt_b2().with_identity,
]


@pytest.mark.skipif(bool(os.environ.get("INVCONJ_PURE_PYTHON")), reason="fallback forced by environment")
def test_backend_is_compiled():
    assert _kernels.BACKEND == "cython"


def test_pure_python_switch():
    code = "import invconj._kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"INVCONJ_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("t", TABLES, ids=lambda t: f"n{t.n}")
def test_conjugacy_scans_agree(t):
    T1, inv1, n = s1_data(t)
    assert (ck.conjugacy_matrix(T1, inv1, n) == py.conjugacy_matrix(T1, inv1, n)).all()
    assert (ck.n_conjugacy_matrix(T1, n) == py.n_conjugacy_matrix(T1, n)).all()
    for a in range(0, n, max(1, n // 5)):
        for b in range(n):
            assert sorted(ck.conjugators(T1, inv1, a, b)) == sorted(py.conjugators(T1, inv1, a, b))


def test_assoc_scan_agrees_on_random_magmas():
    rng = np.random.default_rng(7)
    for _ in range(30):
        n = int(rng.integers(1, 6))
        T = np.ascontiguousarray(rng.integers(0, n, size=(n, n)), dtype=np.intp)
        assert ck.assoc_violations(T, 100) == py.assoc_violations(T, 100)
    T = catalog.symmetric_inverse_monoid(2).table
    assert ck.assoc_violations(T, 100) == py.assoc_violations(T, 100) == []


def test_assoc_limit():
    T = np.array([[1, 0], [0, 0]], dtype=np.intp)
    assert len(ck.assoc_violations(T, 2)) == len(py.assoc_violations(T, 2)) == 2


def test_chart_scan_agrees():
    g = frozenset(range(1, 4))
    enc = _encoded(g)
    charts = partial_injections(g)
    for a in charts:
        for b in charts:
            ea, eb = enc.encode(a), enc.encode(b)
            assert list(ck.chart_conjugators(ea, eb, enc.taus, enc.tau_invs)) == \
                list(py.chart_conjugators(ea, eb, enc.taus, enc.tau_invs))


def test_benchmark_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 5 and all("python" in r and "cython" in r for r in rows)
