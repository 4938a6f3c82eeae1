"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""

from __future__ import annotations

import argparse
import json
import timeit

from invconj import catalog
from invconj._kernels import _pykernels
from invconj.charts import _encoded, partial_injections
from invconj.table import s1_data

try:
    from invconj._kernels import _ckernels
except ImportError:
    _ckernels = None


def _cases():
    for name, t in (("I(3)", catalog.symmetric_inverse_monoid(3)),
                    ("I(4)", catalog.symmetric_inverse_monoid(4))):
        T1, inv1, n = s1_data(t)
        yield f"conjugacy_matrix {name}", lambda k, T1=T1, inv1=inv1, n=n: k.conjugacy_matrix(T1, inv1, n)
        yield f"n_conjugacy_matrix {name}", lambda k, T1=T1, n=n: k.n_conjugacy_matrix(T1, n)
    g = frozenset(range(1, 5))
    enc = _encoded(g)
    pairs = [(enc.encode(a), enc.encode(b)) for a in partial_injections(g)[:40] for b in partial_injections(g)[:40]]

    def scan(k):
        for ea, eb in pairs:
            k.chart_conjugators(ea, eb, enc.taus, enc.tau_invs)

    yield "chart_conjugators I(4) 40x40 pairs", scan


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    rows = []
    for label, fn in _cases():
        row = {"case": label}
        for bname, k in backends.items():
            row[bname] = min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"] if row["cython"] else float("inf")
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'case':40} {'python s':>10} {'cython s':>10} {'speedup':>8}")
        for r in rows:
            cy = f"{r['cython']:.4f}" if "cython" in r else "n/a"
            sp = f"{r['speedup']:.1f}x" if "speedup" in r else "n/a"
            print(f"{r['case']:40} {r['python']:10.4f} {cy:>10} {sp:>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
