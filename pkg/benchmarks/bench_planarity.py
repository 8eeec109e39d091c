"""Compare the compiled and pure-Python planarity kernels.

    python benchmarks/bench_planarity.py [--repeat N] [--seed S]

Times ``is_planar`` on random graphs and family graphs, and
``minimize_nonplanar`` (witness extraction) on nonplanar ones. Both kernels
must return identical answers; the script exits nonzero if they do not.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from skewcert.families import petersen, q_graph
from skewcert.graph import Graph, complete_graph, random_graph
from skewcert.planarity import available_kernels


def _lists(g: Graph) -> tuple[int, list[int], list[int]]:
    return g.vertex_count, [a for a, _ in g.edges], [b for _, b in g.edges]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    kernels = available_kernels()
    if "compiled" not in kernels:
        print("compiled kernel not built; only the Python kernel is available")
    rng = random.Random(args.seed)
    cases: list[tuple[str, list[Graph]]] = [
        ("random n=12 m=24 (x200)", [random_graph(12, 24, rng) for _ in range(200)]),
        ("random n=40 m=100 (x50)", [random_graph(40, 100, rng) for _ in range(50)]),
        ("Q_5(8)", [q_graph(5, 8)]),
        ("P(36,9)", [petersen(36, 9)]),
        ("P(52,13)", [petersen(52, 13)]),
    ]
    witness_cases: list[tuple[str, list[Graph]]] = [
        ("witness K7", [complete_graph(7)]),
        ("witness Q_4(4)", [q_graph(4, 4)]),
        ("witness P(36,9)", [petersen(36, 9)]),
    ]

    names = list(kernels)
    print(f"{'case':28s}" + "".join(f"{n:>14s}" for n in names) + ("     speed-up" if len(names) > 1 else ""))
    mismatch = False
    for label, graphs in cases + witness_cases:
        witness = label.startswith("witness")
        inputs = [_lists(g) for g in graphs]
        results = {}
        timings = {}
        for name, mod in kernels.items():
            if witness:
                def run(mod=mod):
                    return [mod.minimize_nonplanar(n, us, vs, list(range(len(us)))) for n, us, vs in inputs]
            else:
                def run(mod=mod):
                    return [mod.is_planar(n, us, vs) for n, us, vs in inputs]
            results[name] = run()
            timings[name] = _time(run, args.repeat)
        if len({repr(r) for r in results.values()}) != 1:
            mismatch = True
        row = f"{label:28s}" + "".join(f"{timings[n] * 1e3:11.2f} ms" for n in names)
        if len(names) > 1:
            row += f"  {timings['python'] / timings['compiled']:9.1f}x"
        print(row)
    if mismatch:
        print("kernels disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
