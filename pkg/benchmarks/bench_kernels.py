"""Compare the compiled and pure-Python search kernels on fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat 1]
"""

import argparse
import time

import numpy as np

from curvecolor import _backend, solvers
from curvecolor.graph import Graph, complete_graph
from curvecolor.kneser import build_kg, build_total_cg
from curvecolor.special import build_octahedron_graphs, build_sp


def random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    a = np.triu(rng.random((n, n)) < p, 1)
    return Graph([str(i) for i in range(n)], a | a.T)


G70 = random_graph(70, 0.5, 1)
G80 = random_graph(80, 0.3, 2)
G110 = random_graph(110, 0.9, 3)

WORKLOADS = [
    ("chromatic G(70, 0.5)", lambda: solvers.chromatic_number(G70)),
    ("clique G(110, 0.9)", lambda: solvers.clique_number(G110)),
    ("maximal independent sets G(80, 0.3)", lambda: solvers.maximal_independent_sets(G80)),
    ("homomorphisms KG(6,2) -> K4", lambda: solvers.homomorphisms(build_kg(6, 2), complete_graph(4))),
    ("chromatic KG(7,2)", lambda: solvers.chromatic_number(build_kg(7, 2))),
    ("chromatic KG(7,3)", lambda: solvers.chromatic_number(build_kg(7, 3))),
    ("chromatic octahedron C", lambda: solvers.chromatic_number(build_octahedron_graphs()[1])),
    ("clique KG(9,2)", lambda: solvers.clique_number(build_kg(9, 2))),
    ("maximal independent sets CG(12)", lambda: solvers.maximal_independent_sets(build_total_cg(12))),
    ("Petersen endomorphisms", lambda: solvers.endomorphisms(build_kg(5, 2))),
    ("isomorphism Sp(4) ~ KG(6,2)", lambda: solvers.find_isomorphism(build_sp(4), build_kg(6, 2))),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    backends = _backend.available()
    if "cython" not in backends:
        print("compiled kernels unavailable; timing the Python backend only")
    print(f"{'workload':38s}" + "".join(f"{b:>12s}" for b in backends) +
          ("     speedup" if len(backends) == 2 else ""))
    original = _backend.current()
    try:
        for name, fn in WORKLOADS:
            row = {}
            for b in backends:
                _backend.set_backend(b)
                row[b] = best_of(fn, args.repeat)
            line = f"{name:38s}" + "".join(f"{row[b]:11.4f}s" for b in backends)
            if len(backends) == 2:
                line += f"{row['python'] / row['cython']:11.1f}x"
            print(line)
    finally:
        _backend.set_backend(original)


if __name__ == "__main__":
    main()
