"""Compare the compiled and pure-Python kernel backends on tiling balls.

    python benchmarks/bench_kernels.py [--preset sq5] [--radius 5] [--repeat 3]

Times the four hot loops used by wall construction and verification: the
all-pairs BFS, halfspace labelling, the unseparated-vertex mask and the
geodesic separation scan.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from evenwalls import kernels
from evenwalls.generators import preset_ball
from evenwalls.walls import WallSystem


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads(X, S: WallSystem):
    indptr, indices, arc_edge = X.csr
    D = X.distance_matrix
    walls = S.walls

    def bfs(mod):
        return lambda: mod.all_pairs_bfs(indptr, indices, X.n_vertices)

    def halfspaces(mod):
        def run():
            removed = np.zeros(X.n_edges, dtype=np.uint8)
            for W in walls:
                removed[list(W.dual_edges)] = 1
                mod.component_labels(indptr, indices, arc_edge, removed)
                removed[list(W.dual_edges)] = 0

        return run

    def unseparated(mod):
        return lambda: [mod.unseparated(S.side, int(S.anchor[W.id]), S.candidates(W.id)) for W in walls]

    def scan(mod):
        return lambda: [
            mod.geodesic_scan(
                D, indptr, indices, arc_edge, S.edge_wall, S.side, S.candidates(W.id),
                int(S.anchor[W.id]), S.nearest_endpoint[W.id],
            )
            for W in walls
        ]

    return {"all_pairs_bfs": bfs, "component_labels": halfspaces, "unseparated": unseparated, "geodesic_scan": scan}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--preset", default="sq5")
    ap.add_argument("--radius", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    X = preset_ball(args.preset, args.radius)
    S = WallSystem(X)
    mods = kernels.backends()
    print(f"{X.name}: V={X.n_vertices} E={X.n_edges} walls={len(S)}; backends: {', '.join(mods)}")
    header = f"{'kernel':<18}" + "".join(f"{name:>12}" for name in mods) + ("   speedup" if len(mods) > 1 else "")
    print(header)
    for label, make in workloads(X, S).items():
        times = {name: best_of(make(mod), args.repeat) for name, mod in mods.items()}
        row = f"{label:<18}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times.values())
        if "cython" in times:
            row += f"   {times['python'] / times['cython']:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
