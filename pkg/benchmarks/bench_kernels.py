"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is run once per backend before timing so numba compilation is
not counted. Results of the two backends are compared before any timing.
"""
import argparse
import time

import numpy as np

from uhfk._kernels import backends
from uhfk.group import build_group
from uhfk.gset import build_gset


def cases():
    S5 = build_group("symmetric 5")
    Z = build_gset(S5, "coset {(01)}")  # 60 points
    cls = S5.class_of.astype(np.int64)
    einv = S5.elements[S5.inverse_index]
    prods = np.stack([S5.indices(einv[:, np.asarray(c.representative)]) for c in S5.classes]).astype(np.int64)
    rng = np.random.default_rng(0)
    p = 10007
    a = rng.integers(0, p, size=(120, 120)).astype(np.int64)
    perm12 = np.asarray([1, 2, 0, 4, 3, 5, 6, 7, 9, 8, 10, 11], dtype=np.int64)
    coeffs = np.array([5, 0, 3, 1], dtype=np.int64)
    return {
        "count_fixed_maps (12 points, k=3)": ("count_fixed_maps", (perm12, 3)),
        "orbit_labels (S5 on 60 cosets)": ("orbit_labels", (Z.action, Z.size)),
        "class_structure (S5)": ("class_structure", (cls, prods, len(S5.classes))),
        "rref_mod (120x120, p=10007)": ("rref_mod", (a, p)),
        "matmul_mod (120x120, p=10007)": ("matmul_mod", (a, a, p)),
        "poly_roots_mod (cubic, p=10007)": ("poly_roots_mod", (coeffs, p)),
    }


def _same(name, x, y):
    if isinstance(x, tuple):
        return all(_same(name, a, b) for a, b in zip(x, y))
    if name == "poly_roots_mod":  # root order is not part of the contract
        return np.array_equal(np.sort(x), np.sort(y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = backends()
    print(f"backends: {', '.join(mods)}")
    print(f"{'kernel':<40}" + "".join(f"{name:>12}" for name in mods) + f"{'speedup':>10}")
    for label, (name, argv) in cases().items():
        outs = {b: getattr(m, name)(*[x.copy() if isinstance(x, np.ndarray) else x for x in argv]) for b, m in mods.items()}
        ref = outs["numpy"]
        for b, out in outs.items():
            if not _same(name, out, ref):
                raise SystemExit(f"{label}: backend {b} disagrees with numpy")
        times = {}
        for b, m in mods.items():
            fn = getattr(m, name)
            best = float("inf")
            for _ in range(args.repeat):
                fresh = [x.copy() if isinstance(x, np.ndarray) else x for x in argv]
                t0 = time.perf_counter()
                fn(*fresh)
                best = min(best, time.perf_counter() - t0)
            times[b] = best
        speedup = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        print(f"{label:<40}" + "".join(f"{times[b] * 1e3:>10.3f}ms" for b in mods) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
