#!/usr/bin/env python3
"""Time the numba and numpy enumeration backends against each other.

Usage:
    python3 benchmarks/bench_kernels.py [--repeat N]

Enumerates every valid dashing for the three small families and the
minimum pairwise distance of the resulting codeword sets, under both
backends, printing a timing table.  The first numba call includes JIT
compilation unless a disk cache is already warm, so everything is run
once untimed before measurement.
"""

import argparse
import os
import statistics
import time

from adinkra import build_chromotopology, count_valid_dashings, plaquettes
from adinkra._kernels import (
    HAS_NUMBA,
    enumerate_valid,
    min_pairwise_hamming,
)

FAMILIES = [
    ("square  n=2",        2, ()),
    ("cube    n=3",        3, ()),
    ("n=3 / 1111",         3, ("1111",)),
]


def family_masks(n, gens):
    skeleton = build_chromotopology(n, gens)
    index = {e: i for i, e in enumerate(skeleton.edges)}
    masks = [
        sum(1 << index[e] for e in p.edges) for p in plaquettes(skeleton)
    ]
    return masks, len(skeleton.edges)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times), statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    print(f"backends: {', '.join(backends)}   repeats: {args.repeat}")
    print(f"{'family':<14} {'kernel':<12} "
          + "".join(f"{b:>14}" for b in backends))

    for name, n, gens in FAMILIES:
        masks, n_bits = family_masks(n, gens)
        rows = {"enumerate": {}, "min-distance": {}}
        for backend in backends:
            os.environ["ADINKRA_BACKEND"] = backend
            enumerate_valid(masks, n_bits)  # warm-up / JIT
            best, _ = best_of(
                lambda: enumerate_valid(masks, n_bits), args.repeat
            )
            rows["enumerate"][backend] = best
            words = enumerate_valid(masks, n_bits)
            min_pairwise_hamming(words)
            best, _ = best_of(
                lambda: min_pairwise_hamming(words), args.repeat
            )
            rows["min-distance"][backend] = best
        for kernel, per_backend in rows.items():
            cells = "".join(
                f"{per_backend[b] * 1e3:>11.3f} ms" for b in backends
            )
            print(f"{name:<14} {kernel:<12} {cells}")

    os.environ.pop("ADINKRA_BACKEND", None)
    for name, n, gens in FAMILIES:
        skeleton = build_chromotopology(n, gens)
        print(f"count_valid_dashings({name.strip()}) = "
              f"{count_valid_dashings(skeleton)}")


if __name__ == "__main__":
    main()
