"""Time each bit kernel under the numba and numpy backends.

Usage: python3 benchmarks/bench_kernels.py [--n 20] [--repeat 5]

Both backends are imported side by side, so the environment flag does not
matter here. The first numba call (compilation) is excluded from timing.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from spcss import kernels
from spcss.cyclic import from_generator, Gf2Poly


def cases(n: int):
    x = kernels.all_words(n)
    y = kernels.rotate_left(x, n)
    H = from_generator(15, Gf2Poly.from_str("11111")).H.packed()
    v15 = kernels.all_words(15)
    G = from_generator(23, Gf2Poly.from_str("110001110101")).G.packed()
    return {
        "hamming_weights": lambda k: k.hamming_weights(x),
        "sp_weights": lambda k: k.sp_weights(x, n),
        "symplectic_weights": lambda k: k.symplectic_weights(x, y),
        "rotate_left": lambda k: k.rotate_left(x, n),
        "rotate_right": lambda k: k.rotate_right(x, n),
        "syndromes[15]": lambda k: k.syndromes(H, v15),
        "span_min_weights[23,12]": lambda k: k.span_min_weights(G, 23),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20, help="word length for the elementwise kernels (2^n words)")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = {name: kernels.get_backend(name) for name in ("numba", "numpy") if name in kernels.BACKENDS}
    table = cases(args.n)
    print(f"{'kernel':<26}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn in table.items():
        results = [np.asarray(fn(k)) for k in backends.values()]  # also warms numba
        assert all(np.array_equal(results[0], r) for r in results[1:]), f"{label}: backends disagree"
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for k in backends.values()]
        speedup = f"{times[-1] / times[0]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<26}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speedup)


if __name__ == "__main__":
    main()
