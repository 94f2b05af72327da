"""Timing comparison of the two Kauffman-bracket state-sum kernels.

Evaluates the bracket of torus-knot closures at several crossing counts
with the pure-numpy kernel and (when available) the numba kernel, and
prints a small table.  Run directly:

    python3 benchmarks/bench_bracket.py
"""

import time

from gordian._kernels import HAS_NUMBA, backend_name
from gordian.braid import BraidWord, braid_closure
from gordian.invariants import kauffman_bracket


def _time_once(d, backend: str) -> float:
    start = time.monotonic()
    kauffman_bracket(d, backend=backend)
    return time.monotonic() - start


def main() -> None:
    sizes = (11, 15, 17, 19, 21)
    backends = ["numpy"]
    if HAS_NUMBA:
        backends.append("numba")
        # Warm up the JIT so compile time is not billed to the first row.
        warm = braid_closure(BraidWord.from_letters((1,) * 3, 2))
        kauffman_bracket(warm, backend="numba")
    else:
        print("numba not installed; timing the numpy kernel only")
    print(f"default backend: {backend_name()}")
    print()

    header = "crossings" + "".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    for n in sizes:
        d = braid_closure(BraidWord.from_letters((1,) * n, 2))
        row = f"{d.n:>9}"
        times = {b: min(_time_once(d, b) for _ in range(3)) for b in backends}
        for b in backends:
            row += f"{times[b]:>11.3f}s"
        print(row)
    if HAS_NUMBA:
        print()
        n_big = sizes[-1]
        speedup = None
        d = braid_closure(BraidWord.from_letters((1,) * n_big, 2))
        t_np = min(_time_once(d, "numpy") for _ in range(3))
        t_nb = min(_time_once(d, "numba") for _ in range(3))
        if t_nb > 0:
            speedup = t_np / t_nb
        if speedup is not None:
            print(f"numba speedup at {n_big} crossings: {speedup:.1f}x")


if __name__ == "__main__":
    main()
