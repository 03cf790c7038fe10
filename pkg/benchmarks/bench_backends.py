#!/usr/bin/env python3
"""Time the compiled kernel backend against the pure-Python reference.

Both backends produce bit-identical outputs (the test suite enforces this),
so the only question is speed.  Each workload is timed over a fixed number
of repetitions with the best of several rounds reported, and the outputs of
the two backends are compared before timing as a cheap guard against
benchmarking two different computations.

Usage:
    python3 benchmarks/bench_backends.py [--rounds 5] [--scale 1.0]
"""

import argparse
import math
import sys
import time

from chshbounds._kernels import available_backends, load_backend

SEED = 0x9E3779B97F4A7C15


def _unit(seed: int, index: int, backend) -> tuple[float, float, float]:
    u = backend.rng_u01(seed, 2 * index)
    v = backend.rng_u01(seed, 2 * index + 1)
    z = 2.0 * u - 1.0
    r = math.sqrt(max(0.0, 1.0 - z * z))
    phi = 2.0 * math.pi * v
    return (r * math.cos(phi), r * math.sin(phi), z)


def _hermitian4(backend):
    entries = [
        complex(backend.rng_u01(SEED, 100 + 2 * k) - 0.5, backend.rng_u01(SEED, 101 + 2 * k) - 0.5)
        for k in range(16)
    ]
    out = [0j] * 16
    for i in range(4):
        for j in range(4):
            out[4 * i + j] = entries[4 * i + j] + entries[4 * j + i].conjugate()
    return out


def _workloads(backend, scale: float):
    mv = (0.3, 0.1, -0.7, 0.2, 0.05, -0.4, 0.9, -0.2)
    mw = (-0.6, 0.8, 0.1, 0.3, -0.2, 0.7, 0.05, 0.4)
    herm = _hermitian4(backend)
    a = backend.spin_matrix(*_unit(SEED, 0, backend))
    b = backend.spin_matrix(*_unit(SEED, 1, backend))
    big = backend.kron2(a, b)
    psi = (0j, complex(1.0 / math.sqrt(2.0), 0.0), complex(-1.0 / math.sqrt(2.0), 0.0), 0j)
    weights = [0.125 * (k + 1) for k in range(8)]
    cum = [sum(weights[: k + 1]) / sum(weights) for k in range(8)]
    products = [1.0 if (k + j) % 2 else -1.0 for k in range(8) for j in range(4)]

    def reps(n: int) -> int:
        return max(1, int(n * scale))

    return [
        ("rng_u01", reps(200_000), lambda: backend.rng_u01(SEED, 12345)),
        ("gp8", reps(100_000), lambda: backend.gp8(mv, mw)),
        ("spin_matrix", reps(200_000), lambda: backend.spin_matrix(0.2, -0.5, 0.84)),
        ("kron2", reps(50_000), lambda: backend.kron2(a, b)),
        ("matmul 4x4", reps(20_000), lambda: backend.matmul(big, big, 4)),
        ("expectation 4x4", reps(50_000), lambda: backend.expectation(big, psi, 4)),
        ("eigvals 4x4", reps(5_000), lambda: backend.eigvals_hermitian(herm, 4)),
        ("lhv_mc_sums 1e4", reps(20), lambda: backend.lhv_mc_sums(cum, products, SEED, 0, 10_000)),
    ]


def _time(func, repetitions: int, rounds: int) -> float:
    best = math.inf
    for _ in range(rounds):
        start = time.perf_counter()
        for _ in range(repetitions):
            func()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rounds", type=int, default=5, help="timing rounds, best kept")
    parser.add_argument("--scale", type=float, default=1.0, help="repetition multiplier")
    args = parser.parse_args(argv)

    backends = available_backends()
    if "native" not in backends:
        print("native backend not built; benchmarking the reference alone", file=sys.stderr)
    modules = {name: load_backend(name) for name in backends}

    # Guard: identical outputs before timing anything.
    if len(backends) == 2:
        for (label, _, py_fn), (_, _, nat_fn) in zip(
            _workloads(modules["python"], args.scale),
            _workloads(modules["native"], args.scale),
        ):
            if py_fn() != nat_fn():
                print(f"backend outputs differ on {label!r}; refusing to time", file=sys.stderr)
                return 1

    header = f"{'workload':<18}{'reps':>9}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for row in zip(*(_workloads(modules[b], args.scale) for b in backends)):
        label, repetitions = row[0][0], row[0][1]
        times = [_time(func, repetitions, args.rounds) for (_, _, func) in row]
        line = f"{label:<18}{repetitions:>9}" + "".join(f"{t:>13.4f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
