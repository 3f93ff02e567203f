"""Compare the compiled and pure-Python squeeze kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--points 100]

Times the squeeze-map grid (v in {2,3,4}, c in {0.1,0.5,1}, r up to 10)
on each available backend and checks that both return the same profile.
"""
import argparse
import time

from yamabe_bounds import kernels


def run_grid(impl, radii, tol):
    out = []
    for v in (2, 3, 4):
        for c in (0.1, 0.5, 1.0):
            for r in radii:
                t, _, _, status = impl.invert_ball_volume(c, v, r, tol, 50)
                if status != 0:
                    raise RuntimeError(f"status {status} at v={v} c={c} r={r}")
                out.append(t)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--points", type=int, default=100, help="radii per (v, c) pair")
    parser.add_argument("--tol", type=float, default=1e-13)
    args = parser.parse_args(argv)

    radii = [10.0 * i / args.points for i in range(1, args.points + 1)]
    backends = kernels.available_backends()
    timings = {}
    results = {}
    for name, impl in sorted(backends.items()):
        best = float("inf")
        for _ in range(args.repeat):
            start = time.perf_counter()
            results[name] = run_grid(impl, radii, args.tol)
            best = min(best, time.perf_counter() - start)
        timings[name] = best

    n = 9 * len(radii)
    print(f"{'backend':<8} {'best of ' + str(args.repeat):>12} {'per eval':>12}")
    for name, t in sorted(timings.items()):
        print(f"{name:<8} {t:>11.4f}s {1e6 * t / n:>10.1f}us")
    if "cython" in timings:
        print(f"speedup  {timings['python'] / timings['cython']:.1f}x")
        drift = max(abs(a - b) / max(abs(b), 1e-300)
                    for a, b in zip(results["cython"], results["python"]))
        print(f"max relative difference between backends: {drift:.1e}")
    else:
        print("compiled backend not built; only the Python timing is shown")


if __name__ == "__main__":
    main()
