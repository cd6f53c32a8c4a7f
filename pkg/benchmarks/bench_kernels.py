"""Compiled vs pure-Python b-weight kernels on exhaustive-verification workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from bsymbol import kernels
from bsymbol.bounds import verify_construction
from bsymbol.codes import Code, derive_params

WORKLOADS = [
    # (p, f, s, e, variant)
    (2, 1, 8, 1, "full"),
    (2, 1, 10, 1, "full"),
    (3, 1, 6, 2, "full"),
    (5, 1, 4, 4, "shortened"),
    (2, 2, 5, 3, "full"),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backs = {m.BACKEND: m for m in kernels.available_backends()}
    if "cython" not in backs:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'workload':<24}{'K x n':>14}{'|b|':>6}" + "".join(f"{k:>12}" for k in backs)
          + ("    speedup" if len(backs) > 1 else ""))
    for p, f, s, e, variant in WORKLOADS:
        P = derive_params(p, f, s, e)
        code = Code(P, variant)
        mat = code.matrix
        bs = list(range(2, min(code.length, 12)))
        times = {}
        for name, mod in backs.items():
            times[name] = best_of(lambda: [kernels.b_weights(mat, b, backend=mod) for b in bs],
                                  args.repeat)
        label = f"q={P.q} s={s} e={e} {variant[:5]}"
        row = f"{label:<24}{f'{P.K} x {code.length}':>14}{len(bs):>6}"
        row += "".join(f"{times[k] * 1e3:>10.1f}ms" for k in backs)
        if len(backs) > 1:
            row += f"{times['python'] / times['cython']:>10.1f}x"
        print(row)

    print("\nend-to-end verify_construction (theorem range + b = s..s+2):")
    for p, f, s, e, variant in WORKLOADS[:3]:
        P = derive_params(p, f, s, e)
        bs = list(range(2, s + 3))
        for name, mod in backs.items():
            t = best_of(lambda: verify_construction(P, variant, bs, backend=mod), 1)
            print(f"  q={P.q} s={s} e={e} {variant:<10} {name:<7} {t:.3f}s")


if __name__ == "__main__":
    main()
