"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from cyclotomy import _purepy, cyclotomic, numtheory, polyring

try:
    from cyclotomy import _kernels
except ImportError:
    _kernels = None


def _phi_coeffs(n):
    return list(cyclotomic.phi_recursive(n).coeffs)


def kernel_cases():
    rng = random.Random(0)
    a = _phi_coeffs(1155)
    b = _phi_coeffs(1001)
    x3003 = [-1] + [0] * 3002 + [1]
    num = _purepy.poly_mul(a, b)
    u64 = [rng.getrandbits(64) | 1 for _ in range(20000)]
    semi = [rng.getrandbits(32) | 1 for _ in range(200)]
    return {
        "mul  Phi_1155 * Phi_1001": lambda k: k.poly_mul(a, b),
        "mul  dense x sparse binomial": lambda k: k.poly_mul(a, x3003),
        "div  (Phi_1155 Phi_1001) / Phi_1001": lambda k: k.poly_divrem(num, b),
        "mr64 20k random odd u64": lambda k: [k.is_prime_u64(v) for v in u64],
        "trial 200 random 32-bit": lambda k: [k.trial_divide(v) for v in semi],
    }


def end_to_end(k):
    """phi_recursive for every n <= 600, with the given kernels swapped in."""
    saved = polyring.kernels, numtheory.kernels
    polyring.kernels = numtheory.kernels = k
    try:
        for n in range(1, 601):
            cyclotomic.phi_recursive(n)
    finally:
        polyring.kernels, numtheory.kernels = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _purepy)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled extension not built; timing the fallback only")

    cases = dict(kernel_cases())
    cases["e2e  phi_recursive n <= 600"] = end_to_end
    header = f"{'case':40s}" + "".join(f"{name:>12s}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for label, fn in cases.items():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
                 for _, k in backends]
        row = f"{label:40s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
