"""Compare the compiled and pure-Python tree kernels.

    python3 benchmarks/bench_kernels.py [--degree 7] [--repeat 3]

Times the raw subset-sum coproduct over every one-variable tree of the given
degree, then an end-to-end primitivity check of H_n under each backend (run in
a subprocess so the backend is chosen at import).
"""

import argparse
import os
import subprocess
import sys
import timeit

from magmahopf._kernels import _pure
from magmahopf.magma import enumerate_monomials

try:
    from magmahopf._kernels import _core
except ImportError:
    _core = None

END_TO_END = (
    "import time; from magmahopf import hausdorff_component, is_primitive;"
    "t = time.perf_counter(); assert is_primitive(hausdorff_component({n}));"
    "print(time.perf_counter() - t)"
)


def kernel_time(mod, codes, repeat, max_right=-1):
    def run():
        for c in codes:
            mod.coproduct(c, max_right)
    return min(timeit.repeat(run, number=1, repeat=repeat))


def end_to_end(n, pure):
    env = dict(os.environ)
    if pure:
        env["MAGMAHOPF_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END.format(n=n)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=7)
    ap.add_argument("--hausdorff", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    codes = [t.code for t in enumerate_monomials(args.degree, (1, 2))]
    print(f"{len(codes)} two-variable trees of degree {args.degree}")
    for label, max_right in (("full coproduct", -1), ("half-degree part", args.degree // 2)):
        tp = kernel_time(_pure, codes, args.repeat, max_right)
        line = f"{label:18s} python {tp:8.3f}s"
        if _core is not None:
            tc = kernel_time(_core, codes, args.repeat, max_right)
            line += f"   cython {tc:8.3f}s   speedup {tp / tc:6.1f}x"
        print(line)

    n = args.hausdorff
    tp = end_to_end(n, pure=True)
    line = f"is_primitive(H_{n})  python {tp:8.3f}s"
    if _core is not None:
        tc = end_to_end(n, pure=False)
        line += f"   cython {tc:8.3f}s   speedup {tp / tc:6.1f}x"
    print(line)


if __name__ == "__main__":
    main()
