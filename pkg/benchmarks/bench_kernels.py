"""Time the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``. Both backends are imported
directly, so the environment switch does not matter here.
"""

import argparse
import timeit

from cubicpcf import _pykernels
from cubicpcf.cf import euler_to_cf
from cubicpcf.exact import Poly, sturm_sequence
from cubicpcf.series import s_series

try:
    from cubicpcf import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _cf_case(depth):
    a, b = euler_to_cf(s_series(189)).coefficients(depth)
    return [int(x) for x in a], [int(x) for x in b]


def _sturm_case():
    p = Poly((189, -189, 0, 1))
    polys = [s.integer_coeffs() for s in sturm_sequence(p)]
    return polys, p.integer_coeffs()


def cases(depth):
    a, b = _cf_case(depth)
    polys, coeffs = _sturm_case()
    return {
        f"cf_final depth {depth}": lambda k: k.cf_final(a, b),
        f"cf_recurrence depth {depth}": lambda k: k.cf_recurrence(a, b),
        "sign_variations x1000": lambda k: [k.sign_variations(polys, n, 997) for n in range(-500, 500)],
        "bisect 2000 steps": lambda k: k.bisect(coeffs, 1, 2, 1, 2000),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    print(f"{'case':32}" + "".join(f"{name:>12}" for name in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label, fn in cases(args.depth).items():
        times = {}
        for name, mod in backends.items():
            assert fn(mod) == fn(_pykernels)
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{label:32}" + "".join(f"{t * 1e3:10.2f}ms" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / times['cython']:11.2f}x"
        print(row)


if __name__ == "__main__":
    main()
