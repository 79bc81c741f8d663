"""Compare the compiled and pure-Python reduction kernels.

Each workload runs in a fresh interpreter so that the kernel choice made at
import time (``CRITINF_PURE_PYTHON``) applies cleanly.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "cyclic4_gb": """
from critinf import QQ, PolyRing, Ideal
R = PolyRing(QQ, ("a", "b", "c", "d"))
a, b, c, d = R.gens
I = Ideal(R, [a+b+c+d, a*b+b*c+c*d+d*a, a*b*c+b*c*d+c*d*a+d*a*b, a*b*c*d-1])
I.groebner()
""",
    "katsura4_gb": """
from critinf import QQ, PolyRing, Ideal
R = PolyRing(QQ, ("u0", "u1", "u2", "u3", "u4"))
u = R.gens
eqs = [u[0] + 2*u[1] + 2*u[2] + 2*u[3] + 2*u[4] - 1]
for m in range(4):
    s = R.zero()
    for l in range(-4, 5):
        if 0 <= abs(l) <= 4 and 0 <= abs(m - l) <= 4:
            s = s + u[abs(l)] * u[abs(m - l)]
    eqs.append(s - u[m])
Ideal(R, eqs).groebner()
""",
    "briancon_crit": """
from critinf import QQ, PolyRing, analyze
R = PolyRing(QQ, ("x", "y"))
analyze(R.parse("3*y*(x*(x*y+1)+1)^3+3*(x*(x*y+1)+1)^2*(x*y+1)-5*(x*(x*y+1)+1)*(x*y+1)-(x*y+1)"))
""",
}

RUNNER = """
import json, time
t0 = time.perf_counter()
exec(compile({code!r}, "workload", "exec"))
t1 = time.perf_counter()
from critinf.groebner import BACKEND
print(json.dumps({{"backend": BACKEND, "seconds": t1 - t0}}))
"""


def run(code: str, pure: bool) -> dict:
    env = dict(os.environ)
    env["CRITINF_PURE_PYTHON"] = "1" if pure else "0"
    out = subprocess.run([sys.executable, "-c", RUNNER.format(code=code)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", choices=sorted(WORKLOADS))
    args = ap.parse_args(argv)
    names = [args.only] if args.only else list(WORKLOADS)
    print(f"{'workload':<16}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>9}")
    for name in names:
        py = min(run(WORKLOADS[name], True)["seconds"] for _ in range(args.repeat))
        res = [run(WORKLOADS[name], False) for _ in range(args.repeat)]
        if res[0]["backend"] != "cython":
            print(f"{name:<16}{py:>12.3f}{'n/a':>14}{'':>9}  (compiled kernels not built)")
            continue
        cy = min(r["seconds"] for r in res)
        print(f"{name:<16}{py:>12.3f}{cy:>14.3f}{py / cy:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
