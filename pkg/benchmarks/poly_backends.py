"""Compare the compiled and pure-Python integer-polynomial backends.

Runs the same workloads in two subprocesses, one with WSH_PURE_POLY=1,
and reports wall times.  Usage: python3 benchmarks/poly_backends.py
"""

from __future__ import annotations

import os
import subprocess
import sys
import time

WORKLOADS = {
    "poly_gcd": """
import random
from wsh import _poly as P
rng = random.Random(7)
t = 0
for _ in range(300):
    a = tuple(rng.randint(-9, 9) for _ in range(12))
    b = tuple(rng.randint(-9, 9) for _ in range(10))
    c = tuple(rng.randint(-5, 5) for _ in range(5))
    g = P.pgcd(P.pmul(a, c), P.pmul(b, c))
    t ^= len(g)
""",
    "jack_basis": """
from wsh.field import RationalFunctionField
from wsh.symfunc import SymmetricFunctions
sym = SymmetricFunctions(RationalFunctionField())
for n in range(8):
    sym.jack_matrix(n)
""",
    "relation_check": """
from wsh.field import RationalFunctionField
from wsh.operators import OpContext
ctx = OpContext(RationalFunctionField(), 6)
assert ctx.check_relation("def3").status == "pass"
assert ctx.check_relation("def2", 3, 2).status == "pass"
""",
}


def run(code, pure):
    env = dict(os.environ)
    if pure:
        env["WSH_PURE_POLY"] = "1"
    else:
        env.pop("WSH_PURE_POLY", None)
    probe = "import wsh, sys; sys.stderr.write(wsh.POLY_BACKEND + '\\n')"
    started = time.monotonic()
    subprocess.run(
        [sys.executable, "-c", probe + "\n" + code], env=env, check=True
    )
    return time.monotonic() - started


def main():
    print("%-16s %12s %12s %8s" % ("workload", "compiled", "pure", "ratio"))
    for name, code in WORKLOADS.items():
        fast = run(code, pure=False)
        slow = run(code, pure=True)
        print(
            "%-16s %11.2fs %11.2fs %7.1fx"
            % (name, fast, slow, slow / fast if fast else float("inf"))
        )


if __name__ == "__main__":
    main()
