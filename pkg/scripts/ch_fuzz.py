"""Cayley-Hamilton fuzzing: chi_M(M) == 0 on random matrices, with timings.

    python scripts/ch_fuzz.py --count 500 --max-n 8 --seed 0
"""
import argparse
import random
import time
from fractions import Fraction

from orzech import QQ, ZZ, Matrix, Zmod, cayley_hamilton_check


def draw(rng, ring):
    if ring == QQ:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    if ring == ZZ:
        return rng.randint(-9, 9)
    return rng.randrange(ring.modulus)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--moduli", type=int, nargs="*", default=[6, 7, 12])
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rings = [ZZ, QQ] + [Zmod(n) for n in args.moduli]
    failures = 0
    for ring in rings:
        start = time.perf_counter()
        for i in range(args.count):
            n = i % (args.max_n + 1)
            M = Matrix.from_rows(ring, [[draw(rng, ring) for _ in range(n)] for _ in range(n)], n)
            if not cayley_hamilton_check(M):
                failures += 1
                print(f"FAIL over {ring}: {M}")
        print(f"{str(ring):>6}: {args.count} matrices, n <= {args.max_n}, {time.perf_counter() - start:.2f}s")
    print("all zero" if not failures else f"{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
