"""Compare certificate outcomes with brute-force bijectivity on finite modules.

Draws random endomorphisms of finite Z-modules and of Z/n-modules, runs the
prover and verifier, and enumerates the induced map on the module.

    python scripts/oracle_agreement.py --count 500 --seed 1
"""
import argparse
import random
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from instances import enumerated_bijective, random_modn_hom, random_z_endomorphism  # noqa: E402

from orzech import inverse_hom, orzech_certify, verify_certificate  # noqa: E402
from orzech.errors import NotSurjective  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    stats = Counter()
    start = time.perf_counter()
    for i in range(args.count):
        family = "Z" if i % 2 == 0 else "Z/n"
        inst = random_z_endomorphism(rng) if family == "Z" else random_modn_hom(rng)
        bij = enumerated_bijective(inst)
        try:
            cert = orzech_certify(inst.hom)
            ok = bool(verify_certificate(inst.hom, cert))
            inverse_hom(inst.hom)
        except NotSurjective:
            ok = False
        stats[family, "agree" if ok == bij else "DISAGREE"] += 1
        stats[family, "bijective"] += bij
        stats["size", inst.finite.size] += 1
    elapsed = time.perf_counter() - start
    for family in ("Z", "Z/n"):
        print(f"{family:>4}: agree={stats[family, 'agree']} disagree={stats[family, 'DISAGREE']} "
              f"bijective={stats[family, 'bijective']}")
    sizes = sorted(k[1] for k in stats if k[0] == "size")
    print(f"module sizes {sizes[0]}..{sizes[-1]}, {elapsed:.2f}s")
    return 1 if stats["Z", "DISAGREE"] or stats["Z/n", "DISAGREE"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
