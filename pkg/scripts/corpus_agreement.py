"""Run the three minimisation routes and the path oracle over a seeded random
corpus and report any disagreement."""
import argparse
import random
import sys

from polyslcs.bisim import minimize_all
from polyslcs.gen import gen_random, random_formula
from polyslcs.logic import sat, sat_oracle, to_text


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=500)
    ap.add_argument("--max-elements", type=int, default=12)
    ap.add_argument("--formulas", type=int, default=5)
    args = ap.parse_args()

    bad = 0
    sizes = {}
    for seed in range(args.seeds):
        letters = 1 if seed % 10 == 0 else 2 + (seed // 2) % 2
        k = gen_random(seed, 2 + seed % (args.max_elements - 1), letters, 0.15 + 0.1 * (seed % 5))
        parts = minimize_all(k)
        ref = parts["direct"].as_sets()
        if any(p.as_sets() != ref for p in parts.values()):
            bad += 1
            print(f"seed {seed}: routes disagree", {m: len(p) for m, p in parts.items()})
        sizes[len(ref)] = sizes.get(len(ref), 0) + 1
        rng = random.Random(seed)
        for _ in range(args.formulas):
            f = random_formula(rng, sorted(k.valuation)[:2], 3)
            if sat(k, f) != sat_oracle(k, f, bound=None):
                bad += 1
                print(f"seed {seed}: checker and oracle differ on {to_text(f)}")
    print(f"{args.seeds} models, {bad} disagreements; classes per model: {dict(sorted(sizes.items()))}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
