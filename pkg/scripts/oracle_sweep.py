"""Cross-check analyze against the brute-force oracle on random models."""
import argparse
import time
from collections import Counter

from b4gmcr import Concept, PolicyKind, analyze, oracle_check
from b4gmcr.generate import random_model


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=500)
    ap.add_argument("--max-states", type=int, default=16)
    args = ap.parse_args()

    policies = list(PolicyKind)
    tally = Counter()
    start = time.perf_counter()
    for seed in range(args.seeds):
        model = random_model(seed, policy=policies[seed % 3], max_states=args.max_states)
        found = oracle_check(model)
        tally["discrepancies"] += len(found)
        for d in found[:3]:
            print(f"seed {seed}: {d}")
        report = analyze(model)
        for c in Concept:
            tally[c.value] += len(report.equilibria[c])
        tally["states"] += len(model.space)
    elapsed = time.perf_counter() - start
    print(f"{args.seeds} models, {tally['states']} states, {elapsed:.1f}s")
    print("equilibria found: " + ", ".join(f"{c.value}={tally[c.value]}" for c in Concept))
    print(f"discrepancies: {tally['discrepancies']}")


if __name__ == "__main__":
    main()
