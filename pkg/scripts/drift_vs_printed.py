"""Row-by-row difference between the entailment drift rule and the printed
reachable lists of the nine-state Prisoner's Dilemma."""
from b4gmcr import MovePolicy, PolicyKind, Reachability, load_case


def fmt(states):
    return "{" + ",".join(str(s) for s in sorted(states)) + "}"


def main():
    printed = load_case("pd-b4-9")
    drift = Reachability(printed.with_policy(MovePolicy(PolicyKind.ENTAILMENT_DRIFT)))
    table = Reachability(printed)
    print(f"{'row':<8}{'printed':<20}{'drift':<20}{'extra':<10}missing")
    for dm in printed.dm_ids:
        for s in printed.space.ids:
            p, d = table.reachable(dm, s), drift.reachable(dm, s)
            print(f"R{dm}(s{s})".ljust(8) + fmt(p).ljust(20) + fmt(d).ljust(20)
                  + (fmt(d - p) if d - p else "").ljust(10) + (fmt(p - d) if p - d else ""))


if __name__ == "__main__":
    main()
