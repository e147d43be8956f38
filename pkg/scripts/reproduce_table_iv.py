"""Stability grid for the nine-state B4 Prisoner's Dilemma, and its comparison
with the classical four-state game (= both, A binary only, B B4 only)."""
from b4gmcr import analyze, compare_reports, load_case
from b4gmcr.render import render_comparison, render_report


def main():
    b4 = analyze(load_case("pd-b4-9"))
    binary = analyze(load_case("pd-binary"))
    print("B4, nine states\n")
    print(render_report(b4))
    print("binary (A) vs B4 (B)\n")
    print(render_comparison(compare_reports(binary, b4, {1: 1, 2: 2, 3: 3, 4: 4})))


if __name__ == "__main__":
    main()
