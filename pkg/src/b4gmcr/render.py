"""Plain-text and CSV views of stability reports and comparisons.

Single reports mark an equilibrium with ``x``.  Comparisons use ``=`` for an
equilibrium in both runs, ``A`` for the first run only and ``B`` for the
second run only.
"""
from __future__ import annotations

import csv
import io

from .stability import PARETO, Comparison, Concept, Mark, StabilityReport

ROWS = tuple(str(c) for c in Concept) + (PARETO,)
COMPARE_SYMBOL = {Mark.BOTH: "=", Mark.ONLY_A: "A", Mark.ONLY_B: "B", Mark.NEITHER: ""}


def _grid(header, rows, fmt):
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["concept", *header])
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    table = [["", *header], *rows]
    widths = [max(len(r[k]) for r in table) for k in range(len(table[0]))]
    lines = []
    for r in table:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_report(report: StabilityReport, fmt: str = "table") -> str:
    header = [f"s{s}" for s in report.states]
    rows = []
    for name in ROWS:
        marked = report.pareto if name == PARETO else report.equilibria[Concept(name)]
        rows.append([name, *("x" if s in marked else "" for s in report.states)])
    return _grid(header, rows, fmt)


def _column_label(a, b):
    if a is None:
        return f"B:s{b}"
    if b is None:
        return f"A:s{a}"
    return f"s{b}" if a == b else f"s{a}=s{b}"


def render_comparison(cmp: Comparison, fmt: str = "table") -> str:
    header = [_column_label(a, b) for a, b in cmp.columns]
    rows = [[name, *(COMPARE_SYMBOL[m] for m in cmp.marks[name])] for name in ROWS]
    return _grid(header, rows, fmt)


def render_states(model) -> str:
    return "".join(f"s{st.id} = " + " ".join(map(str, st.assignment)) + "\n" for st in model.space)


def render_reach(model, engine, dm=None) -> str:
    movers = model.dm_ids if dm is None else (dm,)
    out = []
    for d in movers:
        for s in model.space.ids:
            targets = "".join(f" s{t}" for t in sorted(engine.reachable(d, s)))
            out.append(f"dm={d} s{s} ->{targets}\n")
    return "".join(out)
