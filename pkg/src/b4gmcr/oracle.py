"""Brute-force cross-check of ``stability.analyze``.

Everything here is recomputed from the definitions with dense boolean
matrices over the whole state space: move graphs pair by pair, legal
sequences as a matrix fixed point, stability by literal quantifiers.  No
code is shared with the reachability engine or the analyzer.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .b4 import MOVE_ALLOWED
from .errors import ModelError
from .model import ConflictModel
from .reachability import PolicyKind
from .stability import PARETO, Concept, analyze

DEFAULT_BOUND = 64


@dataclass(frozen=True)
class Discrepancy:
    concept: str
    dm: int | None
    state: int
    analyzed: bool
    expected: bool

    def __str__(self) -> str:
        who = "" if self.dm is None else f" dm={self.dm}"
        return f"{self.concept}{who} s{self.state}: analyze={self.analyzed} oracle={self.expected}"


def _move_matrix(model: ConflictModel, dm: int) -> np.ndarray:
    n = len(model.space)
    A = np.zeros((n, n), dtype=bool)
    policy = model.policy
    if policy.kind is PolicyKind.EXPLICIT:
        for s, targets in policy.adjacency.get(dm, {}).items():
            for t in targets:
                A[s - 1, t - 1] = True
        return A
    assignments = model.space.assignments
    for i, j in itertools.product(range(n), range(n)):
        if i == j:
            continue
        ok = True
        for opt, a, b in zip(model.options, assignments[i], assignments[j]):
            if opt.controller == dm:
                ok = (a, b) in opt.own_transitions
            elif policy.kind is PolicyKind.ENTAILMENT_DRIFT:
                ok = (a, b) in MOVE_ALLOWED
            else:
                ok = a == b
            if not ok:
                break
        A[i, j] = ok
    return A


def _legal_closure(steps: dict[int, np.ndarray], members) -> np.ndarray:
    """[s, t] true iff t follows s by a legal sequence of members' moves."""
    members = sorted(members)
    # by_last[i][s, t]: t reached from s with DM i making the final move
    by_last = {i: steps[i].copy() for i in members}
    changed = True
    while changed:
        changed = False
        for i in members:
            before = np.zeros_like(by_last[i])
            for j in members:
                if j != i:
                    before |= by_last[j]
            grown = by_last[i] | ((before.astype(np.int64) @ steps[i].astype(np.int64)) > 0)
            if (grown != by_last[i]).any():
                by_last[i] = grown
                changed = True
    return np.logical_or.reduce([by_last[i] for i in members])


def naive_verdicts(model: ConflictModel) -> tuple[dict, set]:
    """Return ({(concept, dm, state): bool}, pareto set) by exhaustive search."""
    n = len(model.space)
    dms = list(model.dm_ids)
    rank = {d: np.array([model.preference(d).tier_of(s) for s in range(1, n + 1)]) for d in dms}
    # better[d][x, y]: d strictly prefers x to y; geq[d][x, y]: x at least as good as y.
    better = {d: rank[d][:, None] < rank[d][None, :] for d in dms}
    geq = {d: rank[d][:, None] <= rank[d][None, :] for d in dms}
    move = {d: _move_matrix(model, d) for d in dms}
    ui = {d: move[d] & better[d].T for d in dms}

    def subsets(pool):
        pool = sorted(pool)
        return [frozenset(c) for k in range(1, len(pool) + 1) for c in itertools.combinations(pool, k)]

    everyone = frozenset(dms)
    reach_h = {h: _legal_closure(move, h) for h in subsets(everyone)}
    ui_h = {h: _legal_closure(ui, h) for h in subsets(everyone)}

    def ci(h, s):
        return [t for t in range(n) if reach_h[h][s, t] and all(better[i][t, s] for i in h)]

    out = {}
    for d, s in itertools.product(dms, range(n)):
        phi = [t for t in range(n) if geq[d][s, t]]
        others = everyone - {d}
        improve = [t for t in range(n) if ui[d][s, t]]
        out[Concept.NASH, d, s + 1] = len(improve) == 0
        out[Concept.GMR, d, s + 1] = all(any(reach_h[others][t, u] for u in phi) for t in improve)
        out[Concept.SMR, d, s + 1] = all(
            any(reach_h[others][t, u] and all(geq[d][s, v] for v in range(n) if move[d][u, v]) for u in phi)
            for t in improve
        )
        out[Concept.SEQ, d, s + 1] = all(any(ui_h[others][t, u] for u in phi) for t in improve)

        coalitions = [h for h in subsets(everyone) if d in h]
        out[Concept.CNASH, d, s + 1] = all(not ci(h, s) for h in coalitions)

        def holds(sanction):
            for h in coalitions:
                rest = everyone - h
                for t in ci(h, s):
                    if not rest or not any(sanction(h, rest, t, u) for u in phi):
                        return False
            return True

        out[Concept.CGMR, d, s + 1] = holds(lambda h, rest, t, u: reach_h[rest][t, u])
        out[Concept.CSMR, d, s + 1] = holds(
            lambda h, rest, t, u: reach_h[rest][t, u]
            and all(geq[d][s, v] for v in range(n) if reach_h[h][u, v])
        )
        out[Concept.CSEQ, d, s + 1] = holds(lambda h, rest, t, u: ui_h[rest][t, u])

    pareto = set()
    for s in range(n):
        dominated = any(
            t != s and all(geq[d][t, s] for d in dms) and any(better[d][t, s] for d in dms)
            for t in range(n)
        )
        if not dominated:
            pareto.add(s + 1)
    return out, pareto


def oracle_check(model: ConflictModel, bound: int = DEFAULT_BOUND) -> list[Discrepancy]:
    if len(model.space) > bound:
        raise ModelError(f"{len(model.space)} states exceed the oracle bound of {bound}")
    report = analyze(model)
    verdicts, pareto = naive_verdicts(model)
    found = []
    order = list(Concept)
    for (concept, d, s), expected in sorted(verdicts.items(), key=lambda kv: (order.index(kv[0][0]), kv[0][1], kv[0][2])):
        got = report.is_stable(concept, d, s)
        if got != expected:
            found.append(Discrepancy(str(concept), d, s, got, expected))
    for s in report.states:
        if (s in report.pareto) != (s in pareto):
            found.append(Discrepancy(PARETO, None, s, s in report.pareto, s in pareto))
    return found
