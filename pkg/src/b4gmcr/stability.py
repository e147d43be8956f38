"""Individual and coalition stability, Pareto optimality, report assembly."""
from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from .errors import ModelError
from .model import ConflictModel, validate_model
from .reachability import Reachability


class Concept(enum.Enum):
    NASH = "Nash"
    GMR = "GMR"
    SMR = "SMR"
    SEQ = "SEQ"
    CNASH = "CNash"
    CGMR = "CGMR"
    CSMR = "CSMR"
    CSEQ = "CSEQ"

    def __str__(self) -> str:
        return self.value


INDIVIDUAL = (Concept.NASH, Concept.GMR, Concept.SMR, Concept.SEQ)
COALITIONAL = (Concept.CNASH, Concept.CGMR, Concept.CSMR, Concept.CSEQ)


class Analyzer:
    """Stability checks sharing one reachability cache."""

    def __init__(self, model: ConflictModel):
        for d in model.dm_ids:
            model.preference(d)
        self.model = model
        self.reach = Reachability(model)
        self.everyone = frozenset(model.dm_ids)

    def _phi(self, dm, s):
        return self.model.preference(dm).at_most(s)

    def _others(self, dm):
        return self.everyone - {dm}

    def nash(self, dm: int, s: int) -> bool:
        return not self.reach.improvements(dm, s)

    def gmr(self, dm: int, s: int) -> bool:
        phi = self._phi(dm, s)
        others = self._others(dm)
        return all(
            self.reach.coalition_reachable(others, s1) & phi
            for s1 in self.reach.improvements(dm, s)
        )

    def smr(self, dm: int, s: int) -> bool:
        phi = self._phi(dm, s)
        others = self._others(dm)
        return all(
            any(self.reach.reachable(dm, s2) <= phi
                for s2 in self.reach.coalition_reachable(others, s1) & phi)
            for s1 in self.reach.improvements(dm, s)
        )

    def seq(self, dm: int, s: int) -> bool:
        phi = self._phi(dm, s)
        others = self._others(dm)
        return all(
            self.reach.coalition_ui_reachable(others, s1) & phi
            for s1 in self.reach.improvements(dm, s)
        )

    def coalitions(self, dm: int):
        """Every coalition containing ``dm``, smallest first."""
        rest = sorted(self._others(dm))
        for k in range(len(rest) + 1):
            for extra in itertools.combinations(rest, k):
                yield frozenset((dm, *extra))

    def cnash(self, dm: int, s: int) -> bool:
        return not any(self.reach.coalition_improvements(h, s) for h in self.coalitions(dm))

    def _coalition_stable(self, dm, s, sanctions) -> bool:
        for h in self.coalitions(dm):
            moves = self.reach.coalition_improvements(h, s)
            if not moves:
                continue
            rest = self.everyone - h
            if not rest:
                return False
            if not all(sanctions(h, rest, s1) for s1 in moves):
                return False
        return True

    def cgmr(self, dm: int, s: int) -> bool:
        phi = self._phi(dm, s)
        return self._coalition_stable(
            dm, s, lambda h, rest, s1: bool(self.reach.coalition_reachable(rest, s1) & phi))

    def csmr(self, dm: int, s: int) -> bool:
        phi = self._phi(dm, s)
        return self._coalition_stable(
            dm, s, lambda h, rest, s1: any(
                self.reach.coalition_reachable(h, s2) <= phi
                for s2 in self.reach.coalition_reachable(rest, s1) & phi))

    def cseq(self, dm: int, s: int) -> bool:
        phi = self._phi(dm, s)
        return self._coalition_stable(
            dm, s, lambda h, rest, s1: bool(self.reach.coalition_ui_reachable(rest, s1) & phi))

    def check(self, concept: Concept, dm: int, s: int) -> bool:
        if s not in self.model.space:
            raise ModelError(f"unknown state: {s!r}")
        if dm not in self.everyone:
            raise ModelError(f"unknown DM: {dm!r}")
        return getattr(self, concept.name.lower())(dm, s)

    def pareto(self, s: int) -> bool:
        prefs = [self.model.preference(d) for d in sorted(self.everyone)]
        for t in self.model.space.ids:
            if t == s:
                continue
            if all(not p.prefers(s, t) for p in prefs) and any(p.prefers(t, s) for p in prefs):
                return False
        return True


def is_nash(model, dm, s):
    return Analyzer(model).check(Concept.NASH, dm, s)


def is_gmr(model, dm, s):
    return Analyzer(model).check(Concept.GMR, dm, s)


def is_smr(model, dm, s):
    return Analyzer(model).check(Concept.SMR, dm, s)


def is_seq(model, dm, s):
    return Analyzer(model).check(Concept.SEQ, dm, s)


def is_cnash(model, dm, s):
    return Analyzer(model).check(Concept.CNASH, dm, s)


def is_cgmr(model, dm, s):
    return Analyzer(model).check(Concept.CGMR, dm, s)


def is_csmr(model, dm, s):
    return Analyzer(model).check(Concept.CSMR, dm, s)


def is_cseq(model, dm, s):
    return Analyzer(model).check(Concept.CSEQ, dm, s)


def is_pareto_optimal(model, s):
    if s not in model.space:
        raise ModelError(f"unknown state: {s!r}")
    return Analyzer(model).pareto(s)


@dataclass(frozen=True)
class StabilityReport:
    states: tuple[int, ...]
    dms: tuple[int, ...]
    # concept -> state -> DMs for which the state is stable
    stable: Mapping[Concept, Mapping[int, frozenset]]
    equilibria: Mapping[Concept, frozenset]
    pareto: frozenset

    def is_stable(self, concept: Concept, dm: int, s: int) -> bool:
        return dm in self.stable[concept][s]


def analyze(model: ConflictModel, workers: int = 1) -> StabilityReport:
    diags = validate_model(model)
    if diags:
        raise ModelError("invalid model:\n" + "\n".join(map(str, diags)))
    analyzer = Analyzer(model)
    dms = model.dm_ids
    states = tuple(model.space.ids)

    def cell(s):
        stable = {c: frozenset(d for d in dms if analyzer.check(c, d, s)) for c in Concept}
        return s, stable, analyzer.pareto(s)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(cell, states))
    else:
        cells = [cell(s) for s in states]

    everyone = frozenset(dms)
    stable = {c: {s: row[c] for s, row, _ in cells} for c in Concept}
    equilibria = {c: frozenset(s for s in states if stable[c][s] == everyone) for c in Concept}
    pareto = frozenset(s for s, _, p in cells if p)
    return StabilityReport(states, dms, stable, equilibria, pareto)


class Mark(enum.Enum):
    BOTH = "both"
    ONLY_A = "onlyA"
    ONLY_B = "onlyB"
    NEITHER = "neither"


PARETO = "Pareto"


@dataclass(frozen=True)
class Comparison:
    # (state in A or None, state in B or None), B's states first.
    columns: tuple[tuple[int | None, int | None], ...]
    marks: Mapping[str, tuple[Mark, ...]]

    def mark(self, row: str, a: int | None = None, b: int | None = None) -> Mark:
        for k, (ca, cb) in enumerate(self.columns):
            if (a is None or ca == a) and (b is None or cb == b):
                return self.marks[row][k]
        raise KeyError((a, b))


def compare_reports(a: StabilityReport, b: StabilityReport, mapping: Mapping[int, int]) -> Comparison:
    """Per-state agreement of equilibrium sets; ``mapping`` sends A's ids to B's."""
    targets = list(mapping.values())
    if len(set(targets)) != len(targets):
        raise ModelError("state mapping is not injective")
    for sa, sb in mapping.items():
        if sa not in a.states or sb not in b.states:
            raise ModelError(f"mapping s{sa} -> s{sb} references an unknown state")
    inverse = {sb: sa for sa, sb in mapping.items()}
    columns = [(inverse.get(sb), sb) for sb in b.states]
    columns += [(sa, None) for sa in a.states if sa not in mapping]

    rows = {str(c): (a.equilibria[c], b.equilibria[c]) for c in Concept}
    rows[PARETO] = (a.pareto, b.pareto)
    marks = {}
    for name, (in_a, in_b) in rows.items():
        marks[name] = tuple(_mark(ca in in_a, cb in in_b) for ca, cb in columns)
    return Comparison(tuple(columns), marks)


def _mark(x: bool, y: bool) -> Mark:
    if x and y:
        return Mark.BOTH
    if x:
        return Mark.ONLY_A
    if y:
        return Mark.ONLY_B
    return Mark.NEITHER
