"""Reachable lists, unilateral improvements and coalition moves.

Three move policies generate the per-DM graphs:

* ``FIXED_OTHERS`` -- classical option form: a DM changes only its own
  options, everyone else's stay put.
* ``ENTAILMENT_DRIFT`` -- the DM's own options follow their transition
  relation while every other option may drift along ``b4.MOVE_ALLOWED``.
* ``EXPLICIT`` -- adjacency rows given as data.

Coalition moves are legal sequences: chains of single-DM moves by members
in which nobody moves twice in a row.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Mapping

from .b4 import MOVE_ALLOWED
from .errors import ModelError

if TYPE_CHECKING:
    from .model import ConflictModel


class PolicyKind(enum.Enum):
    FIXED_OTHERS = "fixed"
    ENTAILMENT_DRIFT = "drift"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class MovePolicy:
    kind: PolicyKind
    # EXPLICIT only: dm -> state -> targets.  Empty rows are dropped.
    adjacency: Mapping[int, Mapping[int, frozenset]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "kind", PolicyKind(self.kind))
        clean = {}
        for dm, rows in self.adjacency.items():
            kept = {s: frozenset(t) for s, t in rows.items() if t}
            if kept:
                clean[dm] = kept
        object.__setattr__(self, "adjacency", clean)

    @classmethod
    def explicit(cls, adjacency: Mapping[int, Mapping[int, Iterable[int]]]) -> "MovePolicy":
        return cls(PolicyKind.EXPLICIT, adjacency)

    def row(self, dm: int, s: int) -> frozenset:
        return self.adjacency.get(dm, {}).get(s, frozenset())


class Reachability:
    """Per-run reachability with memoised rows.

    Rows are filled lazily; concurrent readers may race to fill the same
    entry but always store identical values.
    """

    def __init__(self, model: "ConflictModel"):
        self.model = model
        self._reach: dict = {}
        self._improve: dict = {}
        self._coalition: dict = {}
        self._owned = {d: set(model.controlled_by(d)) for d in model.dm_ids}

    def _check(self, dm: int, s: int):
        if dm not in self._owned:
            raise ModelError(f"unknown DM: {dm!r}")
        if s not in self.model.space:
            raise ModelError(f"unknown state: {s!r}")

    def reachable(self, dm: int, s: int) -> frozenset:
        key = (dm, s)
        if key not in self._reach:
            self._check(dm, s)
            self._reach[key] = self._compute(dm, s)
        return self._reach[key]

    def _compute(self, dm: int, s: int) -> frozenset:
        model = self.model
        policy = model.policy
        if policy.kind is PolicyKind.EXPLICIT:
            return policy.row(dm, s)
        owned = self._owned[dm]
        src = model.space[s].assignment
        drift = policy.kind is PolicyKind.ENTAILMENT_DRIFT
        out = set()
        for st in model.space:
            if st.id == s:
                continue
            for k, (a, b) in enumerate(zip(src, st.assignment)):
                if k in owned:
                    if (a, b) not in model.options[k].own_transitions:
                        break
                elif drift:
                    if (a, b) not in MOVE_ALLOWED:
                        break
                elif a is not b:
                    break
            else:
                out.add(st.id)
        return frozenset(out)

    def improvements(self, dm: int, s: int) -> frozenset:
        key = (dm, s)
        if key not in self._improve:
            pref = self.model.preference(dm)
            self._improve[key] = frozenset(t for t in self.reachable(dm, s) if pref.prefers(t, s))
        return self._improve[key]

    def _sequences(self, coalition, s: int, improving: bool) -> frozenset:
        members = tuple(sorted(set(coalition)))
        if not members:
            raise ModelError("coalition must be non-empty")
        key = (members, s, improving)
        if key in self._coalition:
            return self._coalition[key]
        step = self.improvements if improving else self.reachable
        for m in members:
            self._check(m, s)
        # Fixed point over (state, last mover) pairs.
        seen = set()
        frontier = [(s, None)]
        while frontier:
            cur, last = frontier.pop()
            for m in members:
                if m == last:
                    continue
                for t in step(m, cur):
                    if (t, m) not in seen:
                        seen.add((t, m))
                        frontier.append((t, m))
        result = frozenset(t for t, _ in seen)
        self._coalition[key] = result
        return result

    def coalition_reachable(self, coalition, s: int) -> frozenset:
        return self._sequences(coalition, s, improving=False)

    def coalition_ui_reachable(self, coalition, s: int) -> frozenset:
        return self._sequences(coalition, s, improving=True)

    def coalition_improvements(self, coalition, s: int) -> frozenset:
        prefs = [self.model.preference(i) for i in sorted(set(coalition))]
        return frozenset(
            t for t in self.coalition_reachable(coalition, s) if all(p.prefers(t, s) for p in prefs)
        )


def reachable(model, dm, s):
    return Reachability(model).reachable(dm, s)


def unilateral_improvements(model, dm, s):
    return Reachability(model).improvements(dm, s)


def coalition_reachable(model, coalition, s):
    return Reachability(model).coalition_reachable(coalition, s)


def coalition_ui_reachable(model, coalition, s):
    return Reachability(model).coalition_ui_reachable(coalition, s)


def coalition_improvements(model, coalition, s):
    return Reachability(model).coalition_improvements(coalition, s)


def export_graph(model: "ConflictModel", dm: int | None = None) -> str:
    """DOT digraph with one arc per (dm, s -> s') reachable pair."""
    engine = Reachability(model)
    movers = model.dm_ids if dm is None else (model.dm(dm).id,)
    lines = ["digraph gmcr {"]
    for st in model.space:
        values = " ".join(map(str, st.assignment))
        lines.append(f'  s{st.id} [label="s{st.id}\\n{values}"];')
    for st in model.space:
        for d in movers:
            name = model.dm(d).name
            for t in sorted(engine.reachable(d, st.id)):
                lines.append(f'  s{st.id} -> s{t} [label="{name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
