"""Conflict description: decision makers, options, states and preferences."""
from __future__ import annotations

import dataclasses
import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .b4 import B, F, N, T, TruthValue, from_binary
from .errors import MissingPreferences, ModelError, ParseError
from .reachability import MovePolicy, PolicyKind

DEFAULT_STATE_CAP = 2**20


class Logic(enum.Enum):
    BINARY = "binary"
    B4 = "b4"

    @property
    def digits(self) -> tuple[TruthValue, ...]:
        # Per-position digit order: T, F, then N, B in B4.
        return (T, F) if self is Logic.BINARY else (T, F, N, B)


IDENTITY = frozenset((v, v) for v in TruthValue)
ALL_PAIRS = frozenset(itertools.product(TruthValue, TruthValue))


class Reversibility(enum.Enum):
    REVERSIBLE = "reversible"
    IRREVERSIBLE_SET = "irreversible-set"
    IRREVERSIBLE_CLEAR = "irreversible-clear"

    @property
    def transitions(self) -> frozenset:
        if self is Reversibility.IRREVERSIBLE_SET:
            return IDENTITY | {(F, T)}
        if self is Reversibility.IRREVERSIBLE_CLEAR:
            return IDENTITY | {(T, F)}
        return ALL_PAIRS


@dataclass(frozen=True)
class DecisionMaker:
    id: int
    name: str


@dataclass(frozen=True)
class OptionDef:
    key: str
    controller: int
    label: str = ""
    own_transitions: frozenset = ALL_PAIRS

    @classmethod
    def make(cls, key, controller, label="", reversibility=Reversibility.REVERSIBLE):
        return cls(key, controller, label, Reversibility(reversibility).transitions)

    @property
    def reversibility(self) -> Reversibility | None:
        for r in Reversibility:
            if r.transitions == self.own_transitions:
                return r
        return None


@dataclass(frozen=True)
class State:
    id: int
    assignment: tuple[TruthValue, ...]

    def __str__(self) -> str:
        return f"s{self.id}"


@dataclass(frozen=True)
class StateSpace:
    states: tuple[State, ...]

    @classmethod
    def from_assignments(cls, assignments: Iterable[Sequence[TruthValue]]) -> "StateSpace":
        return cls(tuple(State(k, tuple(a)) for k, a in enumerate(assignments, start=1)))

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, sid: int) -> State:
        if not isinstance(sid, int) or not 1 <= sid <= len(self.states):
            raise ModelError(f"unknown state id: {sid!r}")
        return self.states[sid - 1]

    def __contains__(self, sid) -> bool:
        return isinstance(sid, int) and 1 <= sid <= len(self.states)

    @property
    def ids(self) -> range:
        return range(1, len(self.states) + 1)

    @property
    def assignments(self) -> list[tuple[TruthValue, ...]]:
        return [st.assignment for st in self.states]

    @cached_property
    def _index(self) -> dict:
        index = {}
        for st in self.states:
            index.setdefault(st.assignment, st.id)
        return index

    def find(self, assignment: Sequence[TruthValue]) -> int | None:
        """Return the id of the state with this assignment, or None."""
        return self._index.get(tuple(assignment))


class Relation(enum.Enum):
    PREFERRED = "preferred"
    INDIFFERENT = "indifferent"
    DISPREFERRED = "dispreferred"


@dataclass(frozen=True)
class PreferenceOrder:
    """Weak order as a list of tiers; earlier tiers are strictly preferred."""

    dm: int
    tiers: tuple[frozenset, ...]

    @classmethod
    def from_tiers(cls, dm: int, tiers: Iterable[Iterable[int]]) -> "PreferenceOrder":
        return cls(dm, tuple(frozenset(t) for t in tiers))

    @classmethod
    def strict(cls, dm: int, ranking: Iterable[int]) -> "PreferenceOrder":
        return cls.from_tiers(dm, ([s] for s in ranking))

    @classmethod
    def from_scores(cls, dm: int, scores: Mapping[int, float]) -> "PreferenceOrder":
        """Higher score is better; equal scores tie."""
        ordered = sorted(set(scores.values()), reverse=True)
        return cls.from_tiers(dm, ([s for s in sorted(scores) if scores[s] == v] for v in ordered))

    @cached_property
    def rank(self) -> dict[int, int]:
        return {s: k for k, tier in enumerate(self.tiers) for s in tier}

    @property
    def states(self) -> frozenset:
        return frozenset(self.rank)

    def tier_of(self, s: int) -> int:
        try:
            return self.rank[s]
        except KeyError:
            raise ModelError(f"state s{s} not ranked by DM {self.dm}") from None

    def compare(self, a: int, b: int) -> Relation:
        ra, rb = self.tier_of(a), self.tier_of(b)
        if ra < rb:
            return Relation.PREFERRED
        if ra == rb:
            return Relation.INDIFFERENT
        return Relation.DISPREFERRED

    def prefers(self, a: int, b: int) -> bool:
        return self.tier_of(a) < self.tier_of(b)

    def at_most(self, s: int) -> frozenset:
        """States this DM likes equally or less than ``s``."""
        r = self.tier_of(s)
        return frozenset(x for x, k in self.rank.items() if k >= r)


@dataclass(frozen=True)
class ConflictModel:
    dms: tuple[DecisionMaker, ...]
    options: tuple[OptionDef, ...]
    logic: Logic
    space: StateSpace
    preferences: tuple[PreferenceOrder, ...] | None
    policy: MovePolicy = field(default_factory=lambda: MovePolicy(PolicyKind.FIXED_OTHERS))
    # Raw option-form columns (Y/N/-) when states were imported from binary form.
    option_form: tuple[tuple[str, ...], ...] | None = None

    @property
    def dm_ids(self) -> tuple[int, ...]:
        return tuple(d.id for d in self.dms)

    def dm(self, dm_id: int) -> DecisionMaker:
        for d in self.dms:
            if d.id == dm_id:
                return d
        raise ModelError(f"unknown DM: {dm_id!r}")

    def controlled_by(self, dm_id: int) -> tuple[int, ...]:
        """Option positions controlled by ``dm_id``."""
        return tuple(k for k, o in enumerate(self.options) if o.controller == dm_id)

    @property
    def has_preferences(self) -> bool:
        return self.preferences is not None

    def preference(self, dm_id: int) -> PreferenceOrder:
        if self.preferences is None:
            raise MissingPreferences("model has no preference orders")
        for p in self.preferences:
            if p.dm == dm_id:
                return p
        self.dm(dm_id)
        raise MissingPreferences(f"no preference order for DM {dm_id}")

    def with_policy(self, policy: MovePolicy) -> "ConflictModel":
        return dataclasses.replace(self, policy=policy)

    def with_preferences(self, preferences: Iterable[PreferenceOrder] | None) -> "ConflictModel":
        prefs = None if preferences is None else tuple(preferences)
        return dataclasses.replace(self, preferences=prefs)


def enumerate_states(options: Sequence[OptionDef], logic: Logic, cap: int = DEFAULT_STATE_CAP) -> StateSpace:
    """Full Cartesian state space; the last option varies fastest."""
    if not options:
        raise ModelError("at least one option is required")
    digits = Logic(logic).digits
    count = len(digits) ** len(options)
    if count > cap:
        raise ModelError(f"{count} states exceed the enumeration cap of {cap}")
    return StateSpace.from_assignments(itertools.product(digits, repeat=len(options)))


def restrict_states(space: StateSpace, keep: Iterable[Sequence[TruthValue]]) -> StateSpace:
    """Sub-space holding ``keep`` in the given order, renumbered from 1."""
    kept = []
    for assignment in keep:
        assignment = tuple(assignment)
        if space.find(assignment) is None:
            shown = "(" + ",".join(map(str, assignment)) + ")"
            raise ModelError(f"assignment {shown} is not in the state space")
        if assignment not in kept:
            kept.append(assignment)
    return StateSpace.from_assignments(kept)


def binary_to_b4(entries: Sequence[str] | str) -> tuple[TruthValue, ...]:
    if isinstance(entries, str):
        entries = entries.split()
    out = []
    for pos, e in enumerate(entries, start=1):
        try:
            out.append(from_binary(e))
        except ParseError:
            raise ParseError(f"position {pos}: expected Y, N or -, got {e!r}") from None
    return tuple(out)


def compare_preference(order: PreferenceOrder, a: int, b: int) -> Relation:
    return order.compare(a, b)


def phi_less_or_equal(order: PreferenceOrder, s: int) -> frozenset:
    return order.at_most(s)


@dataclass(frozen=True)
class Diagnostic:
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.where}: {self.message}"


def validate_model(model: ConflictModel) -> list[Diagnostic]:
    diags: list[Diagnostic] = []

    def err(where, msg):
        diags.append(Diagnostic(where, msg))

    ids = [d.id for d in model.dms]
    if len(ids) < 2:
        err("dm", f"at least 2 decision makers required, found {len(ids)}")
    if sorted(ids) != list(range(1, len(ids) + 1)):
        err("dm", f"ids must be unique and contiguous from 1, got {ids}")
    known_dms = set(ids)

    keys = [o.key for o in model.options]
    for key in sorted({k for k in keys if keys.count(k) > 1}):
        err(f"option {key}", "duplicate option key")
    for o in model.options:
        if o.controller not in known_dms:
            err(f"option {o.key}", f"controller {o.controller} is not a DM")
        if not IDENTITY <= o.own_transitions:
            err(f"option {o.key}", "own transitions must contain every identity pair")

    space = model.space
    if len(space) < 2:
        err("states", f"at least 2 states required, found {len(space)}")
    seen: dict = {}
    for k, st in enumerate(space.states, start=1):
        where = f"state s{st.id}"
        if st.id != k:
            err(where, f"expected id s{k}; ids must be 1-based and contiguous")
        if len(st.assignment) != len(model.options):
            err(where, f"assignment has {len(st.assignment)} values for {len(model.options)} options")
        if model.logic is Logic.BINARY:
            raw = model.option_form[k - 1] if model.option_form and k <= len(model.option_form) else None
            for pos, v in enumerate(st.assignment):
                wildcard = raw is not None and pos < len(raw) and raw[pos] == "-" and v is B
                if v not in (T, F) and not wildcard:
                    err(where, f"binary model holds {v} at position {pos + 1}")
        if st.assignment in seen:
            err(where, f"duplicate assignment, same as s{seen[st.assignment]}")
        else:
            seen[st.assignment] = st.id
    if model.option_form is not None:
        if len(model.option_form) != len(space):
            err("states", "option-form columns do not match the state count")
        else:
            for st, raw in zip(space.states, model.option_form):
                try:
                    ok = binary_to_b4(raw) == st.assignment
                except ParseError:
                    ok = False
                if not ok:
                    err(f"state s{st.id}", "option-form column disagrees with the assignment")

    all_states = set(space.ids)
    if model.preferences is not None:
        by_dm: dict[int, int] = {}
        for p in model.preferences:
            where = f"pref dm={p.dm}"
            if p.dm not in known_dms:
                err(where, "unknown DM")
            by_dm[p.dm] = by_dm.get(p.dm, 0) + 1
            listed: list[int] = []
            for tier in p.tiers:
                if not tier:
                    err(where, "empty tier")
                listed.extend(tier)
            unknown = sorted(set(listed) - all_states)
            if unknown:
                err(where, "unknown states " + ", ".join(f"s{s}" for s in unknown))
            repeated = sorted({s for s in listed if listed.count(s) > 1})
            if repeated:
                err(where, "states ranked more than once: " + ", ".join(f"s{s}" for s in repeated))
            missing = sorted(all_states - set(listed))
            if missing:
                err(where, "states not ranked: " + ", ".join(f"s{s}" for s in missing))
        for d in sorted(known_dms):
            if d not in by_dm:
                err(f"pref dm={d}", "missing preference order")
            elif by_dm[d] > 1:
                err(f"pref dm={d}", "more than one preference order")

    policy = model.policy
    if policy.kind is PolicyKind.EXPLICIT:
        for d, rows in policy.adjacency.items():
            if d not in known_dms:
                err(f"reach dm={d}", "unknown DM")
            for s, targets in rows.items():
                where = f"reach dm={d} s{s}"
                if s not in all_states:
                    err(where, "unknown source state")
                if s in targets:
                    err(where, "self-loop")
                bad = sorted(set(targets) - all_states)
                if bad:
                    err(where, "unknown target states " + ", ".join(f"s{t}" for t in bad))
    elif policy.adjacency:
        err("reach", f"adjacency rows given but policy is {policy.kind.value}")
    return diags
