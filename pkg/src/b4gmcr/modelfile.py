"""Line-oriented model files.

Example::

    [logic] b4
    [dm] 1 DM1
    [dm] 2 DM2
    [option] p1 dm=1 "Not Confess" reversible
    [option] p2 dm=2 "Not Confess"
    [states] explicit
    s1 = T T
    s2 = F T
    [policy] explicit
    [reach] dm=1 s1 -> s2
    [pref] dm=1 : s2 > s1
    [pref] dm=2 : s1 = s2

Directives may appear in any order, with two exceptions: ``s<k> = ...``
lines are numbered in order, and ``[option]`` lines fix the position of each
option in a state vector.  Binary files write option values as Y/N; a ``-``
wildcard is accepted only together with a ``[states] b4-import`` directive,
which re-encodes every column into B4 (Y->T, N->F, -->B).
"""
from __future__ import annotations

import re
import shlex

from .b4 import F, T, TruthValue, to_binary
from .errors import ParseError
from .model import (
    ConflictModel,
    DecisionMaker,
    Logic,
    OptionDef,
    PreferenceOrder,
    Reversibility,
    StateSpace,
    binary_to_b4,
    enumerate_states,
)
from .reachability import MovePolicy, PolicyKind

_STATE = re.compile(r"s(\d+)$")
_DM = re.compile(r"dm=(\d+)$")
_BINARY = {"Y": T, "N": F}


def _state_id(tok: str, lineno: int) -> int:
    m = _STATE.match(tok)
    if not m:
        raise ParseError(f"line {lineno}: expected a state like s3, got {tok!r}")
    return int(m.group(1))


def _dm_id(tok: str, lineno: int) -> int:
    m = _DM.match(tok)
    if not m:
        raise ParseError(f"line {lineno}: expected dm=<id>, got {tok!r}")
    return int(m.group(1))


def parse_model(text: str) -> ConflictModel:
    logic = None
    dms: list[DecisionMaker] = []
    options: list[OptionDef] = []
    states_mode = None
    b4_import = False
    rows: list[tuple[int, int, list[str]]] = []
    policy = None
    reach: dict[int, dict[int, frozenset]] = {}
    prefs: list[PreferenceOrder] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        try:
            toks = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if not toks:
            continue
        head, args = toks[0], toks[1:]

        if _STATE.match(head):
            if len(args) < 1 or args[0] != "=":
                raise ParseError(f"line {lineno}: expected 's<k> = <values>'")
            rows.append((lineno, _state_id(head, lineno), args[1:]))
        elif head == "[logic]":
            if len(args) != 1 or args[0] not in ("binary", "b4"):
                raise ParseError(f"line {lineno}: [logic] takes binary or b4")
            logic = Logic(args[0])
        elif head == "[dm]":
            if len(args) < 2 or not args[0].isdigit():
                raise ParseError(f"line {lineno}: expected [dm] <id> <name>")
            dms.append(DecisionMaker(int(args[0]), " ".join(args[1:])))
        elif head == "[option]":
            if len(args) < 2:
                raise ParseError(f"line {lineno}: expected [option] <key> dm=<id> \"<label>\" [kind]")
            key, ctrl = args[0], _dm_id(args[1], lineno)
            label = args[2] if len(args) > 2 else ""
            kind = args[3] if len(args) > 3 else "reversible"
            if len(args) > 4:
                raise ParseError(f"line {lineno}: trailing tokens after option kind")
            try:
                rev = Reversibility(kind)
            except ValueError:
                raise ParseError(f"line {lineno}: unknown option kind {kind!r}") from None
            options.append(OptionDef.make(key, ctrl, label, rev))
        elif head == "[states]":
            if len(args) != 1 or args[0] not in ("enumerate", "explicit", "b4-import"):
                raise ParseError(f"line {lineno}: [states] takes enumerate, explicit or b4-import")
            if args[0] == "b4-import":
                b4_import = True
            else:
                states_mode = args[0]
        elif head == "[policy]":
            if len(args) != 1 or args[0] not in ("fixed", "drift", "explicit"):
                raise ParseError(f"line {lineno}: [policy] takes fixed, drift or explicit")
            policy = PolicyKind(args[0])
        elif head == "[reach]":
            if len(args) < 3 or args[2] != "->":
                raise ParseError(f"line {lineno}: expected [reach] dm=<id> s<k> -> s<a> ...")
            dm, src = _dm_id(args[0], lineno), _state_id(args[1], lineno)
            targets = frozenset(_state_id(t, lineno) for t in args[3:])
            reach.setdefault(dm, {})
            reach[dm][src] = reach[dm].get(src, frozenset()) | targets
        elif head == "[pref]":
            if len(args) < 3 or args[1] != ":":
                raise ParseError(f"line {lineno}: expected [pref] dm=<id> : s<a> > s<b> ...")
            prefs.append(_parse_chain(_dm_id(args[0], lineno), args[2:], lineno))
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")

    if logic is None:
        raise ParseError("missing [logic] directive")
    if states_mode is None:
        raise ParseError("missing [states] directive")
    if policy is None:
        policy = PolicyKind.EXPLICIT if reach else PolicyKind.FIXED_OTHERS
    option_form = None
    if states_mode == "enumerate":
        if rows:
            raise ParseError(f"line {rows[0][0]}: state rows given with [states] enumerate")
        if b4_import:
            raise ParseError("[states] b4-import needs explicit state rows")
        space = enumerate_states(options, logic)
    else:
        assignments = []
        columns = []
        for k, (lineno, sid, values) in enumerate(rows, start=1):
            if sid != k:
                raise ParseError(f"line {lineno}: state s{sid} out of order, expected s{k}")
            if b4_import:
                try:
                    assignments.append(binary_to_b4(values))
                except ParseError as exc:
                    raise ParseError(f"line {lineno}: {exc}") from None
                columns.append(tuple(values))
            else:
                assignments.append(tuple(_value(v, logic, lineno) for v in values))
        space = StateSpace.from_assignments(assignments)
        if b4_import:
            option_form = tuple(columns)

    return ConflictModel(
        dms=tuple(sorted(dms, key=lambda d: d.id)),
        options=tuple(options),
        logic=logic,
        space=space,
        preferences=tuple(prefs) if prefs else None,
        policy=MovePolicy(policy, reach),
        option_form=option_form,
    )


def _value(tok: str, logic: Logic, lineno: int) -> TruthValue:
    if logic is Logic.BINARY:
        if tok == "-":
            raise ParseError(f"line {lineno}: '-' requires a [states] b4-import directive")
        if tok not in _BINARY:
            raise ParseError(f"line {lineno}: binary value must be Y or N, got {tok!r}")
        return _BINARY[tok]
    try:
        return TruthValue.parse(tok)
    except ParseError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def _parse_chain(dm: int, toks: list[str], lineno: int) -> PreferenceOrder:
    tiers: list[list[int]] = [[]]
    expect_state = True
    for tok in toks:
        if expect_state:
            tiers[-1].append(_state_id(tok, lineno))
        elif tok == ">":
            tiers.append([])
        elif tok != "=":
            raise ParseError(f"line {lineno}: expected '>' or '=', got {tok!r}")
        expect_state = not expect_state
    if expect_state:
        raise ParseError(f"line {lineno}: preference chain ends with an operator")
    return PreferenceOrder.from_tiers(dm, tiers)


def serialize_model(model: ConflictModel) -> str:
    out = [f"[logic] {model.logic.value}"]
    out += [f"[dm] {d.id} {d.name}" for d in model.dms]
    for o in model.options:
        rev = o.reversibility
        if rev is None:
            raise ValueError(f"option {o.key} has transitions the file format cannot express")
        label = o.label.replace("\\", "\\\\").replace('"', '\\"')
        out.append(f'[option] {o.key} dm={o.controller} "{label}" {rev.value}')
    out.append("[states] explicit")
    for k, st in enumerate(model.space, start=1):
        if model.option_form is not None:
            values = model.option_form[k - 1]
        elif model.logic is Logic.BINARY:
            values = [to_binary(v) for v in st.assignment]
        else:
            values = [str(v) for v in st.assignment]
        out.append(f"s{st.id} = " + " ".join(values))
    if model.option_form is not None:
        out.append("[states] b4-import")
    out.append(f"[policy] {model.policy.kind.value}")
    if model.policy.kind is PolicyKind.EXPLICIT:
        for d in model.dm_ids:
            for s in model.space.ids:
                targets = sorted(model.policy.row(d, s))
                out.append(f"[reach] dm={d} s{s} ->" + "".join(f" s{t}" for t in targets))
    for p in model.preferences or ():
        chain = " > ".join(" = ".join(f"s{s}" for s in sorted(tier)) for tier in p.tiers)
        out.append(f"[pref] dm={p.dm} : {chain}")
    return "\n".join(out) + "\n"


def parse_mapping(text: str) -> dict[int, int]:
    """State-id map for comparisons, one ``s<a> -> s<b>`` per line."""
    mapping: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = shlex.split(raw, comments=True)
        if not toks:
            continue
        if len(toks) != 3 or toks[1] != "->":
            raise ParseError(f"line {lineno}: expected 's<a> -> s<b>'")
        a, b = _state_id(toks[0], lineno), _state_id(toks[2], lineno)
        if a in mapping:
            raise ParseError(f"line {lineno}: s{a} mapped twice")
        mapping[a] = b
    return mapping
