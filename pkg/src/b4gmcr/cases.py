"""Built-in conflicts: Prisoner's Dilemma (binary and B4), Elmira, Russia-Ukraine.

Each case is constructed here in Python and also shipped as a model file
under ``data/``; the test suite checks that both agree.
"""
from __future__ import annotations

from importlib import resources

from .b4 import TruthValue
from .errors import ModelError
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

CASE_IDS = ("pd-binary", "pd-b4-16", "pd-b4-9", "elmira-binary", "elmira-b4", "russia-ukraine-b4")

_PD_DMS = (DecisionMaker(1, "DM1"), DecisionMaker(2, "DM2"))
_PD_OPTIONS = (
    OptionDef.make("p1", 1, "Not Confess"),
    OptionDef.make("p2", 2, "Not Confess"),
)


def _vec(text: str) -> tuple[TruthValue, ...]:
    return tuple(TruthValue(c) for c in text)


# Nine B4 states kept for the stability table, in its column order.
PD_B4_9_STATES = tuple(_vec(v) for v in ("TT", "FT", "TF", "FF", "TN", "FN", "TB", "FB", "NB"))

PD_B4_9_REACH = {
    1: {1: {2, 5, 6, 7, 8, 9}, 2: {1, 5, 6, 7, 8, 9}, 3: set(), 4: set(),
        5: {3, 4, 6}, 6: {3, 4, 5}, 7: {3, 4, 8, 9}, 8: {3, 4, 7, 9}, 9: {3, 4, 7, 8}},
    2: {1: {3, 5, 7}, 2: set(), 3: {1, 5, 7}, 4: set(),
        5: {1, 3, 7}, 6: set(), 7: {1, 3, 5}, 8: set(), 9: set()},
}

PD_B4_9_PREFS = {
    1: (2, 1, 4, 3, 8, 6, 7, 5, 9),
    2: (7, 8, 9, 5, 6, 3, 1, 4, 2),
}

# Cooperate = "not confess" selected.  Column order CC, DC, CD, DD.
PD_BINARY_STATES = ("Y Y", "N Y", "Y N", "N N")
PD_BINARY_PREFS = {1: (2, 1, 4, 3), 2: (3, 1, 4, 2)}
PD_BINARY_TO_B4 = {1: 1, 2: 2, 3: 3, 4: 4}

_ELMIRA_DMS = (DecisionMaker(1, "M"), DecisionMaker(2, "U"), DecisionMaker(3, "L"))
_ELMIRA_OPTIONS = (
    OptionDef.make("modify", 1, "Modify", Reversibility.IRREVERSIBLE_SET),
    OptionDef.make("delay", 2, "Delay", Reversibility.REVERSIBLE),
    OptionDef.make("accept", 2, "Accept", Reversibility.IRREVERSIBLE_SET),
    OptionDef.make("abandon", 2, "Abandon", Reversibility.IRREVERSIBLE_SET),
    OptionDef.make("insist", 3, "Insist", Reversibility.REVERSIBLE),
)

# Option-form columns s1..s9 (rows: modify, delay, accept, abandon, insist).
ELMIRA_COLUMNS = (
    "N Y N N N", "Y Y N N N", "N N Y N N", "Y N Y N N", "N Y N N Y",
    "Y Y N N Y", "N N Y N Y", "Y N Y N Y", "- - - Y -",
)
ELMIRA_B4_COLUMNS = (
    "FTFFF", "TTFFF", "FFTFF", "TFTFF", "FTFFT", "TTFFT", "FFTFT", "TFTFT", "BBBTB",
)

# M modifies irreversibly, U accepts irreversibly or abandons from anywhere,
# L insists or withdraws.
ELMIRA_REACH = {
    1: {1: {2}, 3: {4}, 5: {6}, 7: {8}},
    2: {1: {3, 9}, 2: {4, 9}, 3: {9}, 4: {9}, 5: {7, 9}, 6: {8, 9}, 7: {9}, 8: {9}},
    3: {1: {5}, 2: {6}, 3: {7}, 4: {8}, 5: {1}, 6: {2}, 7: {3}, 8: {4}},
}

RU_DMS = (DecisionMaker(1, "Russia"), DecisionMaker(2, "Ukraine"))
RU_OPTIONS = (OptionDef.make("attack_r", 1, "Attack"), OptionDef.make("attack_u", 2, "Attack"))
RU_FOCUS = _vec("TB")


def _prefs(table) -> tuple[PreferenceOrder, ...]:
    return tuple(PreferenceOrder.strict(dm, order) for dm, order in table.items())


def pd_binary() -> ConflictModel:
    space = StateSpace.from_assignments(
        tuple(TruthValue.T if v == "Y" else TruthValue.F for v in col.split()) for col in PD_BINARY_STATES
    )
    return ConflictModel(_PD_DMS, _PD_OPTIONS, Logic.BINARY, space, _prefs(PD_BINARY_PREFS),
                         MovePolicy(PolicyKind.FIXED_OTHERS))


def pd_b4_16() -> ConflictModel:
    space = enumerate_states(_PD_OPTIONS, Logic.B4)
    return ConflictModel(_PD_DMS, _PD_OPTIONS, Logic.B4, space, None,
                         MovePolicy(PolicyKind.ENTAILMENT_DRIFT))


def pd_b4_9() -> ConflictModel:
    space = StateSpace.from_assignments(PD_B4_9_STATES)
    return ConflictModel(_PD_DMS, _PD_OPTIONS, Logic.B4, space, _prefs(PD_B4_9_PREFS),
                         MovePolicy.explicit(PD_B4_9_REACH))


def elmira_binary() -> ConflictModel:
    space = StateSpace.from_assignments(binary_to_b4(c) for c in ELMIRA_COLUMNS)
    return ConflictModel(_ELMIRA_DMS, _ELMIRA_OPTIONS, Logic.BINARY, space, None,
                         MovePolicy.explicit(ELMIRA_REACH),
                         option_form=tuple(tuple(c.split()) for c in ELMIRA_COLUMNS))


def elmira_b4() -> ConflictModel:
    space = StateSpace.from_assignments(_vec(c) for c in ELMIRA_B4_COLUMNS)
    return ConflictModel(_ELMIRA_DMS, _ELMIRA_OPTIONS, Logic.B4, space, None,
                         MovePolicy.explicit(ELMIRA_REACH))


def russia_ukraine_b4() -> ConflictModel:
    full = enumerate_states(RU_OPTIONS, Logic.B4).assignments
    # The highlighted (Attack, Both) state comes first as s1.
    ordered = [RU_FOCUS] + [a for a in full if a != RU_FOCUS]
    return ConflictModel(RU_DMS, RU_OPTIONS, Logic.B4, StateSpace.from_assignments(ordered), None,
                         MovePolicy(PolicyKind.ENTAILMENT_DRIFT))


_BUILDERS = {
    "pd-binary": pd_binary,
    "pd-b4-16": pd_b4_16,
    "pd-b4-9": pd_b4_9,
    "elmira-binary": elmira_binary,
    "elmira-b4": elmira_b4,
    "russia-ukraine-b4": russia_ukraine_b4,
}


def load_case(case_id: str) -> ConflictModel:
    try:
        return _BUILDERS[case_id]()
    except KeyError:
        raise ModelError(f"unknown case {case_id!r}; choose from {', '.join(CASE_IDS)}") from None


def case_file(case_id: str) -> str:
    """Text of the shipped model file for ``case_id``."""
    if case_id not in _BUILDERS:
        raise ModelError(f"unknown case {case_id!r}")
    return resources.files("b4gmcr").joinpath("data", f"{case_id}.gmcr").read_text()


def pd_mapping_file() -> str:
    return resources.files("b4gmcr").joinpath("data", "pd.map").read_text()
