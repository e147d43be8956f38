import pytest

from b4gmcr.cases import load_case
from b4gmcr.errors import MissingPreferences, ModelError
from b4gmcr.model import (
    ConflictModel,
    DecisionMaker,
    Logic,
    OptionDef,
    PreferenceOrder,
    StateSpace,
)
from b4gmcr.b4 import F, T
from b4gmcr.oracle import naive_verdicts, oracle_check
from b4gmcr.reachability import MovePolicy, PolicyKind
from b4gmcr.stability import (
    Concept,
    Mark,
    analyze,
    compare_reports,
    is_cgmr,
    is_cnash,
    is_gmr,
    is_nash,
    is_pareto_optimal,
    is_seq,
    is_smr,
)

CC, DC, CD, DD = 1, 2, 3, 4


@pytest.fixture(scope="module")
def pd9():
    return load_case("pd-b4-9")


@pytest.fixture(scope="module")
def pd():
    return load_case("pd-binary")


def test_nash(pd9):
    assert is_nash(pd9, 1, 4) and is_nash(pd9, 2, 4)
    assert is_nash(pd9, 1, 2) and is_nash(pd9, 2, 2)
    assert not is_nash(pd9, 1, 1)


def test_gmr(pd9):
    assert is_gmr(pd9, 1, 3) and is_gmr(pd9, 2, 3)
    assert not is_gmr(pd9, 1, 1)


def test_smr_seq(pd9):
    for s in (3, 4):
        assert is_smr(pd9, 1, s) and is_smr(pd9, 2, s)
    assert is_seq(pd9, 1, 3) and is_seq(pd9, 2, 3)
    assert not is_seq(pd9, 1, 1)


def test_coalition_concepts(pd9, pd):
    assert is_cnash(pd9, 1, 4) and is_cnash(pd9, 2, 4)
    assert not is_cgmr(pd9, 1, 1)
    assert not is_cnash(pd, 1, DD)


def test_pareto(pd9):
    assert {s for s in range(1, 10) if is_pareto_optimal(pd9, s)} == {1, 2, 3, 7, 8}
    assert not is_pareto_optimal(pd9, 9)


def test_unknown_ids(pd9):
    with pytest.raises(ModelError):
        is_nash(pd9, 5, 1)
    with pytest.raises(ModelError):
        is_gmr(pd9, 1, 42)


def test_analyze_nine_state_pd(pd9):
    r = analyze(pd9)
    assert r.equilibria[Concept.NASH] == {2, 4}
    for c in (Concept.GMR, Concept.SMR, Concept.SEQ, Concept.CGMR, Concept.CSMR, Concept.CSEQ):
        assert r.equilibria[c] == {2, 3, 4}
    assert r.equilibria[Concept.CNASH] == {2, 4}
    assert r.pareto == {1, 2, 3, 7, 8}


def test_analyze_binary_pd_against_oracle(pd):
    r = analyze(pd)
    verdicts, pareto = naive_verdicts(pd)
    for c in Concept:
        expected = {s for s in range(1, 5) if all(verdicts[c, d, s] for d in (1, 2))}
        assert r.equilibria[c] == expected
    assert r.equilibria[Concept.NASH] == {DD}
    for c in (Concept.GMR, Concept.SMR, Concept.SEQ):
        assert r.equilibria[c] == {CC, DD}
    assert r.pareto == pareto == {CC, DC, CD}


def test_sink_top_state_is_in_every_equilibrium():
    opts = (OptionDef.make("a", 1), OptionDef.make("b", 2))
    space = StateSpace.from_assignments([(T, T), (T, F), (F, T), (F, F)])
    prefs = (PreferenceOrder.strict(1, [4, 1, 2, 3]), PreferenceOrder.strict(2, [4, 3, 2, 1]))
    adjacency = {1: {1: {4}, 2: {3}, 3: {2}}, 2: {1: {2}, 2: {1}, 3: {4}}}
    model = ConflictModel((DecisionMaker(1, "x"), DecisionMaker(2, "y")), opts, Logic.BINARY, space,
                          prefs, MovePolicy.explicit(adjacency))
    r = analyze(model)
    for c in Concept:
        assert 4 in r.equilibria[c]
    assert 4 in r.pareto


def test_ties_are_not_improvements():
    opts = (OptionDef.make("a", 1), OptionDef.make("b", 2))
    space = StateSpace.from_assignments([(T, T), (F, T)])
    prefs = (PreferenceOrder.from_tiers(1, [[1, 2]]), PreferenceOrder.from_tiers(2, [[1, 2]]))
    model = ConflictModel((DecisionMaker(1, "x"), DecisionMaker(2, "y")), opts, Logic.BINARY, space, prefs)
    r = analyze(model)
    assert all(r.equilibria[c] == {1, 2} for c in Concept)
    assert r.pareto == {1, 2}


def test_analyze_requires_preferences():
    with pytest.raises(MissingPreferences):
        analyze(load_case("elmira-b4"))


def test_analyze_rejects_invalid(pd9):
    with pytest.raises(ModelError, match="invalid model"):
        analyze(pd9.with_preferences([pd9.preference(1)]))


def test_analyze_parallel_identical(pd9):
    assert analyze(pd9, workers=4) == analyze(pd9)


def test_compare_pd(pd, pd9):
    cmp = compare_reports(analyze(pd), analyze(pd9), {CC: 1, DC: 2, CD: 3, DD: 4})
    assert cmp.mark("Nash", b=4) is Mark.BOTH
    assert cmp.mark("Nash", b=2) is Mark.ONLY_B
    assert cmp.mark("GMR", b=1) is Mark.ONLY_A
    assert cmp.mark("GMR", b=3) is Mark.ONLY_B
    assert cmp.mark("GMR", b=4) is Mark.BOTH
    assert cmp.mark("Nash", b=9) is Mark.NEITHER


def test_compare_identical_and_empty(pd9):
    r = analyze(pd9)
    same = compare_reports(r, r, {s: s for s in r.states})
    assert {m for row in same.marks.values() for m in row} <= {Mark.BOTH, Mark.NEITHER}
    empty = compare_reports(r, r, {})
    assert {m for row in empty.marks.values() for m in row} <= {Mark.ONLY_A, Mark.ONLY_B, Mark.NEITHER}
    assert empty.mark("Nash", a=2) is Mark.ONLY_A
    assert empty.mark("Nash", b=2) is Mark.ONLY_B


def test_compare_rejects_non_injective(pd9):
    r = analyze(pd9)
    with pytest.raises(ModelError, match="injective"):
        compare_reports(r, r, {1: 1, 2: 1})


def test_oracle_clean_on_cases(pd, pd9):
    assert oracle_check(pd9) == []
    assert oracle_check(pd) == []


def test_oracle_bound(pd9):
    with pytest.raises(ModelError, match="bound"):
        oracle_check(pd9, bound=8)


def test_oracle_detects_a_planted_bug(pd9, monkeypatch):
    from b4gmcr import stability

    monkeypatch.setattr(stability.Analyzer, "seq", stability.Analyzer.nash)
    found = oracle_check(pd9)
    assert found and {d.concept for d in found} == {"SEQ"}
