import pytest

from b4gmcr.b4 import B, F, N, T
from b4gmcr.cases import CASE_IDS, case_file, load_case
from b4gmcr.errors import ParseError
from b4gmcr.generate import random_model
from b4gmcr.model import Logic, validate_model
from b4gmcr.modelfile import parse_mapping, parse_model, serialize_model
from b4gmcr.reachability import PolicyKind

PD_ENUM = """
# two one-option DMs over B4
[logic] b4
[dm] 1 DM1
[dm] 2 DM2
[option] p1 dm=1 "Not Confess"
[option] p2 dm=2 "Not Confess" reversible
[states] enumerate
[policy] drift
"""


@pytest.mark.parametrize("case_id", CASE_IDS)
def test_shipped_file_equals_builtin(case_id):
    assert parse_model(case_file(case_id)) == load_case(case_id)


@pytest.mark.parametrize("case_id", CASE_IDS)
def test_roundtrip_builtin(case_id):
    m = load_case(case_id)
    assert parse_model(serialize_model(m)) == m


@pytest.mark.parametrize("seed", range(15))
def test_roundtrip_random(seed):
    m = random_model(seed)
    assert parse_model(serialize_model(m)) == m


def test_enumerate_order():
    m = parse_model(PD_ENUM)
    assert len(m.space) == 16
    values = (T, F, N, B)
    assert m.space.assignments == [(a, b) for a in values for b in values]
    assert m.policy.kind is PolicyKind.ENTAILMENT_DRIFT
    assert m.preferences is None


def test_sections_order_independent():
    lines = [l for l in PD_ENUM.strip().splitlines() if not l.startswith("#")]
    options = [l for l in lines if l.startswith("[option]")]
    others = [l for l in lines if not l.startswith("[option]")]
    shuffled = options + list(reversed(others))
    assert parse_model("\n".join(shuffled)) == parse_model(PD_ENUM)


def test_ties_and_comments():
    text = PD_ENUM.replace("[states] enumerate", "[states] explicit\ns1 = T T  # both\ns2 = F F\ns3 = B N")
    text += "[pref] dm=1 : s2 > s1 = s3\n[pref] dm=2 : s3 = s2 = s1\n"
    m = parse_model(text)
    assert m.preference(1).tiers == (frozenset({2}), frozenset({1, 3}))
    assert m.preference(2).tiers == (frozenset({1, 2, 3}),)
    assert validate_model(m) == []


def test_pref_unknown_state_is_diagnostic():
    text = PD_ENUM + "[pref] dm=1 : s1 > s99\n"
    diags = validate_model(parse_model(text))
    assert any("s99" in str(d) for d in diags)


def test_binary_wildcard_needs_import():
    body = """[logic] binary
[dm] 1 A
[dm] 2 B
[option] a dm=1 "a"
[option] b dm=2 "b"
[states] explicit
s1 = Y N
s2 = - Y
"""
    with pytest.raises(ParseError, match="line 8.*b4-import"):
        parse_model(body)
    m = parse_model(body + "[states] b4-import\n")
    assert m.space.assignments == [(T, F), (B, T)]
    assert m.option_form == (("Y", "N"), ("-", "Y"))
    assert m.logic is Logic.BINARY and validate_model(m) == []


@pytest.mark.parametrize(
    "text,needle",
    [
        ("[logic] ternary\n", "line 1"),
        ("[logic] b4\n[frob] x\n", "line 2: unknown directive"),
        ("[logic] b4\n[states] explicit\ns1 = T X\n", "line 3"),
        ("[logic] b4\n[states] explicit\ns2 = T T\n", "out of order"),
        ("[logic] b4\n[states] enumerate\n[pref] dm=1 : s1 >\n", "ends with an operator"),
        ("[logic] b4\n[states] enumerate\n[reach] dm=1 s1 s2\n", "line 3"),
        ("[logic] b4\n[option] x dm=one\n", "dm=<id>"),
        ("[logic] b4\n[option] x dm=1 \"X\" sticky\n", "unknown option kind"),
        ("[dm] 1 A\n", "missing \\[logic\\]"),
        ("[logic] b4\n", "missing \\[states\\]"),
        ("[logic] binary\n[states] explicit\ns1 = T F\n", "Y or N"),
    ],
)
def test_parse_errors_are_positioned(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse_model(text)


def test_mapping():
    assert parse_mapping("# a -> b\ns1 -> s4\ns2 -> s3 # note\n") == {1: 4, 2: 3}
    with pytest.raises(ParseError):
        parse_mapping("s1 s2\n")
    with pytest.raises(ParseError, match="twice"):
        parse_mapping("s1 -> s2\ns1 -> s3\n")
