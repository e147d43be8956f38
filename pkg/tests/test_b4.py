import itertools

import pytest

from b4gmcr.b4 import (
    ENTAILMENT,
    MOVE_ALLOWED,
    B,
    F,
    N,
    T,
    TruthValue,
    conj,
    disj,
    entails,
    from_binary,
    move_allowed,
    negate,
    to_binary,
)
from b4gmcr.errors import ParseError

VALUES = list(TruthValue)
PAIRS = list(itertools.product(VALUES, VALUES))

# Reference 4-truth table, rows and columns in the order N, F, T, B.
HEAD = (N, F, T, B)
NEG_ROW = (N, T, F, B)
CONJ_TABLE = {
    N: (N, F, N, F),
    F: (F, F, F, F),
    T: (N, F, T, B),
    B: (F, F, B, B),
}
DISJ_TABLE = {
    N: (N, N, T, T),
    F: (N, F, T, B),
    T: (T, T, T, T),
    B: (T, B, T, B),
}


@pytest.mark.parametrize("v,expected", list(zip(HEAD, NEG_ROW)))
def test_negation_table(v, expected):
    assert negate(v) is expected


@pytest.mark.parametrize("a", HEAD)
def test_conjunction_table(a):
    assert tuple(conj(a, b) for b in HEAD) == CONJ_TABLE[a]


@pytest.mark.parametrize("a", HEAD)
def test_disjunction_table(a):
    assert tuple(disj(a, b) for b in HEAD) == DISJ_TABLE[a]


def test_spot_values():
    assert negate(N) is N and negate(T) is F
    assert negate(negate(B)) is B
    assert conj(N, B) is F and conj(T, N) is N
    assert disj(N, B) is T and disj(F, N) is N
    assert all(conj(F, x) is F for x in VALUES)
    assert all(disj(T, x) is T for x in VALUES)


def test_operator_sugar():
    assert ~T is F and (T & B) is B and (N | B) is T


def test_parse_format_roundtrip():
    assert len(set(VALUES)) == 4
    for v in VALUES:
        assert TruthValue.parse(str(v)) is v
    with pytest.raises(ParseError):
        TruthValue.parse("t")


def test_binary_import_total():
    assert [from_binary(c) for c in "YN-"] == [T, F, B]
    assert [to_binary(v) for v in (T, F, B)] == ["Y", "N", "-"]
    with pytest.raises(ParseError):
        from_binary("X")


def test_lattice_laws_exhaustive():
    for a in VALUES:
        assert negate(negate(a)) is a
        assert conj(a, a) is a and disj(a, a) is a
    for a, b in PAIRS:
        assert conj(a, b) is conj(b, a)
        assert disj(a, b) is disj(b, a)
        assert negate(conj(a, b)) is disj(negate(a), negate(b))
        assert negate(disj(a, b)) is conj(negate(a), negate(b))
        assert conj(a, disj(a, b)) is a
        assert disj(a, conj(a, b)) is a
    for a, b, c in itertools.product(VALUES, repeat=3):
        assert conj(a, conj(b, c)) is conj(conj(a, b), c)
        assert disj(a, disj(b, c)) is disj(disj(a, b), c)


def _entails_by_definition(a, b):
    # F below everything, T above everything, B and N only below themselves and T.
    return a is b or a is F or b is T


def test_entailment_matches_independent_definition():
    for a, b in PAIRS:
        assert entails(a, b) == _entails_by_definition(a, b), (a, b)
    assert entails(F, B) and entails(F, T) and not entails(B, N) and not entails(N, B)


def test_entailment_is_partial_order():
    for a in VALUES:
        assert entails(a, a)
        assert entails(F, a) and entails(a, T)
    for a, b in PAIRS:
        if entails(a, b) and entails(b, a):
            assert a is b
    for a, b, c in itertools.product(VALUES, repeat=3):
        if entails(a, b) and entails(b, c):
            assert entails(a, c)
    bottoms = [x for x in VALUES if all(entails(x, y) for y in VALUES)]
    tops = [x for x in VALUES if all(entails(y, x) for y in VALUES)]
    assert bottoms == [F] and tops == [T]
    assert len(ENTAILMENT) == 9


def test_move_allowed_is_the_seven_pairs():
    listed = {(B, B), (B, F), (N, N), (N, F), (T, T), (T, B), (T, N)}
    assert MOVE_ALLOWED == listed
    assert sum(move_allowed(a, b) for a, b in PAIRS) == 7
    assert move_allowed(T, N)
    assert not move_allowed(F, F) and not move_allowed(T, F)


def test_move_allowed_versus_entailment():
    gap = set()
    for src, dst in PAIRS:
        if move_allowed(src, dst):
            assert entails(dst, src)
        elif entails(dst, src):
            gap.add((src, dst))
    assert gap == {(F, F), (T, F)}
