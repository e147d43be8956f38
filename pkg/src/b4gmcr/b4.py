"""Belnap's four-valued logic.

Values are T (true), F (false), B (both) and N (none).  Connectives follow
the truth-order tables; ``entails`` is the entailment order with F at the
bottom, T at the top and B, N incomparable in between.
"""
from __future__ import annotations

import enum
import itertools

from .errors import ParseError


class TruthValue(enum.Enum):
    T = "T"
    F = "F"
    B = "B"
    N = "N"

    def __str__(self) -> str:
        return self.value

    def __invert__(self) -> "TruthValue":
        return negate(self)

    def __and__(self, other: "TruthValue") -> "TruthValue":
        return conj(self, other)

    def __or__(self, other: "TruthValue") -> "TruthValue":
        return disj(self, other)

    @classmethod
    def parse(cls, text: str) -> "TruthValue":
        try:
            return cls(text)
        except ValueError:
            raise ParseError(f"not a B4 value: {text!r}") from None


T, F, B, N = TruthValue.T, TruthValue.F, TruthValue.B, TruthValue.N

# Row and column order of the truth tables below.
TABLE_ORDER = (N, F, T, B)

_NEG = {N: N, F: T, T: F, B: B}

# Rows/columns in TABLE_ORDER.
_CONJ_ROWS = {
    N: (N, F, N, F),
    F: (F, F, F, F),
    T: (N, F, T, B),
    B: (F, F, B, B),
}
_DISJ_ROWS = {
    N: (N, N, T, T),
    F: (N, F, T, B),
    T: (T, T, T, T),
    B: (T, B, T, B),
}
_CONJ = {(a, b): row[j] for a, row in _CONJ_ROWS.items() for j, b in enumerate(TABLE_ORDER)}
_DISJ = {(a, b): row[j] for a, row in _DISJ_ROWS.items() for j, b in enumerate(TABLE_ORDER)}

_ENTAIL_BASE = {(F, B), (F, N), (B, T), (N, T)}


def _closure(pairs):
    rel = {(v, v) for v in TruthValue} | set(pairs)
    while True:
        extra = {(a, d) for (a, b), (c, d) in itertools.product(rel, rel) if b == c}
        if extra <= rel:
            return frozenset(rel)
        rel |= extra


ENTAILMENT = _closure(_ENTAIL_BASE)

# Literal list of (other DM's value before, after) pairs a mover may induce.
# Deliberately not derived from ENTAILMENT: (F, F) and (T, F) are absent.
MOVE_ALLOWED = frozenset({(B, B), (B, F), (N, N), (N, F), (T, T), (T, B), (T, N)})


def negate(v: TruthValue) -> TruthValue:
    return _NEG[v]


def conj(a: TruthValue, b: TruthValue) -> TruthValue:
    return _CONJ[a, b]


def disj(a: TruthValue, b: TruthValue) -> TruthValue:
    return _DISJ[a, b]


def entails(a: TruthValue, b: TruthValue) -> bool:
    """True iff ``a`` lies at or below ``b`` in the entailment order."""
    return (a, b) in ENTAILMENT


def move_allowed(src: TruthValue, dst: TruthValue) -> bool:
    return (src, dst) in MOVE_ALLOWED


_BINARY = {"Y": T, "N": F, "-": B}


def from_binary(symbol: str) -> TruthValue:
    """Map an option-form entry (Y, N or the wildcard -) to B4."""
    try:
        return _BINARY[symbol]
    except KeyError:
        raise ParseError(f"not an option-form entry: {symbol!r}") from None


def to_binary(v: TruthValue) -> str:
    for sym, val in _BINARY.items():
        if val is v:
            return sym
    raise ValueError(f"{v} has no option-form symbol")
