"""String-transformation programs: substring extraction and concatenation.

A program is a nonempty sequence of pieces. Each piece is either a constant
string or a substring of the input delimited by two position expressions.
Positions are absolute character offsets (negative counts from the end) or
boundaries of token matches: runs of digits, letters, whitespace, or single
punctuation marks.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Union

MAX_ABS_INDEX = 20   # AbsPos offsets limited to [-20, 20] to keep spaces finite
MAX_OCCURRENCE = 5   # token occurrences counted up to 5 from either side

START = "start"
END = "end"


class Token(Enum):
    DIGITS = "digits"
    LOWER = "lower"
    UPPER = "upper"
    ALPHA = "alpha"
    ALNUM = "alnum"
    SPACE = "space"
    LITERAL = "literal"


_TOKEN_RE = {
    Token.DIGITS: re.compile(r"[0-9]+"),
    Token.LOWER: re.compile(r"[a-z]+"),
    Token.UPPER: re.compile(r"[A-Z]+"),
    Token.ALPHA: re.compile(r"[A-Za-z]+"),
    Token.ALNUM: re.compile(r"[A-Za-z0-9]+"),
    Token.SPACE: re.compile(r"\s+"),
}

_ALNUM_CHARS = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789")


@dataclass(frozen=True)
class AbsPos:
    """Absolute offset; index >= 0 counts from the start, < 0 from the end (-1 = end)."""

    index: int

    def __post_init__(self):
        if abs(self.index) > MAX_ABS_INDEX:
            raise ValueError(f"AbsPos index {self.index} outside [-{MAX_ABS_INDEX}, {MAX_ABS_INDEX}]")


@dataclass(frozen=True)
class TokPos:
    """Boundary of the n-th match of a token class; negative occurrence counts from the right."""

    token: Token
    occurrence: int
    side: str
    char: Optional[str] = None  # only for Token.LITERAL

    def __post_init__(self):
        if self.occurrence == 0 or abs(self.occurrence) > MAX_OCCURRENCE:
            raise ValueError(f"occurrence {self.occurrence} outside +-1..{MAX_OCCURRENCE}")
        if self.side not in (START, END):
            raise ValueError(f"side must be {START!r} or {END!r}")
        if self.token is Token.LITERAL:
            if self.char is None or len(self.char) != 1:
                raise ValueError("literal token needs a single character")
            if self.char in _ALNUM_CHARS:
                raise ValueError("literal token character must not be alphanumeric")
        elif self.char is not None:
            raise ValueError("char is only valid for literal tokens")


Pos = Union[AbsPos, TokPos]


@dataclass(frozen=True)
class ConstStr:
    text: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("constant piece must be nonempty")


@dataclass(frozen=True)
class SubStr:
    start: Pos
    end: Pos


Atom = Union[ConstStr, SubStr]


@dataclass(frozen=True)
class Program:
    pieces: tuple[Atom, ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("program must have at least one piece")


@lru_cache(maxsize=65536)
def token_matches(text: str, token: Token, char: Optional[str] = None) -> tuple[tuple[int, int], ...]:
    """Spans of maximal runs of a token class (single occurrences for literals)."""
    if token is Token.LITERAL:
        return tuple((i, i + 1) for i, c in enumerate(text) if c == char)
    return tuple(m.span() for m in _TOKEN_RE[token].finditer(text))


def resolve(pos: Pos, text: str) -> Optional[int]:
    """Offset in [0, len(text)] that the position denotes, or None if unresolvable."""
    if isinstance(pos, AbsPos):
        off = pos.index if pos.index >= 0 else len(text) + 1 + pos.index
        return off if 0 <= off <= len(text) else None
    matches = token_matches(text, pos.token, pos.char)
    occ = pos.occurrence
    if occ > 0:
        if occ > len(matches):
            return None
        span = matches[occ - 1]
    else:
        if -occ > len(matches):
            return None
        span = matches[occ]
    return span[0] if pos.side == START else span[1]


def evaluate(program: Program, text: str) -> Optional[str]:
    """Run the program; None is the failure value when any piece fails to extract.

    A substring piece fails when either position is unresolvable or does not
    select a nonempty range; failure of any piece fails the whole program.
    """
    parts = []
    for piece in program.pieces:
        if isinstance(piece, ConstStr):
            parts.append(piece.text)
            continue
        s = resolve(piece.start, text)
        e = resolve(piece.end, text)
        if s is None or e is None or s >= e:
            return None
        parts.append(text[s:e])
    return "".join(parts)


def atom_score(atom: Atom) -> float:
    if isinstance(atom, ConstStr):
        return -1.0 - 0.1 * len(atom.text)
    score = -1.0
    if isinstance(atom.start, TokPos):
        score += 2.0
    if isinstance(atom.end, TokPos):
        score += 2.0
    return score


def rank_score(program: Program) -> float:
    """Heuristic plausibility score; higher is better.

    Token-anchored positions are rewarded, extra pieces and long constants
    penalized, so substring extraction is preferred over literal splicing.
    """
    return sum(atom_score(a) for a in program.pieces)


def _pos_dict(pos: Pos) -> dict:
    if isinstance(pos, AbsPos):
        return {"kind": "abs", "index": pos.index}
    d = {"kind": "tok", "token": pos.token.value, "occurrence": pos.occurrence, "side": pos.side}
    if pos.char is not None:
        d["char"] = pos.char
    return d


def _atom_dict(atom: Atom) -> dict:
    if isinstance(atom, ConstStr):
        return {"kind": "const", "text": atom.text}
    return {"kind": "substr", "start": _pos_dict(atom.start), "end": _pos_dict(atom.end)}


def program_to_dict(program: Program) -> dict:
    return {"pieces": [_atom_dict(a) for a in program.pieces]}


def _pos_from_dict(d: dict) -> Pos:
    if d["kind"] == "abs":
        return AbsPos(d["index"])
    return TokPos(Token(d["token"]), d["occurrence"], d["side"], d.get("char"))


def _atom_from_dict(d: dict) -> Atom:
    if d["kind"] == "const":
        return ConstStr(d["text"])
    return SubStr(_pos_from_dict(d["start"]), _pos_from_dict(d["end"]))


def program_from_dict(d: dict) -> Program:
    return Program(tuple(_atom_from_dict(a) for a in d["pieces"]))


@lru_cache(maxsize=65536)
def _atom_key_cached(atom: Atom) -> str:
    return json.dumps(_atom_dict(atom), sort_keys=True, separators=(",", ":"))


def atom_key(atom: Atom) -> str:
    """Canonical serialization of one piece; total order for tie-breaking."""
    return _atom_key_cached(atom)


def canonical(program: Program) -> str:
    """Canonical JSON form; equal strings iff structurally equal programs."""
    return json.dumps(program_to_dict(program), sort_keys=True, separators=(",", ":"))


def rank_key(program: Program):
    """Sort key: ascending order lists programs best-first (score desc, serialization asc)."""
    return (-rank_score(program), tuple(atom_key(a) for a in program.pieces))


_ORDINALS = {1: "1st", 2: "2nd", 3: "3rd"}

_TOKEN_LABEL = {
    Token.DIGITS: "digit run",
    Token.LOWER: "lowercase run",
    Token.UPPER: "uppercase run",
    Token.ALPHA: "letter run",
    Token.ALNUM: "alphanumeric run",
    Token.SPACE: "whitespace run",
}


def _ordinal(n: int) -> str:
    return _ORDINALS.get(n, f"{n}th")


def describe_pos(pos: Pos) -> str:
    if isinstance(pos, AbsPos):
        if pos.index >= 0:
            return f"position {pos.index}"
        return f"position {-pos.index} from end"
    label = f"'{pos.char}'" if pos.token is Token.LITERAL else _TOKEN_LABEL[pos.token]
    if pos.occurrence > 0:
        return f"{pos.side} of {_ordinal(pos.occurrence)} {label}"
    return f"{pos.side} of {_ordinal(-pos.occurrence)} {label} from end"


def describe_atom(atom: Atom) -> str:
    if isinstance(atom, ConstStr):
        return f"constant {json.dumps(atom.text)}"
    return f"string from {describe_pos(atom.start)} to {describe_pos(atom.end)}"


def describe(program: Program) -> str:
    """Human-readable rendering, one clause per piece joined by ' + '."""
    return " + ".join(describe_atom(a) for a in program.pieces)
