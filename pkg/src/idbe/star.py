"""Star encoding: a length-preserving word substitution baseline.

Each dictionary word of length L is replaced by an L-byte pattern made of
'*' padding followed by the word's within-length rank written in base 26
('a' = 0). Rank 0 is all stars, and the first byte is always '*', so a
pattern can never collide with a plain word. Literal '*' and '\\' in the
input are escaped with a backslash.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .dictionary import Dictionary
from .errors import DanglingEscapeError, GroupFullError, PatternNotFoundError

STAR = ord("*")
ESCAPE = ord("\\")

_SPLIT_RE = re.compile(rb"([A-Za-z]+)")
_ESCAPE_RE = re.compile(rb"([*\\])")
_DECODE_RE = re.compile(rb"\\([\x00-\xff])|[A-Za-z*]+|\\\Z", re.DOTALL)


def star_capacity(length: int) -> int:
    return 26 ** (length - 1)


def star_pattern(rank: int, length: int) -> bytes:
    """``(0, 3) -> b'***'``, ``(1, 3) -> b'**b'``, ``(26, 3) -> b'*ba'``."""
    if length < 2:
        raise ValueError("star patterns need length >= 2")
    if not 0 <= rank < star_capacity(length):
        raise GroupFullError(f"rank {rank} does not fit a length-{length} pattern")
    digits = bytearray()
    while rank:
        rank, d = divmod(rank, 26)
        digits.append(ord("a") + d)
    digits.reverse()
    return b"*" * (length - len(digits)) + bytes(digits)


@dataclass(frozen=True, eq=False)
class StarDictionary:
    groups: Mapping[int, tuple[bytes, ...]]
    pattern_of: Mapping[bytes, bytes] = field(repr=False)
    word_of_pattern: Mapping[bytes, bytes] = field(repr=False)

    def __len__(self):
        return len(self.pattern_of)


def build_star_dictionary(d: Dictionary) -> StarDictionary:
    """Group ``d``'s words by length; words past a group's capacity are dropped."""
    groups: dict[int, list[bytes]] = defaultdict(list)
    pattern_of: dict[bytes, bytes] = {}
    for w in d.words:
        group = groups[len(w)]
        if len(group) < star_capacity(len(w)):
            pattern_of[w] = star_pattern(len(group), len(w))
            group.append(w)
    return StarDictionary(
        {n: tuple(ws) for n, ws in sorted(groups.items())},
        pattern_of,
        {p: w for w, p in pattern_of.items()},
    )


def star_encode(data: bytes, sd: StarDictionary) -> bytes:
    parts = _SPLIT_RE.split(bytes(data))
    pattern_of = sd.pattern_of
    for i in range(0, len(parts), 2):
        parts[i] = _ESCAPE_RE.sub(rb"\\\1", parts[i])
    for i in range(1, len(parts), 2):
        parts[i] = pattern_of.get(parts[i], parts[i])
    return b"".join(parts)


def star_decode(data: bytes, sd: StarDictionary) -> bytes:
    word_of = sd.word_of_pattern

    def replace(m: re.Match) -> bytes:
        escaped = m.group(1)
        if escaped is not None:
            return escaped
        run = m.group()
        if run == b"\\":
            raise DanglingEscapeError(f"dangling escape byte at offset {m.start()}")
        if STAR not in run:
            return run
        try:
            return word_of[run]
        except KeyError:
            raise PatternNotFoundError(
                f"no word for pattern {run!r} at offset {m.start()}") from None

    return _DECODE_RE.sub(replace, bytes(data))
