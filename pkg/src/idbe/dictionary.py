"""Frequency-ranked word dictionary and rank-derived code words.

Words are maximal runs of ASCII letters, counted case-sensitively. Ranks are
assigned by descending frequency with ties broken lexicographically, and the
code for a rank is a fixed function of the rank alone, so the on-disk format
only needs to store the ordered word list.
"""

from __future__ import annotations

import io
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Mapping

from .errors import (
    ChecksumMismatchError,
    CodeSpaceExhaustedError,
    CountMismatchError,
    DuplicateWordError,
    IllegalCharacterError,
    MalformedHeaderError,
)

CODE_MIN = 33
CODE_MAX = 250
CODE_BASE = CODE_MAX - CODE_MIN + 1  # 218
MAX_CODE_LENGTH = 4

HEADER = b"IDBE-DICT v1\n"

FNV64_OFFSET = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1

WORD_RE = re.compile(rb"[A-Za-z]{2,}")
_VALID_WORD = re.compile(rb"[A-Za-z]{2,}\Z")


def code_space(max_code_length: int = MAX_CODE_LENGTH) -> int:
    """Number of distinct codes of length 1..max_code_length."""
    return sum(CODE_BASE ** k for k in range(1, max_code_length + 1))


def assign_code(rank: int) -> bytes:
    """Return the code word for a dictionary rank.

    Ranks 0..217 map to the single bytes 33..250. Later ranks take ordered
    pairs, then triples, then quadruples over the same alphabet, enumerated
    lexicographically with repetition (first byte varies slowest).

    >>> assign_code(0), assign_code(217), assign_code(218), assign_code(219)
    (b'!', b'\\xfa', b'!!', b'!"')
    """
    if rank < 0:
        raise CodeSpaceExhaustedError(f"negative rank {rank}")
    offset = rank
    for length in range(1, MAX_CODE_LENGTH + 1):
        block = CODE_BASE ** length
        if offset < block:
            digits = bytearray(length)
            for pos in range(length - 1, -1, -1):
                offset, d = divmod(offset, CODE_BASE)
                digits[pos] = CODE_MIN + d
            return bytes(digits)
        offset -= block
    raise CodeSpaceExhaustedError(
        f"rank {rank} exceeds the code space of {code_space()} words")


def fnv1a_64(data: bytes, h: int = FNV64_OFFSET) -> int:
    for b in data:
        h = ((h ^ b) * FNV64_PRIME) & _MASK64
    return h


@dataclass(frozen=True)
class DictConfig:
    min_frequency: int = 1
    max_code_length: int = MAX_CODE_LENGTH

    def __post_init__(self):
        if self.min_frequency < 1:
            raise ValueError("min_frequency must be >= 1")
        if not 1 <= self.max_code_length <= MAX_CODE_LENGTH:
            raise ValueError("max_code_length must be in 1..4")


@dataclass(frozen=True, eq=False)
class Dictionary:
    """Immutable ranked word list. ``words[r]`` has code ``assign_code(r)``."""

    words: tuple[bytes, ...]
    code_of: Mapping[bytes, bytes] = field(repr=False)
    word_of: Mapping[bytes, bytes] = field(repr=False)
    checksum: int

    @classmethod
    def from_words(cls, words: Iterable[bytes]) -> "Dictionary":
        words = tuple(bytes(w) for w in words)
        if len(words) > code_space():
            raise CodeSpaceExhaustedError(
                f"{len(words)} words exceed the code space of {code_space()}")
        code_of: dict[bytes, bytes] = {}
        for rank, w in enumerate(words):
            if not _VALID_WORD.match(w):
                raise IllegalCharacterError(f"invalid dictionary word {w!r} at rank {rank}")
            if w in code_of:
                raise DuplicateWordError(f"duplicate dictionary word {w!r} at rank {rank}")
            code_of[w] = assign_code(rank)
        word_of = {c: w for w, c in code_of.items()}
        return cls(words, code_of, word_of, fnv1a_64(_body(words)))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: bytes) -> bool:
        return word in self.code_of

    def __eq__(self, other):
        if not isinstance(other, Dictionary):
            return NotImplemented
        return self.words == other.words

    def __hash__(self):
        return hash(self.words)


def _body(words: Iterable[bytes]) -> bytes:
    return b"".join(w + b"\n" for w in words)


def count_words(corpus: Iterable[bytes]) -> Counter:
    counts: Counter = Counter()
    for stream in corpus:
        counts.update(WORD_RE.findall(stream))
    return counts


def build_dictionary(corpus: Iterable[bytes], cfg: DictConfig | None = None) -> Dictionary:
    """Count words across ``corpus`` and rank them into a Dictionary.

    Words seen fewer than ``cfg.min_frequency`` times are dropped, and the list
    is truncated to the number of codes available up to ``cfg.max_code_length``.
    """
    cfg = cfg or DictConfig()
    counts = count_words(corpus)
    ranked = sorted(
        (w for w, n in counts.items() if n >= cfg.min_frequency),
        key=lambda w: (-counts[w], w),
    )
    del ranked[code_space(cfg.max_code_length):]
    return Dictionary.from_words(ranked)


def dictionary_checksum(d: Dictionary) -> int:
    return fnv1a_64(_body(d.words))


def dumps_dictionary(d: Dictionary) -> bytes:
    body = _body(d.words)
    return b"%s%d\n%s%016x\n" % (HEADER, len(d.words), body, fnv1a_64(body))


def save_dictionary(d: Dictionary, sink: BinaryIO) -> None:
    sink.write(dumps_dictionary(d))


def loads_dictionary(data: bytes) -> Dictionary:
    return load_dictionary(io.BytesIO(data))


def load_dictionary(source: BinaryIO) -> Dictionary:
    """Parse the canonical dictionary format and verify its checksum."""
    if source.readline() != HEADER:
        raise MalformedHeaderError("missing 'IDBE-DICT v1' header line")
    count_line = source.readline()
    if not re.fullmatch(rb"(0|[1-9][0-9]*)\n", count_line):
        raise MalformedHeaderError(f"bad word-count line {count_line!r}")
    count = int(count_line)

    lines = source.read().split(b"\n")
    # a well-formed tail is: count word lines, checksum line, empty remainder
    if len(lines) != count + 2 or lines[-1] != b"":
        found = max(len(lines) - 2, 0)
        raise CountMismatchError(f"header declares {count} words, file holds {found}")
    words, checksum_line = lines[:count], lines[count]
    if not re.fullmatch(rb"[0-9a-f]{16}", checksum_line):
        raise MalformedHeaderError(f"bad checksum line {checksum_line!r}")

    seen: set[bytes] = set()
    for lineno, w in enumerate(words, start=3):
        if not _VALID_WORD.match(w):
            raise IllegalCharacterError(f"line {lineno}: illegal word {w!r}")
        if w in seen:
            raise DuplicateWordError(f"line {lineno}: duplicate word {w!r}")
        seen.add(w)

    d = Dictionary.from_words(words)
    stored = int(checksum_line, 16)
    if stored != d.checksum:
        raise ChecksumMismatchError(
            f"stored checksum {stored:016x} != computed {d.checksum:016x}")
    return d
