"""Dictionary word substitution with length markers.

Encoded stream grammar:

* ``LEN1..LEN4`` (251..254) followed by 1..4 code bytes (33..250) is a
  dictionary word. A single space that followed the word in the source is
  dropped; if the word was followed by anything else, ``NOSPACE`` (255) is
  written right after the code. End of input after a code means nothing
  followed, so a single space that ends the input is kept as NOSPACE + space.
* Any source byte in 251..255 is written twice.
* Everything else is copied through.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .dictionary import Dictionary
from .errors import DanglingMarkerError, TruncatedCodeError, UnknownCodeError

LEN1, LEN2, LEN3, LEN4 = 251, 252, 253, 254
NOSPACE = 255
SPACE = 0x20

_SPLIT_RE = re.compile(rb"([A-Za-z]+)")
_RESERVED_RE = re.compile(rb"([\xfb-\xff])")
_SPECIAL_RE = re.compile(rb"[\xfb-\xff]")
_NOSPACE_RUN = re.compile(rb"\xff+")
_TOKEN_RE = re.compile(rb"[A-Za-z]+|[\x00-\xff]", re.DOTALL)


class TokenKind(Enum):
    WORD = "word"
    CHAR = "char"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    data: bytes


def tokenize(data: bytes) -> list[Token]:
    """Split into maximal letter runs (words) and single non-letter bytes."""
    return [Token(TokenKind.WORD if m.group().isalpha() else TokenKind.CHAR, m.group())
            for m in _TOKEN_RE.finditer(data)]


def _escape(chunk: bytes) -> bytes:
    return _RESERVED_RE.sub(rb"\1\1", chunk)


def idbe_encode(data: bytes, d: Dictionary) -> bytes:
    # re.split with a capture group alternates gap, word, gap, word, ..., gap
    parts = _SPLIT_RE.split(bytes(data))
    code_of = d.code_of
    out = [_escape(parts[0])]
    for i in range(1, len(parts), 2):
        word, gap = parts[i], parts[i + 1]
        code = code_of.get(word)
        if code is None:
            out.append(word)
        else:
            out.append(bytes((250 + len(code),)) + code)
            if gap:
                # a lone trailing space cannot be absorbed: end of input
                # after a code already means "no space follows"
                if gap[0] == SPACE and not (gap == b" " and i + 2 == len(parts)):
                    gap = gap[1:]
                else:
                    out.append(b"\xff")
        out.append(_escape(gap))
    return b"".join(out)


def idbe_decode(data: bytes, d: Dictionary) -> bytes:
    data = bytes(data)
    word_of = d.word_of
    n = len(data)
    out = []
    i = 0
    while True:
        m = _SPECIAL_RE.search(data, i)
        if m is None:
            out.append(data[i:])
            break
        j = m.start()
        out.append(data[i:j])
        b = data[j]
        if j + 1 < n and data[j + 1] == b:
            out.append(data[j:j + 1])
            i = j + 2
            continue
        if b == NOSPACE:
            raise DanglingMarkerError(f"unpaired NOSPACE marker at offset {j}")
        k = b - 250
        code = data[j + 1:j + 1 + k]
        if len(code) < k:
            raise TruncatedCodeError(f"code at offset {j} needs {k} bytes, {len(code)} remain")
        word = word_of.get(code)
        if word is None:
            raise UnknownCodeError(f"no dictionary word for code {code!r} at offset {j}")
        out.append(word)
        i = j + 1 + k
        if i == n:
            break
        # Literal 255s come in pairs, so an odd-length run of 255 right after a
        # code means its first byte is the NOSPACE marker.
        run = _NOSPACE_RUN.match(data, i)
        if run is not None and (run.end() - i) % 2 == 1:
            i += 1
        else:
            out.append(b" ")
    return b"".join(out)
