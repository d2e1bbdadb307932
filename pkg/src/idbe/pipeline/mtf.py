"""Move-to-front recoding and bzip2-style zero-run coding."""

from __future__ import annotations

import numba
import numpy as np

from ..errors import CorruptPayloadError

RUNA = 0
RUNB = 1
# longest run representable without overflowing int64 arithmetic
_MAX_RUN_DIGITS = 48


@numba.njit(cache=True)
def _mtf_encode(data):
    table = np.arange(256, dtype=np.uint8)
    out = np.empty(len(data), dtype=np.uint8)
    for i in range(len(data)):
        c = data[i]
        j = 0
        while table[j] != c:
            j += 1
        out[i] = j
        while j > 0:
            table[j] = table[j - 1]
            j -= 1
        table[0] = c
    return out


@numba.njit(cache=True)
def _mtf_decode(data):
    table = np.arange(256, dtype=np.uint8)
    out = np.empty(len(data), dtype=np.uint8)
    for i in range(len(data)):
        j = data[i]
        c = table[j]
        out[i] = c
        while j > 0:
            table[j] = table[j - 1]
            j -= 1
        table[0] = c
    return out


def _as_u8(data) -> np.ndarray:
    if isinstance(data, np.ndarray):
        return data.astype(np.uint8, copy=False)
    return np.frombuffer(bytes(data), dtype=np.uint8)


def mtf_encode(data) -> bytes:
    """Replace each byte by its position in a recency list, then move it to the front.

    >>> list(mtf_encode(b"cab"))
    [99, 98, 99]
    """
    return _mtf_encode(_as_u8(data)).tobytes()


def mtf_decode(data) -> bytes:
    return _mtf_decode(_as_u8(data)).tobytes()


@numba.njit(cache=True)
def _rle0_encode(data):
    out = np.empty(len(data), dtype=np.int32)
    k = 0
    run = 0
    for i in range(len(data) + 1):
        if i < len(data) and data[i] == 0:
            run += 1
            continue
        if run:
            # bits of run+1, least significant first, without the leading 1
            v = run + 1
            while v > 1:
                out[k] = v & 1
                k += 1
                v >>= 1
            run = 0
        if i < len(data):
            out[k] = data[i] + 1
            k += 1
    return out[:k]


@numba.njit(cache=True)
def _rle0_decoded_length(symbols):
    """Output length, or -1 for an out-of-range symbol, -2 for an absurd run."""
    total = 0
    run = 0
    digit = 0
    for s in symbols:
        if s <= RUNB:
            if digit >= _MAX_RUN_DIGITS:
                return -2
            run += (s + 1) << digit
            digit += 1
        elif s <= 256:
            total += run + 1
            run = 0
            digit = 0
        else:
            return -1
    return total + run


@numba.njit(cache=True)
def _rle0_fill(symbols, n):
    out = np.zeros(n, dtype=np.uint8)
    k = 0
    run = 0
    digit = 0
    for s in symbols:
        if s <= RUNB:
            run += (s + 1) << digit
            digit += 1
        else:
            k += run
            run = 0
            digit = 0
            out[k] = s - 1
            k += 1
    return out


def rle0_encode(data) -> np.ndarray:
    """Zero-run code ``data`` into symbols 0..256 (RUNA, RUNB, byte+1).

    >>> rle0_encode(bytes(4)).tolist()
    [1, 0]
    """
    return _rle0_encode(_as_u8(data))


def rle0_decode(symbols) -> bytes:
    symbols = np.asarray(symbols, dtype=np.int64)
    if symbols.size and symbols.min() < 0:
        raise CorruptPayloadError("negative run-length symbol")
    n = _rle0_decoded_length(symbols)
    if n == -1:
        raise CorruptPayloadError("run-length symbol above 256")
    if n == -2:
        raise CorruptPayloadError("zero run too long to be genuine")
    return _rle0_fill(symbols, n).tobytes()
