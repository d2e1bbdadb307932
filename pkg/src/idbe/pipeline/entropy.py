"""Adaptive order-0 range coder over the 258-symbol block alphabet.

The coder is the carry-propagating byte-oriented design used by LZMA: a
33-bit ``low`` with a cached pending byte, 32-bit ``range`` renormalized
whenever it drops below 2**24. The model starts every count at 1, adds
``INCREMENT`` after each coded symbol and halves (rounding up) once the total
passes ``RESCALE_LIMIT``.
"""

from __future__ import annotations

import numba
import numpy as np

from ..errors import CorruptPayloadError

N_SYMBOLS = 258
EOB = 257
INCREMENT = 16
RESCALE_LIMIT = 1 << 15

_TOP = 1 << 24
_MASK32 = 0xFFFFFFFF

# decoder status codes
_OK = 0
_OVERRUN = 1
_BAD_CODE = 2
_NO_EOB = 3


@numba.njit(cache=True)
def _rescale(freq):
    total = 0
    for s in range(N_SYMBOLS):
        freq[s] = (freq[s] + 1) >> 1
        total += freq[s]
    return total


@numba.njit(cache=True)
def _encode(symbols):
    out = np.empty(len(symbols) * 2 + 16, dtype=np.uint8)
    pos = 0
    freq = np.ones(N_SYMBOLS, dtype=np.int64)
    total = N_SYMBOLS
    low = 0
    rng = _MASK32
    cache = 0
    cache_size = 1
    n = len(symbols)
    for i in range(n + 1):
        s = symbols[i] if i < n else EOB
        cum = 0
        for t in range(s):
            cum += freq[t]
        r = rng // total
        low += r * cum
        rng = r * freq[s]
        while rng < _TOP:
            rng = (rng << 8) & _MASK32
            # shift_low
            if low < 0xFF000000 or low > _MASK32:
                carry = low >> 32
                temp = cache
                while True:
                    if pos >= len(out):
                        grown = np.empty(len(out) * 2, dtype=np.uint8)
                        grown[:pos] = out[:pos]
                        out = grown
                    out[pos] = (temp + carry) & 0xFF
                    pos += 1
                    temp = 0xFF
                    cache_size -= 1
                    if cache_size == 0:
                        break
                cache = (low >> 24) & 0xFF
            cache_size += 1
            low = (low & 0x00FFFFFF) << 8
        freq[s] += INCREMENT
        total += INCREMENT
        if total > RESCALE_LIMIT:
            total = _rescale(freq)
    for _ in range(5):
        if low < 0xFF000000 or low > _MASK32:
            carry = low >> 32
            temp = cache
            while True:
                if pos >= len(out):
                    grown = np.empty(len(out) * 2, dtype=np.uint8)
                    grown[:pos] = out[:pos]
                    out = grown
                out[pos] = (temp + carry) & 0xFF
                pos += 1
                temp = 0xFF
                cache_size -= 1
                if cache_size == 0:
                    break
            cache = (low >> 24) & 0xFF
        cache_size += 1
        low = (low & 0x00FFFFFF) << 8
    return out[:pos]


@numba.njit(cache=True)
def _decode(payload, max_symbols):
    out = np.empty(max_symbols, dtype=np.int32)
    freq = np.ones(N_SYMBOLS, dtype=np.int64)
    total = N_SYMBOLS
    n_in = len(payload)
    if n_in < 5:
        return out[:0], _OVERRUN
    code = 0
    for pos in range(5):
        code = (code << 8) | payload[pos]
    pos = 5
    rng = _MASK32
    k = 0
    while True:
        r = rng // total
        v = code // r
        if v >= total:
            return out[:k], _BAD_CODE
        s = 0
        cum = 0
        while cum + freq[s] <= v:
            cum += freq[s]
            s += 1
        code -= r * cum
        rng = r * freq[s]
        while rng < _TOP:
            if pos >= n_in:
                return out[:k], _OVERRUN
            code = ((code << 8) | payload[pos]) & _MASK32
            pos += 1
            rng = (rng << 8) & _MASK32
        if s == EOB:
            return out[:k], _OK
        if k >= max_symbols:
            return out[:k], _NO_EOB
        out[k] = s
        k += 1
        freq[s] += INCREMENT
        total += INCREMENT
        if total > RESCALE_LIMIT:
            total = _rescale(freq)


def entropy_encode(symbols) -> bytes:
    """Range-code ``symbols`` (each in 0..256) followed by an end-of-block symbol."""
    arr = np.asarray(symbols, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= EOB):
        raise ValueError("symbols must lie in 0..256")
    return _encode(arr).tobytes()


def entropy_decode(payload: bytes, max_symbols: int | None = None) -> np.ndarray:
    """Decode symbols up to the end-of-block marker.

    ``max_symbols`` bounds the output; a stream that runs past it without an
    end-of-block symbol is rejected. The default is a bound no valid stream
    of ``len(payload)`` bytes can exceed: the most probable symbol never has
    probability above 1 - 257/(2**15 + 16), i.e. it costs at least 0.011 bit.
    """
    buf = np.frombuffer(bytes(payload), dtype=np.uint8)
    if max_symbols is None:
        max_symbols = 1024 * (len(buf) + 8)
    symbols, status = _decode(buf, max_symbols)
    if status == _OVERRUN:
        raise CorruptPayloadError("payload ended before the end-of-block symbol")
    if status == _BAD_CODE:
        raise CorruptPayloadError("code value outside the model range")
    if status == _NO_EOB:
        raise CorruptPayloadError(f"no end-of-block symbol within {max_symbols} symbols")
    return symbols
