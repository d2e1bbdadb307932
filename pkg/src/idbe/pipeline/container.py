"""Block compressor and the container file format.

Layout (integers big-endian)::

    0   5  magic b"IDBE1"
    5   1  format version (1)
    6   1  method: 0 none, 1 star, 2 idbe
    7   8  dictionary checksum (zero for method 0)
    15  4  block size
    19     block records: raw_length u32, primary_index u32,
           payload_length u32, payload; a raw_length of 0 ends the stream

The pre-transform runs over the whole input before it is cut into blocks, so
code words never straddle a block boundary.
"""

from __future__ import annotations

import enum
import struct
import weakref
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Union

from ..dictionary import Dictionary
from ..errors import (
    ContainerError,
    BadMagicError,
    CorruptBlockError,
    CorruptPayloadError,
    DictionaryMismatchError,
    MissingDictionaryError,
    VersionMismatchError,
)
from ..idbe_codec import idbe_decode, idbe_encode
from ..star import StarDictionary, build_star_dictionary, star_decode, star_encode
from .bwt import BwtBlock, bwt_forward, bwt_inverse
from .entropy import entropy_decode, entropy_encode
from .mtf import mtf_decode, mtf_encode, rle0_decode, rle0_encode

MAGIC = b"IDBE1"
VERSION = 1
MIN_BLOCK_SIZE = 1 << 10
MAX_BLOCK_SIZE = 16 << 20
DEFAULT_BLOCK_SIZE = 1 << 20

_HEADER = struct.Struct(">5sBBQI")
_RECORD = struct.Struct(">III")


class Method(enum.IntEnum):
    NONE = 0
    STAR = 1
    IDBE = 2

    @classmethod
    def parse(cls, value: Union[str, int, "Method"]) -> "Method":
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                raise ValueError(f"unknown method {value!r}") from None
        return cls(value)


@dataclass(frozen=True)
class PipelineOptions:
    pre_transform: Method = Method.IDBE
    block_size: int = DEFAULT_BLOCK_SIZE

    def __post_init__(self):
        object.__setattr__(self, "pre_transform", Method.parse(self.pre_transform))
        if not MIN_BLOCK_SIZE <= self.block_size <= MAX_BLOCK_SIZE:
            raise ValueError(
                f"block size {self.block_size} outside {MIN_BLOCK_SIZE}..{MAX_BLOCK_SIZE}")


DictResolver = Union[None, Dictionary, Mapping[int, Dictionary],
                     Callable[[int], Optional[Dictionary]]]

_star_cache: "weakref.WeakKeyDictionary[Dictionary, StarDictionary]" = weakref.WeakKeyDictionary()


def _star_dictionary(d: Dictionary) -> StarDictionary:
    sd = _star_cache.get(d)
    if sd is None:
        sd = _star_cache[d] = build_star_dictionary(d)
    return sd


def pre_encode(data: bytes, method: Method, d: Optional[Dictionary]) -> bytes:
    if method is Method.NONE:
        return data
    if d is None:
        raise MissingDictionaryError(f"method {method.name.lower()} needs a dictionary")
    if method is Method.IDBE:
        return idbe_encode(data, d)
    return star_encode(data, _star_dictionary(d))


def pre_decode(data: bytes, method: Method, d: Optional[Dictionary]) -> bytes:
    if method is Method.NONE:
        return data
    if method is Method.IDBE:
        return idbe_decode(data, d)
    return star_decode(data, _star_dictionary(d))


def compress_block(block: bytes) -> tuple[int, bytes]:
    """BWT, MTF, zero-run coding and range coding of one block."""
    b = bwt_forward(block)
    return b.primary_index, entropy_encode(rle0_encode(mtf_encode(b.data)))


def decompress_block(primary_index: int, payload: bytes, raw_length: int) -> bytes:
    symbols = entropy_decode(payload, max_symbols=raw_length + 1)
    last = rle0_decode(symbols)
    if len(last) != raw_length:
        raise CorruptPayloadError(
            f"block decoded to {len(last)} bytes, header says {raw_length}")
    if not 0 <= primary_index < raw_length:
        raise CorruptPayloadError(f"primary index {primary_index} out of range")
    return bwt_inverse(BwtBlock(mtf_decode(last), primary_index))


def compress(data: bytes, opts: PipelineOptions | None = None,
             d: Dictionary | None = None) -> bytes:
    opts = opts or PipelineOptions()
    method = opts.pre_transform
    data = pre_encode(bytes(data), method, d)
    checksum = d.checksum if method is not Method.NONE else 0
    out = [_HEADER.pack(MAGIC, VERSION, method, checksum, opts.block_size)]
    for start in range(0, len(data), opts.block_size):
        block = data[start:start + opts.block_size]
        primary, payload = compress_block(block)
        out.append(_RECORD.pack(len(block), primary, len(payload)))
        out.append(payload)
    out.append(b"\0\0\0\0")
    return b"".join(out)


def _resolve(resolver: DictResolver, checksum: int) -> Dictionary:
    if resolver is None:
        raise DictionaryMismatchError(
            f"container needs dictionary {checksum:016x} but none was supplied", 7)
    if isinstance(resolver, Dictionary):
        d = resolver
    elif isinstance(resolver, Mapping):
        d = resolver.get(checksum)
    else:
        d = resolver(checksum)
    if d is None or d.checksum != checksum:
        found = "none" if d is None else f"{d.checksum:016x}"
        raise DictionaryMismatchError(
            f"container needs dictionary {checksum:016x}, resolver gave {found}", 7)
    return d


def read_header(container: bytes) -> tuple[Method, int, int]:
    """Validate the fixed header; return (method, checksum, block_size)."""
    if container[:5] != MAGIC:
        raise BadMagicError(f"bad magic {bytes(container[:5])!r}", 0)
    if len(container) < _HEADER.size:
        raise CorruptBlockError("truncated container header", len(container))
    _, version, method, checksum, block_size = _HEADER.unpack_from(container)
    if version != VERSION:
        raise VersionMismatchError(f"unsupported format version {version}", 5)
    try:
        method = Method(method)
    except ValueError:
        raise ContainerError(f"unknown method tag {method}", 6) from None
    if not MIN_BLOCK_SIZE <= block_size <= MAX_BLOCK_SIZE:
        raise ContainerError(f"block size {block_size} out of range", 15)
    return method, checksum, block_size


def decompress(container: bytes, dict_resolver: DictResolver = None) -> bytes:
    container = bytes(container)
    method, checksum, block_size = read_header(container)
    d = _resolve(dict_resolver, checksum) if method is not Method.NONE else None

    blocks = []
    pos = _HEADER.size
    n = len(container)
    while True:
        if pos + 4 > n:
            raise CorruptBlockError("container ends inside a block record", pos)
        (raw_length,) = struct.unpack_from(">I", container, pos)
        if raw_length == 0:
            pos += 4
            break
        if pos + _RECORD.size > n:
            raise CorruptBlockError("container ends inside a block record", pos)
        _, primary, payload_length = _RECORD.unpack_from(container, pos)
        if raw_length > block_size:
            raise CorruptBlockError(f"block of {raw_length} bytes exceeds block size", pos)
        start = pos + _RECORD.size
        if start + payload_length > n:
            raise CorruptBlockError("block payload is truncated", start)
        try:
            blocks.append(decompress_block(
                primary, container[start:start + payload_length], raw_length))
        except (CorruptPayloadError, ValueError) as e:
            raise CorruptBlockError(f"corrupt block: {e}", pos) from e
        pos = start + payload_length
    if pos != n:
        raise CorruptBlockError(f"{n - pos} trailing bytes after the last block", pos)
    return pre_decode(b"".join(blocks), method, d)
