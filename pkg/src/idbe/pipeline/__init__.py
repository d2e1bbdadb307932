"""Backend compressor: BWT -> MTF -> zero-run coding -> range coding."""

from .bwt import BwtBlock, bwt_forward, bwt_inverse, rotation_order
from .container import (
    DEFAULT_BLOCK_SIZE,
    Method,
    PipelineOptions,
    compress,
    decompress,
    read_header,
)
from .entropy import EOB, entropy_decode, entropy_encode
from .mtf import RUNA, RUNB, mtf_decode, mtf_encode, rle0_decode, rle0_encode

__all__ = [
    "BwtBlock", "bwt_forward", "bwt_inverse", "rotation_order",
    "DEFAULT_BLOCK_SIZE", "Method", "PipelineOptions", "compress", "decompress",
    "read_header", "EOB", "entropy_decode", "entropy_encode",
    "RUNA", "RUNB", "mtf_decode", "mtf_encode", "rle0_decode", "rle0_encode",
]
