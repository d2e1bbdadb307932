"""Dictionary-based text pre-transforms in front of a block-sorting compressor."""

from .dictionary import (
    DictConfig,
    Dictionary,
    assign_code,
    build_dictionary,
    dictionary_checksum,
    load_dictionary,
    loads_dictionary,
    save_dictionary,
    dumps_dictionary,
)
from .idbe_codec import Token, TokenKind, idbe_decode, idbe_encode, tokenize
from .pipeline import Method, PipelineOptions, compress, decompress
from .star import StarDictionary, build_star_dictionary, star_decode, star_encode, star_pattern

__version__ = "0.1.0"
