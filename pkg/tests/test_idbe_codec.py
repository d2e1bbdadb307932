import pytest
from hypothesis import given, settings, strategies as st

from idbe.dictionary import Dictionary, build_dictionary
from idbe.errors import CorruptStreamError, DanglingMarkerError, TruncatedCodeError, UnknownCodeError
from idbe.idbe_codec import Token, TokenKind, idbe_decode, idbe_encode, tokenize

D = build_dictionary([b"the cat and the dog and the fish"])


def reference_encode(data: bytes, d: Dictionary) -> bytes:
    """Byte-at-a-time transcription of the marker protocol."""
    out = bytearray()
    i, n = 0, len(data)
    while i < n:
        j = i
        while j < n and chr(data[j]).isascii() and chr(data[j]).isalpha():
            j += 1
        if j > i:
            word = data[i:j]
            i = j
            code = d.code_of.get(word) if len(word) > 1 else None
            if code is None:
                out += word
                continue
            out.append(250 + len(code))
            out += code
            if i < n:
                if data[i] == 0x20 and i + 1 < n:
                    i += 1
                else:
                    out.append(255)
            continue
        b = data[i]
        out.append(b)
        if b >= 251:
            out.append(b)
        i += 1
    return bytes(out)


def test_tokenize_examples():
    assert tokenize(b"") == []
    assert tokenize(b"ab1cd") == [Token(TokenKind.WORD, b"ab"), Token(TokenKind.CHAR, b"1"),
                                  Token(TokenKind.WORD, b"cd")]
    assert tokenize(b"x") == [Token(TokenKind.WORD, b"x")]


@given(st.binary(max_size=300))
def test_tokenize_concatenation(data):
    tokens = tokenize(data)
    assert b"".join(t.data for t in tokens) == data
    for a, b in zip(tokens, tokens[1:]):
        assert not (a.kind is TokenKind.WORD and b.kind is TokenKind.WORD)
    assert all(len(t.data) == 1 for t in tokens if t.kind is TokenKind.CHAR)


@pytest.mark.parametrize("plain, encoded", [
    (b"the cat", [251, 33, 251, 35]),
    (b"the zebra", [251, 33, 122, 101, 98, 114, 97]),
    (b"the.", [251, 33, 255, 46]),
    (bytes([97, 253, 98]), [97, 253, 253, 98]),
    (b"", []),
    (b"the", [251, 33]),
    (b"zebra the", list(b"zebra ") + [251, 33]),
    (b"the\nend", [251, 33, 255, 10] + list(b"end")),
])
def test_encode_decode_examples(plain, encoded):
    assert idbe_encode(plain, D) == bytes(encoded)
    assert idbe_decode(bytes(encoded), D) == plain


def test_trailing_space_after_code_is_kept():
    assert idbe_encode(b"the ", D) == bytes([251, 33, 255, 32])
    assert idbe_decode(bytes([251, 33, 255, 32]), D) == b"the "
    assert idbe_decode(idbe_encode(b"the  ", D), D) == b"the  "


def test_literal_255_after_code():
    # one 0xff literal after an absorbed space, and after a suppressed space
    assert idbe_encode(b"the \xff", D) == bytes([251, 33, 255, 255])
    assert idbe_encode(b"the\xff", D) == bytes([251, 33, 255, 255, 255])
    assert idbe_decode(bytes([251, 33, 255, 255]), D) == b"the \xff"
    assert idbe_decode(bytes([251, 33, 255, 255, 255]), D) == b"the\xff"


def test_doubled_literals_decode():
    assert idbe_decode(bytes([253, 253]), D) == bytes([253])
    assert idbe_decode(bytes([255, 255, 251, 251]), D) == bytes([255, 251])


@pytest.mark.parametrize("stream, error", [
    ([252, 33], TruncatedCodeError),
    ([251], TruncatedCodeError),
    ([251, 200], UnknownCodeError),
    ([97, 255, 98], DanglingMarkerError),
    ([255], DanglingMarkerError),
])
def test_decode_errors(stream, error):
    with pytest.raises(error):
        idbe_decode(bytes(stream), D)
    assert issubclass(error, CorruptStreamError)


def test_found_words_always_coded_even_when_longer():
    d = Dictionary.from_words([bytes([97 + i // 26, 97 + i % 26]) for i in range(300)])
    word = d.words[250]
    assert len(d.code_of[word]) == 2
    assert idbe_encode(word, d) == bytes([252]) + d.code_of[word]


def test_compression_effect_on_hits():
    for w in D.words:
        assert len(idbe_encode(w + b" x", D)) - 1 == len(D.code_of[w]) + 1


def test_not_found_word_keeps_space():
    assert idbe_encode(b"zebra cat", D) == b"zebra " + bytes([251, 35])


# random inputs drawn so that letters, spaces, punctuation and marker bytes
# sit next to each other often
_pieces = st.sampled_from([
    b"the", b"cat", b"and", b"dog", b"fish", b"zebra", b"a", b"The",
    b" ", b"  ", b".", b"\n", b"\t", b"\xfb", b"\xfc", b"\xfd", b"\xfe", b"\xff",
    b"\xff\xff", b"\x80", b"\x00", b"!", b"*",
])
texts = st.one_of(
    st.lists(_pieces, max_size=40).map(b"".join),
    st.binary(max_size=200),
)
dicts = st.lists(
    st.text(alphabet="abctheodgfsizAB", min_size=2, max_size=6), max_size=30, unique=True,
).map(lambda ws: Dictionary.from_words(w.encode() for w in ws))


@settings(max_examples=500)
@given(texts, dicts)
def test_round_trip(data, d):
    encoded = idbe_encode(data, d)
    assert idbe_decode(encoded, d) == data
    assert encoded == idbe_encode(data, d)


@settings(max_examples=300)
@given(texts)
def test_matches_reference_encoder(data):
    assert idbe_encode(data, D) == reference_encode(data, D)


def test_large_dictionary_round_trip():
    words = [bytes([97 + i // 17576, 97 + i // 676 % 26, 97 + i // 26 % 26, 97 + i % 26])
             for i in range(50000)]
    d = Dictionary.from_words(words)
    assert {len(c) for c in d.code_of.values()} == {1, 2, 3}
    text = b" ".join(words[::7]) + b". \xfe\xff end"
    assert idbe_decode(idbe_encode(text, d), d) == text
