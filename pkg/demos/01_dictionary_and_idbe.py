# Build a word dictionary from some training text, then watch the IDBE
# transform replace dictionary words by short marker-prefixed codes.

from idbe import build_dictionary, idbe_decode, idbe_encode

GENESIS = b"""In the beginning God created the heaven and the earth. And the earth was \
without form, and void; and darkness was upon the face of the deep. And the Spirit of \
God moved upon the face of the waters.
And God said, Let there be light: and there was light.
And God saw the light, that it was good: and God divided the light from the darkness.
"""

d = build_dictionary([GENESIS])
print(f"{len(d)} words, checksum {d.checksum:016x}")

# the most frequent words get the one-byte codes 33, 34, ...
for word in d.words[:8]:
    print(f"  {word.decode():10s} -> {list(d.code_of[word])}")

encoded = idbe_encode(GENESIS, d)
print(f"\n{len(GENESIS)} bytes -> {len(encoded)} bytes after the transform")

# 251..254 announce a code of 1..4 bytes; 255 means "no space follows"
print(encoded[:60])

assert idbe_decode(encoded, d) == GENESIS
print("decoded text matches the original")
