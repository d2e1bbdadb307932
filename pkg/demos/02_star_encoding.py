# Star encoding keeps every word's length but turns its letters into '*'
# padding plus a short base-26 rank, so frequent words become pure stars.

from idbe import build_dictionary, build_star_dictionary, star_decode, star_encode

ROMEO = b"""But soft, what light through yonder window breaks?
It is the East, and Iuliet is the Sunne,
Arise faire Sun and kill the enuious Moone,
Who is already sicke and pale with griefe,
That thou her Maid art far more faire then she
"""

d = build_dictionary([ROMEO])
sd = build_star_dictionary(d)
for length, words in list(sd.groups.items())[:3]:
    print(length, [(w.decode(), sd.pattern_of[w].decode()) for w in words[:4]])

encoded = star_encode(ROMEO, sd)
print()
print(encoded.decode())
assert len(encoded) == len(ROMEO)
assert star_decode(encoded, sd) == ROMEO
