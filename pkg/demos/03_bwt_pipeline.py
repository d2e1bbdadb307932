# Follow one block through the backend stages and see where the bytes go.

import numpy as np

from idbe.pipeline import (bwt_forward, bwt_inverse, entropy_encode, mtf_encode,
                           rle0_encode)

print(bwt_forward(b"banana"))   # last column 'nnbaaa', original row 3

text = (b"The quick brown fox jumps over the lazy dog. " * 50
        + b"Pack my box with five dozen liquor jugs. " * 50)

block = bwt_forward(text)
print(block.data[:80])          # long runs of equal bytes

mtf = mtf_encode(block.data)
print("share of zeros after move-to-front:", np.mean(np.frombuffer(mtf, np.uint8) == 0))

symbols = rle0_encode(mtf)
print(f"{len(mtf)} bytes -> {len(symbols)} run-length symbols")

payload = entropy_encode(symbols)
print(f"{len(text)} bytes -> {len(payload)} coded bytes, "
      f"{8 * len(payload) / len(text):.3f} bits per character")

assert bwt_inverse(block) == text
