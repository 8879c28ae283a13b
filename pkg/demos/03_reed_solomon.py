"""Reed-Solomon encoding and decoding over GF(8) and GF(16).

Corrupts codewords with errors and erasures and walks both decoders
through the key-equation internals they expose.
"""

import random

from blockfec import FiniteField, RSCode

gf8 = FiniteField(2, 3)
rs = RSCode(gf8, 7, 3)
print(f"[7,3] over GF(8): g = {rs.g!r}, distance {rs.d}")

u = (gf8.exp(6), gf8.exp(2), gf8.exp(5))
c = rs.encode(u)
print("systematic codeword:",
      " ".join(gf8.format_element(x, "vector") for x in c))

# two symbol errors
word = list(c)
word[0] = gf8.add(word[0], gf8.exp(4))
word[2] = gf8.add(word[2], gf8.exp(5))
out = rs.pgz_decode(tuple(word))
ks = out.key_state
print(f"\nafter 2 errors: syndromes {ks.syndrome!r}")
print(f"  error locator  {ks.sigma!r}")
print(f"  error evaluator {ks.omega!r}")
print(f"  errors at {out.error_positions}, corrected back: "
      f"{out.codeword == c}")

out2 = rs.euclid_decode(tuple(word))
print(f"  Euclid agrees with the matrix solver: {out2.codeword == out.codeword}")

# erasures are cheaper than errors: 2s + t <= n - k
word = list(c)
for pos in (1, 3, 4, 6):
    word[pos] = 0
out = rs.euclid_decode(tuple(word), erasures=[1, 3, 4, 6])
print(f"\nfour erasures, zero errors -> recovered: {out.codeword == c}")

# a shortened code over GF(16) used byte-wise
gf16 = FiniteField(2, 4)
short = RSCode(gf16, 15, 9, shorten_by=5)
print(f"\nshortened [{short.n_out},{short.k_out}] over GF(16)")
rng = random.Random(0)
msg = tuple(rng.randrange(16) for _ in range(4))
cw = list(short.encode(msg))
for pos in rng.sample(range(10), 3):
    cw[pos] = gf16.add(cw[pos], rng.randrange(1, 16))
fixed = short.euclid_decode(tuple(cw))
print(f"three byte errors corrected: {fixed.info == msg}; "
      f"positions {fixed.error_positions} (internal indexing)")
