"""Binary multi-error correction: BCH codes and the Golay code."""

import random

from blockfec import BCHCode, FiniteField, GolayCode

gf16 = FiniteField(2, 4)

print("binary BCH codes of length 15 by designed distance:")
for d in (3, 5, 7):
    code = BCHCode(gf16, 2, d)
    print(f"  designed d={d}: [{code.n},{code.k}], generator {code.g!r}")

code = BCHCode(gf16, 2, 7)
u = (1, 1, 0, 1, 0)
c = code.encode(u)
word = list(c)
for pos in (2, 7, 11):
    word[pos] ^= 1
out = code.decode(tuple(word))
print(f"\nthree bit flips at (2, 7, 11) -> located {out.error_positions}, "
      f"recovered: {out.codeword == c}")
print(f"  error locator {out.key_state.sigma!r} "
      "(binary decoding skips the evaluator and just flips bits)")

golay = GolayCode("G24")
rng = random.Random(1)
u = tuple(rng.randrange(2) for _ in range(12))
c = golay.encode(u)
word = list(c)
for pos in rng.sample(range(24), 3):
    word[pos] ^= 1
out = golay.decode(tuple(word))
print(f"\nGolay [24,12,8]: 3 flips corrected: {out.info == u}")

word = list(c)
for pos in rng.sample(range(24), 4):
    word[pos] ^= 1
out4 = golay.decode(tuple(word))
print(f"4 flips are detected, never miscorrected: verdict {out4.verdict!r}")

g23 = GolayCode("G23")
print(f"[23,12,7] is perfect: {g23.code.bounds_report()['perfect']} "
      f"(sphere of radius 3 holds {g23.code.sphere_size(3)} words)")
