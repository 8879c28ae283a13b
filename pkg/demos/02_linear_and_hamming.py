"""Linear block codes end to end on a [5,2,3] code and a Hamming code.

Shows encoding, syndromes, the full standard array, coset-leader
decoding, maximum-likelihood ties, and the sphere-packing report.
"""

from blockfec import (
    FiniteField,
    HammingCode,
    LinearCode,
    StandardArray,
    ml_decode,
)

gf2 = FiniteField(2)

# a shortened Hamming code of length 5: three parity checks
H = [[0, 1, 1, 0, 0],
     [1, 1, 0, 1, 0],
     [1, 0, 0, 0, 1]]
code = LinearCode.from_parity(gf2, H)
print(f"code: {code}, d = {code.min_distance()}")
print(f"generator rows: {code.G.rows}")
print(f"encode 11 -> {''.join(map(str, code.encode((1, 1))))}")

arr = StandardArray(code)
print("\nstandard array (leader first, syndrome last):")
header = ["message"] + ["".join(map(str, m)) for m in arr.messages] + ["synd"]
print("  " + "  ".join(h.rjust(7) for h in header))
for row, s in zip(arr.rows, arr.syndromes):
    rendered = ["".join(map(str, w)) for w in row] + ["".join(map(str, s))]
    print("  " + "  ".join(x.rjust(7) for x in [""] + rendered))

r = (1, 0, 1, 1, 1)
out = arr.decode(r)
print(f"\ndecode 10111: syndrome {code.syndrome(r)} -> "
      f"codeword {''.join(map(str, out.codeword))}, message "
      f"{''.join(map(str, out.info))}")

best, dist = ml_decode(code, (0, 0, 1, 1, 1))
print(f"ML decode 00111: {len(best)} codewords at distance {dist}: "
      + ", ".join("".join(map(str, c)) for c in best))

print(f"\nbounds: {code.bounds_report()}")

ham = HammingCode(3)
print(f"\nHamming [7,4]: bounds {ham.code.bounds_report()}")
word = list(ham.encode((1, 0, 1, 1)))
word[4] ^= 1
fixed = ham.decode(tuple(word))
print(f"flip bit 4 of a codeword -> decoder reports position "
      f"{fixed.error_positions[0]} and returns "
      f"{''.join(map(str, fixed.codeword))}")
