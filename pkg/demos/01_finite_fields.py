"""Walk through finite-field construction and arithmetic.

Builds GF(8), GF(16) and GF(9), prints their log/antilog tables, and
shows conjugacy classes, minimal polynomials and an isomorphism between
two presentations of the same field.
"""

from blockfec import (
    FiniteField,
    conjugacy_class,
    factor_cyclotomic,
    field_isomorphism,
    minimal_polynomial,
)


def print_table(field):
    print(f"\n{field.spec_string()}")
    print(f"{'vector':>8} {'poly':>12} {'log':>5}")
    elements = [0] + [field.exp(i) for i in range(field.q - 1)]
    for a in elements:
        lg = field.log(a)
        print(f"{field.format_element(a, 'vector'):>8} "
              f"{field.poly_one_letter(a):>12} "
              f"{'-inf' if a == 0 else lg:>5}")


gf8 = FiniteField(2, 3)     # defined by 1 + x + x^3
gf16 = FiniteField(2, 4)    # defined by 1 + x + x^4
gf9 = FiniteField(3, 2)     # defined by 2 + x + x^2

print_table(gf8)
print_table(gf9)

# multiplying via logarithms: 101 * 111 in GF(8)
a, b = gf8.element([1, 0, 1]), gf8.element([1, 1, 1])
print(f"\n101 * 111 = {gf8.format_element(gf8.mul(a, b), 'vector')}"
      f"  (logs {gf8.log(a)} + {gf8.log(b)} mod 7 = {gf8.log(gf8.mul(a, b))})")

# conjugacy classes of GF(16) over GF(2) and the factorization they induce
print("\nconjugacy classes of GF(16) over GF(2):")
seen = set()
for x in gf16.nonzero():
    if x in seen:
        continue
    cls = conjugacy_class(gf16, x, 2)
    seen.update(cls)
    logs = sorted(gf16.log(c) for c in cls)
    print(f"  {{a^{logs}}} -> minimal polynomial {minimal_polynomial(gf16, x, 2)!r}")

print("\nfactors of x^15 - 1 over GF(2):")
for f in factor_cyclotomic(gf16, 2):
    print(f"  {f!r}")

# two presentations of GF(9) and the map between them
other = FiniteField(3, 2, (2, 2, 1))
h = field_isomorphism(gf9, other)
print(f"\nisomorphism onto the field defined by 2 + 2x + x^2:")
print(f"  alpha -> beta^{other.log(h[gf9.exp(1)])}")
