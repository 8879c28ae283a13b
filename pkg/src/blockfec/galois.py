"""Finite fields GF(p^nu) with full log/antilog tables.

An element of GF(p^nu) is stored as a plain int in ``range(q)`` that
packs its coefficient vector (a_0, a_1, ..., a_{nu-1}) in radix p:
``a_0 + a_1*p + a_2*p^2 + ...``.  For p = 2 this makes elements the
usual bitmask integers and addition a XOR.  Multiplication goes through
the log/antilog tables of a primitive element, so the defining
polynomial must be primitive, not merely irreducible.

The helpers at module level work on polynomials over the prime field
GF(p) represented as lists of ints (lowest degree first); they are used
to validate and search defining polynomials before a field exists.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd

from .errors import (
    DivisionByZero,
    InvalidSubfield,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
    OrderMismatch,
    TooLarge,
)
from .poly import Poly

MAX_FIELD_ORDER = 1 << 16

# Defaults pinned so that generated tables reproduce the classical
# textbook tables digit for digit.
_DEFAULT_MODULUS = {
    (2, 3): (1, 1, 0, 1),              # 1 + x + x^3
    (2, 4): (1, 1, 0, 0, 1),           # 1 + x + x^4
    (3, 2): (2, 1, 1),                 # 2 + x + x^2
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),  # 1 + x^2 + x^3 + x^4 + x^8
}

LOG_ZERO = float("-inf")


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


# ----------------------------------------------------------------------
# Polynomials over GF(p): lists of ints, lowest degree first.
# ----------------------------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        factor = (rem[-1] * inv_lead) % p
        quo[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bi) % p
        rem = _trim(rem)
    return _trim(quo), rem


def _monic_polys(p, deg):
    """All monic degree-`deg` polynomials over GF(p), lexicographic in
    their low-first coefficient vector."""
    for lows in product(range(p), repeat=deg):
        yield list(lows) + [1]


def is_irreducible(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    f = _trim(f)
    if len(f) - 1 < 1:
        return False
    for d in range(1, (len(f) - 1) // 2 + 1):
        for g in _monic_polys(p, d):
            if not _pdivmod(f, g, p)[1]:
                return False
    return True


def _order_of_x(f, p: int) -> int:
    """Multiplicative order of x modulo the irreducible polynomial f."""
    one = [1]
    acc = [0, 1]  # x
    order = 1
    while _trim(acc) != one:
        acc = _pdivmod(_pmul(acc, [0, 1], p), f, p)[1]
        order += 1
        if order > p ** (len(f) - 1):
            raise NotIrreducible(f"{f} has no well-defined order; not irreducible")
    return order


def is_primitive(f, p: int) -> bool:
    """True iff the residue class of x mod f generates the whole
    multiplicative group.  Requires f irreducible."""
    nu = len(_trim(f)) - 1
    return _order_of_x(_trim(f), p) == p**nu - 1


def default_modulus(p: int, nu: int):
    """The pinned default primitive polynomial for (p, nu), falling back
    to the lexicographically smallest one by coefficient vector."""
    if (p, nu) in _DEFAULT_MODULUS:
        return _DEFAULT_MODULUS[(p, nu)]
    for f in _monic_polys(p, nu):
        if f[0] == 0:
            continue  # divisible by x
        if is_irreducible(f, p) and is_primitive(f, p):
            return tuple(f)
    raise NotPrimitive(f"no primitive polynomial of degree {nu} over GF({p})")


def _smallest_generator(p: int) -> int:
    for g in range(2, p):
        k, acc = 1, g
        while acc != 1:
            acc = (acc * g) % p
            k += 1
        if k == p - 1:
            return g
    return 1  # p == 2


class FiniteField:
    """GF(p^nu) backed by log/antilog tables.

    Parameters
    ----------
    p : prime characteristic
    nu : extension degree (>= 1)
    modulus : coefficients of the defining polynomial, lowest first,
        length nu + 1 and monic; None selects the pinned default.
        Must be primitive.  Ignored (and required absent) for nu = 1.
    """

    def __init__(self, p: int, nu: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if nu < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**nu
        if q > MAX_FIELD_ORDER:
            raise TooLarge(f"field order {q} exceeds cap {MAX_FIELD_ORDER}")
        self.p = p
        self.nu = nu
        self.q = q

        if nu == 1:
            if modulus is not None:
                raise ValueError("prime fields take no defining polynomial")
            self.modulus = None
            g = _smallest_generator(p)
            exp = [1] * (q - 1)
            for i in range(1, q - 1):
                exp[i] = (exp[i - 1] * g) % p
        else:
            if modulus is None:
                modulus = default_modulus(p, nu)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != nu + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {nu}")
            if not is_irreducible(list(modulus), p):
                raise NotIrreducible(f"{list(modulus)} factors over GF({p})")
            if not is_primitive(list(modulus), p):
                raise NotPrimitive(
                    f"{list(modulus)} is irreducible but not primitive"
                )
            self.modulus = modulus
            exp = self._build_exp_table()

        self._exp = exp
        log = [None] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._log = log
        self.alpha = exp[1] if q > 2 else 1

        if p == 2:
            self._add_table = None
        elif q <= 256:
            self._add_table = [
                [self._add_slow(a, b) for b in range(q)] for a in range(q)
            ]
        else:
            self._add_table = None
        self._neg_table = [self._neg_slow(a) for a in range(q)] if p != 2 else None

    def _build_exp_table(self):
        p, nu, q = self.p, self.nu, self.q
        mod = self.modulus
        exp = [0] * (q - 1)
        vec = [1] + [0] * (nu - 1)
        for i in range(q - 1):
            exp[i] = self._pack(vec)
            # multiply by x, reduce by the modulus
            carry = vec[-1]
            vec = [0] + vec[:-1]
            if carry:
                for j in range(nu):
                    vec[j] = (vec[j] - carry * mod[j]) % p
        return exp

    # -- element packing ------------------------------------------------

    def _pack(self, coeffs) -> int:
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + (c % self.p)
        return val

    def element(self, coeffs) -> int:
        """Build an element from its coefficient vector (low first)."""
        coeffs = list(coeffs)
        if len(coeffs) != self.nu:
            raise ValueError(f"need {self.nu} coefficients, got {len(coeffs)}")
        return self._pack(coeffs)

    def coeffs(self, a: int):
        """Coefficient vector (a_0, ..., a_{nu-1}) of an element."""
        out = []
        for _ in range(self.nu):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    # -- arithmetic -----------------------------------------------------

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        val, mult = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            val += ((ra + rb) % p) * mult
            mult *= p
        return val

    def _neg_slow(self, a: int) -> int:
        p = self.p
        val, mult = 0, 1
        while a:
            a, ra = divmod(a, p)
            val += ((-ra) % p) * mult
            mult *= p
        return val

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.q - 1
        return self._exp[(self._log[a] + self._log[b]) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        n = self.q - 1
        return self._exp[(n - self._log[a]) % n]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        n = self.q - 1
        return self._exp[(self._log[a] - self._log[b]) % n]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise DivisionByZero("negative power of zero")
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def exp(self, e: int) -> int:
        """alpha^e (exponent reduced mod q - 1)."""
        return self._exp[e % (self.q - 1)]

    def log(self, a: int):
        """Logarithm of a, or LOG_ZERO (-inf) for the zero element."""
        if a == 0:
            return LOG_ZERO
        return self._log[a]

    def order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        return (self.q - 1) // gcd(self.q - 1, self._log[a])

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    # -- rendering ------------------------------------------------------

    def format_element(self, a: int, style: str = "log") -> str:
        if style == "vector":
            sep = "" if self.p <= 10 else "."
            return sep.join(str(c) for c in self.coeffs(a))
        if a == 0:
            return "0"
        k = self._log[a]
        return "1" if k == 0 else f"a{k}"

    def parse_element(self, text: str) -> int:
        """Accepts '0', '1', 'a', 'a<k>', a radix-p digit group, or
        (for 8-bit byte fields) a 0x-prefixed hex byte."""
        text = text.strip()
        if text == "0":
            return 0
        if text == "1":
            return 1
        if text.startswith("0x") and self.p == 2 and self.nu == 8:
            val = int(text, 16)
            if not 0 <= val < self.q:
                raise ValueError(f"{text!r} out of range for {self}")
            return val
        if text in ("a", "A"):
            return self.exp(1)
        if text[0] in "aA" and text[1:].lstrip("-").isdigit():
            return self.exp(int(text[1:]))
        if self.nu == 1 and text.isdigit() and int(text) < self.p:
            return int(text)
        digits = text.split(".") if "." in text else list(text)
        if len(digits) == self.nu and all(d.isdigit() for d in digits):
            vals = [int(d) for d in digits]
            if all(v < self.p for v in vals):
                return self.element(vals)
        raise ValueError(f"cannot parse {text!r} as an element of {self}")

    def poly_one_letter(self, a: int) -> str:
        """Element as a polynomial in 'a', e.g. '1+2a' over GF(9)."""
        if a == 0:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                power = "a" if i == 1 else f"a^{i}"
                terms.append(coeff + power)
        return "+".join(terms)

    def spec_string(self) -> str:
        """Canonical 'GF(p^nu)[c0,...,cnu]' description."""
        if self.modulus is None:
            return f"GF({self.p}^1)"
        inner = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.nu})[{inner}]"

    def __repr__(self):
        return f"FiniteField({self.spec_string()})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.nu, self.modulus)
            == (other.p, other.nu, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.nu, self.modulus))


@lru_cache(maxsize=None)
def GF(p: int, nu: int = 1, modulus=None) -> FiniteField:
    """Cached field constructor; `modulus` must be hashable (tuple)."""
    return FiniteField(p, nu, modulus)


# ----------------------------------------------------------------------
# Subfields, conjugacy, minimal polynomials, isomorphisms.
# ----------------------------------------------------------------------

def _subfield_degree(field: FiniteField, q_sub: int) -> int:
    """Return b' where q_sub = p^b', validating subfield structure."""
    p, b = field.p, field.nu
    bp, rest = 0, q_sub
    while rest % p == 0:
        rest //= p
        bp += 1
    if rest != 1 or bp < 1 or b % bp != 0:
        raise InvalidSubfield(f"GF({q_sub}) is not a subfield of GF({field.q})")
    return bp


def subfield_elements(field: FiniteField, q_sub: int) -> frozenset:
    """{0} together with the powers of alpha^((q-1)/(q_sub-1))."""
    _subfield_degree(field, q_sub)
    step = (field.q - 1) // (q_sub - 1)
    return frozenset([0] + [field.exp(step * i) for i in range(q_sub - 1)])


def conjugacy_class(field: FiniteField, beta: int, q_sub: int) -> tuple:
    """Orbit of beta under repeated q_sub-th powers, in orbit order."""
    _subfield_degree(field, q_sub)
    out = [beta]
    nxt = field.pow(beta, q_sub) if beta else 0
    while nxt != beta:
        out.append(nxt)
        nxt = field.pow(nxt, q_sub)
    return tuple(out)


def minimal_polynomial(field: FiniteField, beta: int, q_sub: int) -> Poly:
    """Monic product of (x - gamma) over the conjugates of beta; the
    coefficients land in the subfield of order q_sub."""
    cls = conjugacy_class(field, beta, q_sub)
    f = Poly.from_roots(field, cls)
    members = subfield_elements(field, q_sub)
    assert all(c in members for c in f.coeffs), "conjugate product left subfield"
    return f


def factor_cyclotomic(field: FiniteField, q_sub: int):
    """Distinct minimal polynomials of the nonzero elements; their
    product is x^(q-1) - 1."""
    seen = set()
    factors = []
    for a in field.nonzero():
        if a in seen:
            continue
        cls = conjugacy_class(field, a, q_sub)
        seen.update(cls)
        factors.append(minimal_polynomial(field, a, q_sub))
    factors.sort(key=lambda f: (len(f.coeffs), f.coeffs))
    prod = Poly.one(field)
    for f in factors:
        prod = prod * f
    target = Poly.monomial(field, field.q - 1) - Poly.one(field)
    assert prod == target, "cyclotomic factors do not multiply back"
    return factors


def field_isomorphism(f1: FiniteField, f2: FiniteField) -> dict:
    """Map h: f1 -> f2 with h(alpha) = beta^i, where beta^i is the
    smallest primitive power whose minimal polynomial over GF(p) equals
    f1's defining polynomial.  Returned as an element-to-element dict."""
    if f1.q != f2.q:
        raise OrderMismatch(f"|{f1}| != |{f2}|")
    if f1.nu == 1:
        return {a: a for a in f1.elements()}
    n = f1.q - 1
    for i in range(1, n):
        if gcd(i, n) != 1:
            continue
        gamma = f2.exp(i)
        # evaluate f1's defining polynomial (GF(p) coefficients embed
        # directly as low-digit elements) at gamma inside f2
        acc = 0
        for c in reversed(f1.modulus):
            acc = f2.add(f2.mul(acc, gamma), c)
        if acc == 0:
            h = {0: 0}
            for j in range(n):
                h[f1.exp(j)] = f2.exp(i * j % n)
            return h
    raise OrderMismatch("no image of alpha found; fields not isomorphic")
