"""BCH codes as subfield subcodes of Reed-Solomon codes.

The generator is the product of the distinct minimal polynomials of the
designed consecutive roots; decoding runs in the big field through the
Reed-Solomon machinery and, for binary codes, skips the evaluator and
simply flips the located bits.
"""

from __future__ import annotations

from .errors import InvalidParams, SubfieldViolation
from .cyclic import CyclicCode
from .galois import minimal_polynomial, subfield_elements
from .linear import DecodeOutcome, as_received
from .poly import Poly
from .reed_solomon import RSCode


class BCHCode:
    """Codewords of the underlying [n, n-(designed_d-1)] RS code whose
    symbols all lie in the subfield GF(sub_order)."""

    def __init__(self, field, sub_order: int, designed_d: int, m0: int = 1):
        n = field.q - 1
        if not 2 <= designed_d <= n:
            raise InvalidParams(f"designed distance {designed_d} out of range")
        self.field = field
        self.sub_order = sub_order
        self.n = n
        self.designed_d = designed_d
        self.m0 = m0
        self.subfield = subfield_elements(field, sub_order)

        g = Poly.one(field)
        seen = set()
        for j in range(m0, m0 + designed_d - 1):
            root = field.exp(j)
            if root in seen:
                continue
            f_min = minimal_polynomial(field, root, sub_order)
            seen.update(r for r in field.nonzero() if f_min(r) == 0)
            g = g * f_min
        self.g = g
        self.k = n - int(g.degree)
        self.rs = RSCode(field, n, n - (designed_d - 1), m0=m0)
        self._cyclic = CyclicCode(field, n, g)

    def encode(self, u, systematic: bool = True):
        u = tuple(u)
        if any(x not in self.subfield for x in u):
            raise SubfieldViolation("message symbols must lie in the subfield")
        return self._cyclic.encode(u, systematic=systematic)

    def decode(self, word, erasures=()) -> DecodeOutcome:
        """Decode up to the designed distance via the big-field solver."""
        w = as_received(word, erasures)
        if any(x not in self.subfield for x in w.symbols):
            raise SubfieldViolation("received symbols must lie in the subfield")
        if self.sub_order == 2 and not w.erasures:
            out = self._decode_binary(w)
        else:
            out = self.rs.euclid_decode(w)
        if out.corrected and any(x not in self.subfield for x in out.codeword):
            raise SubfieldViolation("corrected word left the subfield")
        if out.corrected:
            out = DecodeOutcome(
                "corrected",
                codeword=out.codeword,
                error_vector=out.error_vector,
                error_positions=out.error_positions,
                info=out.codeword[: self.k],
                key_state=out.key_state,
            )
        return out

    def _decode_binary(self, w) -> DecodeOutcome:
        """Binary shortcut: locate the errors, flip the bits."""
        f = self.field
        rs = self.rs
        S = rs.syndromes(w)
        if S.is_zero:
            return DecodeOutcome(
                "corrected", codeword=w.symbols,
                error_vector=(0,) * self.n, info=w.symbols[: self.k],
            )
        solved = rs._solve_euclid(S, rs.n - rs.k, 0)
        if solved is None:
            return DecodeOutcome.failure()
        sigma, omega = solved
        roots = [i for i in range(self.n) if sigma(f.pow(rs.beta, -i)) == 0]
        if len(roots) != sigma.degree:
            return DecodeOutcome.failure()
        fixed = list(w.symbols)
        for i in roots:
            fixed[i] ^= 1
        check = rs.syndromes(tuple(fixed))
        if not check.is_zero:
            return DecodeOutcome.failure()
        err = tuple(1 if i in set(roots) else 0 for i in range(self.n))
        from .reed_solomon import KeyEquationState
        state = KeyEquationState(S, S, sigma, Poly.one(f), omega)
        return DecodeOutcome(
            "corrected", codeword=tuple(fixed), error_vector=err,
            error_positions=tuple(sorted(roots)), info=tuple(fixed[: self.k]),
            key_state=state,
        )

    def __repr__(self):
        return (f"BCHCode[{self.n},{self.k}] over GF({self.sub_order}) "
                f"designed_d={self.designed_d}")
