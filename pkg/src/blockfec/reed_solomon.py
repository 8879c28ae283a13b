"""Reed-Solomon codes and their algebraic decoders.

Both decoders solve the key equation

    sigma(x) * sigma2(x) * S(x)  =  -omega(x)  (mod x^(n-k))

where sigma locates errors, sigma2 locates the (known) erasures, S
packs the syndromes R(beta^(m0+j)) low-first, and omega evaluates the
error magnitudes through the formal derivative of the full locator.
The root exponents may start at any offset m0; erased positions are
zeroed before syndromes are taken.

`pgz_decode` finds sigma by inverting the largest non-singular Hankel
matrix of generalized syndromes; `euclid_decode` finds it by running
the extended Euclidean recursion on (x^(n-k), sigma2*S) until the
remainder degree drops below the erasure-adjusted threshold.  Both
share the root search, value computation, and final re-verification:
a word is only ever emitted if its error polynomial reproduces every
syndrome, so the decoders never output a non-codeword.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import CyclicCode
from .errors import DegreeTooHigh, InvalidParams, LengthMismatch
from .linear import (
    DecodeOutcome,
    MatrixGF,
    ReceivedWord,
    _solve_square,
    as_received,
)
from .poly import Poly


@dataclass(frozen=True)
class KeyEquationState:
    """Internals of a decoding attempt, for inspection and tests."""

    syndrome: Poly        # S(x), coefficients S_{m0+j} low-first
    s_hat: Poly           # sigma2 * S, the generalized syndrome
    sigma: Poly           # error locator (monic; 1 when no errors)
    sigma2: Poly          # erasure locator (1 when no erasures)
    omega: Poly           # error evaluator

    @property
    def locator(self) -> Poly:
        return self.sigma * self.sigma2


class RSCode:
    """[n, k] Reed-Solomon code over GF(q) with n | q - 1, root offset
    m0, and optional shortening by `shorten_by` information symbols.

    Shortened codes expose length n - shorten_by; internally the
    suppressed zeros sit at positions k - shorten_by .. k - 1, between
    the information block and the redundancy.
    """

    def __init__(self, field, n: int, k: int, m0: int = 1, shorten_by: int = 0):
        if n < 2 or (field.q - 1) % n != 0:
            raise InvalidParams(f"n = {n} must divide q - 1 = {field.q - 1}")
        if not 0 < k < n:
            raise InvalidParams(f"need 0 < k < n, got [{n},{k}]")
        if not 0 <= shorten_by < k:
            raise InvalidParams(f"bad shortening {shorten_by}")
        self.field = field
        self.n = n
        self.k = k
        self.m0 = m0
        self.shorten_by = shorten_by
        self.beta = field.exp((field.q - 1) // n)
        self.g = Poly.from_roots(
            field, [field.pow(self.beta, m0 + i) for i in range(n - k)]
        )
        self._cyclic = CyclicCode(field, n, self.g)

    # -- shape ------------------------------------------------------------

    @property
    def n_out(self) -> int:
        return self.n - self.shorten_by

    @property
    def k_out(self) -> int:
        return self.k - self.shorten_by

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def parity_matrix(self) -> MatrixGF:
        f = self.field
        rows = [
            [f.pow(self.beta, (self.m0 + j) * i) for i in range(self.n)]
            for j in range(self.n - self.k)
        ]
        return MatrixGF(f, rows)

    # -- shortening plumbing ----------------------------------------------

    def _expand_word(self, w: ReceivedWord) -> ReceivedWord:
        """Insert the suppressed zero symbols of a shortened code."""
        l = self.shorten_by
        if len(w) != self.n_out:
            raise LengthMismatch(f"word length {len(w)} != {self.n_out}")
        if l == 0:
            return w
        cut = self.k - l
        symbols = w.symbols[:cut] + (0,) * l + w.symbols[cut:]
        erasures = frozenset(e if e < cut else e + l for e in w.erasures)
        return ReceivedWord(symbols, erasures)

    def _contract_word(self, symbols):
        l = self.shorten_by
        if l == 0:
            return tuple(symbols)
        cut = self.k - l
        return tuple(symbols[:cut]) + tuple(symbols[self.k:])

    # -- encoding -----------------------------------------------------------

    def encode(self, u, systematic: bool = True):
        u = tuple(u)
        if len(u) > self.k_out:
            raise DegreeTooHigh(f"message length {len(u)} > k = {self.k_out}")
        u = u + (0,) * (self.k_out - len(u))
        if self.shorten_by and not systematic:
            raise InvalidParams(
                "shortened codes only support systematic encoding"
            )
        full = u + (0,) * self.shorten_by
        c = self._cyclic.encode(full, systematic=systematic)
        return self._contract_word(c) if systematic else c

    # -- syndromes ------------------------------------------------------------

    def syndromes(self, word) -> Poly:
        """S(x) with S_{m0+j} as coefficient j (erasures zeroed)."""
        return self._syndromes_full(self._expand_word(as_received(word)))

    def _syndromes_full(self, w: ReceivedWord) -> Poly:
        f = self.field
        rpoly = Poly(f, w.symbols)
        coeffs = [
            rpoly(f.pow(self.beta, self.m0 + j)) for j in range(self.n - self.k)
        ]
        return Poly(f, coeffs)

    # -- decoding ---------------------------------------------------------------

    def pgz_decode(self, word, erasures=()) -> DecodeOutcome:
        return self._decode(word, erasures, solver=self._solve_pgz)

    def euclid_decode(self, word, erasures=()) -> DecodeOutcome:
        return self._decode(word, erasures, solver=self._solve_euclid)

    def _decode(self, word, erasures, solver) -> DecodeOutcome:
        f = self.field
        w = self._expand_word(as_received(word, erasures))
        nk = self.n - self.k
        t = len(w.erasures)
        if t > nk:
            return DecodeOutcome.failure()

        S = self._syndromes_full(w)
        if S.is_zero:
            # erased symbols zeroed are already consistent: no errors
            return self._emit(w, {}, None)

        sigma2 = Poly.from_roots(
            f, [f.pow(self.beta, -e) for e in sorted(w.erasures)]
        )
        s_hat = sigma2 * S
        solved = solver(s_hat, nk, t)
        if solved is None:
            return DecodeOutcome.failure()
        sigma, omega_hint = solved

        locator = sigma * sigma2
        # chien search over all positions
        roots = {}
        for i in range(self.n):
            x = f.pow(self.beta, -i)
            if locator(x) == 0:
                roots[i] = x
        if len(roots) != locator.degree:
            return DecodeOutcome.failure()

        if omega_hint is not None:
            omega = omega_hint
        else:
            omega = -(sigma * s_hat).truncate(int(locator.degree))
        if omega.degree >= locator.degree:
            return DecodeOutcome.failure()

        # error magnitudes through the derivative of the full locator
        deriv = locator.derivative()
        values = {}
        for i, x in roots.items():
            num = f.mul(omega(x), f.pow(x, self.m0 - 1)) if self.m0 != 1 else omega(x)
            den = deriv(x)
            if den == 0:
                return DecodeOutcome.failure()
            values[i] = f.div(num, den)

        # re-verify every syndrome before emitting
        for j in range(nk):
            xj = f.pow(self.beta, self.m0 + j)
            acc = 0
            for i, e in values.items():
                acc = f.add(acc, f.mul(e, f.pow(xj, i)))
            if acc != S.coeff(j):
                return DecodeOutcome.failure()

        state = KeyEquationState(S, s_hat, sigma, sigma2, omega)
        return self._emit(w, values, state)

    def _emit(self, w: ReceivedWord, values: dict, state) -> DecodeOutcome:
        f = self.field
        fixed = list(w.symbols)
        err = [0] * self.n
        for i, e in values.items():
            fixed[i] = f.sub(fixed[i], e)
            err[i] = e
        # a shortened code cannot have symbols in the suppressed block
        if any(fixed[self.k - self.shorten_by + j] for j in range(self.shorten_by)):
            return DecodeOutcome.failure()
        codeword = self._contract_word(fixed)
        return DecodeOutcome(
            "corrected",
            codeword=codeword,
            error_vector=tuple(err),
            error_positions=tuple(sorted(set(values) | w.erasures)),
            info=codeword[: self.k_out],
            key_state=state,
        )

    # -- key-equation solvers ----------------------------------------------------

    def _solve_pgz(self, s_hat: Poly, nk: int, t: int):
        """Largest-nonsingular-Hankel-matrix solver.  Returns
        (sigma, None) or None when no consistent locator exists."""
        f = self.field
        c = s_hat.coeff
        for r in range((nk - t) // 2, 0, -1):
            rows = [[c(t + 1 + i + j) for j in range(r)] for i in range(r)]
            rhs = [f.neg(c(t + i)) for i in range(r)]
            sol = _solve_square(f, rows, rhs)
            if sol is None:
                continue  # singular: fewer errors than r
            # sol = (sigma_{r-1}, ..., sigma_0)
            coeffs = list(reversed(sol)) + [1]
            return Poly(f, coeffs), None
        # no invertible matrix: consistent only if zero errors remain
        if all(c(j) == 0 for j in range(t, nk)):
            return Poly.one(f), None
        return None

    def _solve_euclid(self, s_hat: Poly, nk: int, t: int):
        """Extended-Euclid solver; stops at the erasure-adjusted degree
        threshold and normalizes the tracked coefficient to be monic."""
        threshold = (nk - t) // 2 + t - 1
        r, tpoly, _ = euclid_key_equation(self.field, nk, s_hat, threshold)
        if tpoly.is_zero:
            return None
        lam = self.field.inv(tpoly.lc)
        sigma = tpoly.scale(lam)
        omega = -r.scale(lam)
        return sigma, omega


def euclid_key_equation(field, nk: int, s_hat: Poly, threshold):
    """Run r_i = r_{i-2} - q_i r_{i-1} on (x^(n-k), s_hat), tracking the
    coefficient t_i that multiplies s_hat.  Stops at the first remainder
    of degree <= threshold.  Returns (r_i, t_i, trace) where trace lists
    the (r_i, q_i, t_i) rows of the recursion.
    """
    r_prev, r_cur = Poly.monomial(field, nk), s_hat
    t_prev, t_cur = Poly.zero(field), Poly.one(field)
    trace = []
    if r_cur.degree <= threshold:
        return r_cur, t_cur, trace
    while True:
        q, r = divmod(r_prev, r_cur)
        t = t_prev - q * t_cur
        trace.append((r, q, t))
        if r.degree <= threshold:
            return r, t, trace
        r_prev, r_cur = r_cur, r
        t_prev, t_cur = t_cur, t
