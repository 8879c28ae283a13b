"""Burst-error modeling, interleaving, product codes, and the
redundancy bound for burst correction.

A burst of length l is a vector whose nonzero entries fall in l
cyclically consecutive positions with nonzero first and last entries.
Interleaving to depth m spreads any burst of up to m symbols across m
independent codewords; a product code adds a second decoding dimension
whose erasure capability mops up rows the inner code gives up on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpan, LengthMismatch, TooLarge
from .linear import DecodeOutcome, as_received


@dataclass(frozen=True)
class BurstPattern:
    """A cyclic burst: `values` occupy positions start..start+len-1
    (mod n) and must have nonzero endpoints."""

    n: int
    start: int
    values: tuple

    def __post_init__(self):
        l = len(self.values)
        if not 1 <= l <= self.n:
            raise InvalidSpan(f"burst length {l} out of range")
        if self.values[0] == 0 or self.values[-1] == 0:
            raise InvalidSpan("burst endpoints must be nonzero")
        if not 0 <= self.start < self.n:
            raise InvalidSpan(f"start {self.start} out of range")

    @property
    def length(self) -> int:
        return len(self.values)

    def vector(self) -> tuple:
        v = [0] * self.n
        for i, x in enumerate(self.values):
            v[(self.start + i) % self.n] = x
        return tuple(v)


def burst_span(v) -> int:
    """Length of the shortest cyclic window containing all nonzero
    entries (0 for the zero vector)."""
    n = len(v)
    support = [i for i, x in enumerate(v) if x]
    if not support:
        return 0
    if len(support) == n:
        return n
    # the minimal window is n minus the largest run of zeros
    gaps = []
    for a, b in zip(support, support[1:] + [support[0] + n]):
        gaps.append(b - a - 1)
    return n - max(gaps)


def is_burst(v, l: int) -> bool:
    """True iff v is a (nonzero) burst of length at most l."""
    if not 1 <= l <= len(v):
        raise InvalidSpan(f"span {l} out of range")
    s = burst_span(v)
    return 0 < s <= l


class InterleavedCode:
    """Depth-m interleave of a base code: column j of the n x m array
    is a base codeword and symbols are serialized in row order, so a
    serial burst of up to m symbols hits each column at most once."""

    def __init__(self, base, depth: int):
        if depth < 1:
            raise InvalidSpan("depth must be >= 1")
        self.base = base
        self.depth = depth
        self.n = base.n_out if hasattr(base, "n_out") else base.n
        self.k = base.k_out if hasattr(base, "k_out") else base.k
        self.total_n = self.n * depth
        self.total_k = self.k * depth

    def encode(self, info):
        info = tuple(info)
        if len(info) != self.total_k:
            raise LengthMismatch(f"info length {len(info)} != {self.total_k}")
        m = self.depth
        columns = [self.base.encode(info[j::m]) for j in range(m)]
        out = []
        for i in range(self.n):
            for j in range(m):
                out.append(columns[j][i])
        return tuple(out)

    def decode(self, word, erasures=()) -> DecodeOutcome:
        w = as_received(word, erasures)
        if len(w) != self.total_n:
            raise LengthMismatch(f"word length {len(w)} != {self.total_n}")
        m = self.depth
        fixed = [0] * self.total_n
        err = [0] * self.total_n
        positions = []
        outcomes = []
        ok = True
        for j in range(m):
            col = w.symbols[j::m]
            col_erasures = [p // m for p in w.erasures if p % m == j]
            out = self.base.euclid_decode(col, erasures=col_erasures) \
                if hasattr(self.base, "euclid_decode") else self.base.decode(col)
            outcomes.append(out)
            if not out.corrected:
                ok = False
                continue
            for i in range(self.n):
                fixed[i * m + j] = out.codeword[i]
            if out.error_vector:
                contracted = getattr(self.base, "_contract_word", tuple)
                ev = contracted(out.error_vector)
                for i, e in enumerate(ev):
                    if e:
                        err[i * m + j] = e
                        positions.append(i * m + j)
        if not ok:
            return DecodeOutcome.failure()
        info = tuple(
            fixed[i * m + j] for i in range(self.k) for j in range(m)
        )
        return DecodeOutcome(
            "corrected", codeword=tuple(fixed), error_vector=tuple(err),
            error_positions=tuple(sorted(positions)), info=info,
        )


@dataclass(frozen=True)
class ProductDecodePolicy:
    """Stage-1 policy: rows the inner decoder cannot (or may not,
    given `max_inner_errors`) correct are erased for the outer stage;
    `rerun_inner` applies the inner decoder once more at the end."""

    max_inner_errors: int | None = None
    rerun_inner: bool = False


class ProductCode:
    """Product of an outer [n1,k1] code on columns with an inner
    [n2,k2] code on rows; read-out is row order."""

    def __init__(self, outer, inner):
        self.outer = outer
        self.inner = inner
        self.n1 = outer.n_out if hasattr(outer, "n_out") else outer.n
        self.k1 = outer.k_out if hasattr(outer, "k_out") else outer.k
        self.n2 = inner.n_out if hasattr(inner, "n_out") else inner.n
        self.k2 = inner.k_out if hasattr(inner, "k_out") else inner.k

    def encode(self, info_rows):
        """info_rows: k1 x k2.  Encodes rows first, then columns, and
        checks that the opposite order gives the same array."""
        rows = [tuple(r) for r in info_rows]
        if len(rows) != self.k1 or any(len(r) != self.k2 for r in rows):
            raise LengthMismatch(f"info must be {self.k1} x {self.k2}")

        # rows then columns
        a = [self.inner.encode(r) for r in rows]
        cols = [self.outer.encode([a[i][j] for i in range(self.k1)])
                for j in range(self.n2)]
        arr_rc = tuple(tuple(cols[j][i] for j in range(self.n2))
                       for i in range(self.n1))

        # columns then rows
        b_cols = [self.outer.encode([rows[i][j] for i in range(self.k1)])
                  for j in range(self.k2)]
        arr_cr = tuple(
            self.inner.encode([b_cols[j][i] for j in range(self.k2)])
            for i in range(self.n1)
        )
        assert arr_rc == arr_cr, "row-first and column-first encodings differ"
        return arr_rc

    def serialize(self, array):
        return tuple(x for row in array for x in row)

    def deserialize(self, word):
        word = tuple(word)
        if len(word) != self.n1 * self.n2:
            raise LengthMismatch("word does not fill the array")
        return tuple(
            word[i * self.n2:(i + 1) * self.n2] for i in range(self.n1)
        )

    def decode(self, array, policy: ProductDecodePolicy = ProductDecodePolicy()):
        rows = [tuple(r) for r in array]
        if len(rows) != self.n1 or any(len(r) != self.n2 for r in rows):
            raise LengthMismatch(f"array must be {self.n1} x {self.n2}")

        # stage 1: inner decoding; failures erase the whole row
        stage1 = []
        erased_rows = []
        for i, row in enumerate(rows):
            out = self._inner_decode(row)
            bad = not out.corrected
            if not bad and policy.max_inner_errors is not None:
                bad = len(out.error_positions) > policy.max_inner_errors
            if bad:
                erased_rows.append(i)
                stage1.append(row)
            else:
                stage1.append(out.codeword)

        # stage 2: outer error-erasure decoding per column
        cols = []
        for j in range(self.n2):
            col = [stage1[i][j] for i in range(self.n1)]
            out = self._outer_decode(col, erased_rows)
            if not out.corrected:
                return DecodeOutcome.failure()
            cols.append(out.codeword)
        result = [
            tuple(cols[j][i] for j in range(self.n2)) for i in range(self.n1)
        ]

        # stage 3 (optional): one more inner pass
        if policy.rerun_inner:
            fixed_rows = []
            for row in result:
                out = self._inner_decode(row)
                if not out.corrected:
                    return DecodeOutcome.failure()
                fixed_rows.append(out.codeword)
            result = fixed_rows

        info = tuple(r[: self.k2] for r in result[: self.k1])
        return DecodeOutcome(
            "corrected",
            codeword=self.serialize(result),
            info=self.serialize(info),
        )

    def _inner_decode(self, row):
        if hasattr(self.inner, "euclid_decode"):
            return self.inner.euclid_decode(row)
        return self.inner.decode(row)

    def _outer_decode(self, col, erasures):
        if hasattr(self.outer, "euclid_decode"):
            return self.outer.euclid_decode(col, erasures=erasures)
        return self.outer.decode(as_received(col, erasures))


def product_min_distance(outer, inner) -> int:
    """Brute-force minimum weight of the product code (small codes)."""
    from itertools import product as iproduct

    pc = ProductCode(outer, inner)
    field = outer.field
    total = field.q ** (pc.k1 * pc.k2)
    if total > 1 << 16:
        raise TooLarge(f"{total} product codewords")
    best = None
    for flat in iproduct(field.elements(), repeat=pc.k1 * pc.k2):
        if not any(flat):
            continue
        rows = [flat[i * pc.k2:(i + 1) * pc.k2] for i in range(pc.k1)]
        w = sum(1 for x in pc.serialize(pc.encode(rows)) if x)
        best = w if best is None else min(best, w)
    return best


def reiger_report(code, l: int) -> dict:
    """Check 2l <= n - k and report the burst-correcting efficiency
    2l/(n-k) as an exact rational."""
    if hasattr(code, "total_n"):
        n, k = code.total_n, code.total_k
    elif hasattr(code, "n_out"):
        n, k = code.n_out, code.k_out
    else:
        n, k = code.n, code.k
    if l < 0:
        raise InvalidSpan("negative burst length")
    if l == 0:
        return {"bound_ok": True, "efficiency": Fraction(0)}
    if n == k:
        raise InvalidSpan("code has no redundancy")
    return {
        "bound_ok": 2 * l <= n - k,
        "efficiency": Fraction(2 * l, n - k),
    }


def rs_binary_burst_efficiency(b: int, s: int) -> Fraction:
    """Efficiency of an s-symbol-correcting RS code over GF(2^b) viewed
    as a binary burst corrector: ((s-1)b + 1) / (b s)."""
    return Fraction((s - 1) * b + 1, b * s)
