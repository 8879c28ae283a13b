"""Generic linear block codes over a finite field.

Provides the matrix machinery (generator/parity matrices, systematic
forms), syndrome computation, standard arrays with coset-leader
decoding, brute-force maximum-likelihood decoding, duals, extension,
shortening and sphere-packing bound checks.  The exhaustive tools are
hard-capped; they are oracles for small codes, not production decoders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import (
    InvalidColumns,
    LengthMismatch,
    NotSystematic,
    RankDeficient,
    TooLarge,
)

MAX_ARRAY_VECTORS = 1 << 24   # q^n cap for standard arrays
MAX_ML_CODEWORDS = 1 << 20    # q^k cap for brute-force decoding


def hamming_weight(v) -> int:
    return sum(1 for x in v if x)


def hamming_distance(u, v) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"length {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


@dataclass(frozen=True)
class ReceivedWord:
    """A word with known-unreliable (erased) positions.

    Erased positions are normalised to the zero symbol; decoders rely
    on that convention when evaluating syndromes.
    """

    symbols: tuple
    erasures: frozenset = dc_field(default_factory=frozenset)

    @classmethod
    def make(cls, symbols, erasures=()) -> "ReceivedWord":
        symbols = list(symbols)
        erasures = frozenset(erasures)
        for e in erasures:
            if not 0 <= e < len(symbols):
                raise LengthMismatch(f"erasure position {e} out of range")
            symbols[e] = 0
        return cls(tuple(symbols), erasures)

    def __len__(self):
        return len(self.symbols)


def as_received(word, erasures=()) -> ReceivedWord:
    if isinstance(word, ReceivedWord):
        return word
    return ReceivedWord.make(word, erasures)


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of any decoder: a corrected codeword or an explicit
    uncorrectable verdict."""

    verdict: str                      # "corrected" | "uncorrectable"
    codeword: tuple | None = None
    error_vector: tuple | None = None
    error_positions: tuple = ()
    info: tuple | None = None
    key_state: object | None = None   # RS/BCH decoders attach internals

    @property
    def corrected(self) -> bool:
        return self.verdict == "corrected"

    @classmethod
    def failure(cls, **kw) -> "DecodeOutcome":
        return cls(verdict="uncorrectable", **kw)


class MatrixGF:
    """Dense matrix over a finite field (row tuples of element ints)."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @classmethod
    def identity(cls, field, n) -> "MatrixGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, list(zip(*self.rows)))

    def hstack(self, other: "MatrixGF") -> "MatrixGF":
        return MatrixGF(self.field, [a + b for a, b in zip(self.rows, other.rows)])

    def select_columns(self, cols) -> "MatrixGF":
        return MatrixGF(self.field, [[r[c] for c in cols] for r in self.rows])

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        f = self.field
        bt = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append(
                [
                    _dot(f, row, col)
                    for col in bt
                ]
            )
        return MatrixGF(f, out)

    def mul_vec(self, v):
        """Row vector times this matrix: v @ M."""
        f = self.field
        if len(v) != len(self.rows):
            raise LengthMismatch(f"vector length {len(v)} vs {len(self.rows)} rows")
        cols = list(zip(*self.rows))
        return tuple(_dot(f, v, col) for col in cols)

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot columns)."""
        f = self.field
        rows = [list(r) for r in self.rows]
        nrows, ncols = self.shape
        pivots = []
        r = 0
        for c in range(ncols):
            pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(x, inv) for x in rows[r]]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [
                        f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])
                    ]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return MatrixGF(f, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def null_space(self) -> "MatrixGF":
        """Basis of {x : M x^T = 0} as rows, in reduced echelon form
        (systematic whenever the leading columns are independent)."""
        f = self.field
        red, pivots = self.rref()
        _, ncols = self.shape
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [0] * ncols
            vec[fc] = 1
            for r, pc in enumerate(pivots):
                vec[pc] = f.neg(red.rows[r][fc])
            basis.append(vec)
        if not basis:
            return MatrixGF(f, basis)
        return MatrixGF(f, basis).rref()[0]

    def det(self) -> int:
        f = self.field
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        det = 1
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c]), None)
            if pivot is None:
                return 0
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                det = f.neg(det)
            det = f.mul(det, rows[c][c])
            inv = f.inv(rows[c][c])
            for i in range(c + 1, n):
                if rows[i][c]:
                    factor = f.mul(rows[i][c], inv)
                    rows[i] = [
                        f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[c])
                    ]
        return det

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"MatrixGF({self.shape[0]}x{self.shape[1]} over {self.field.spec_string()})"


def _dot(f, u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = f.add(acc, f.mul(a, b))
    return acc


def _solve_square(f, rows, rhs):
    """Solve a square linear system by Gaussian elimination; None when
    the matrix is singular."""
    n = len(rows)
    m = [list(row) + [b] for row, b in zip(rows, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        inv = f.inv(m[c][c])
        m[c] = [f.mul(x, inv) for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                factor = m[i][c]
                m[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def systematic_form(G: MatrixGF):
    """Row-reduce and permute columns so the left block is an identity.

    Returns (G_sys, perm) where perm maps new column index to the old
    one.  The permutation is the identity whenever row operations alone
    suffice (the pivot columns are already the leading columns).
    """
    red, pivots = G.rref()
    k, n = G.shape
    if len(pivots) < k:
        raise RankDeficient(f"rank {len(pivots)} < {k} rows")
    perm = list(pivots) + [c for c in range(n) if c not in pivots]
    return red.select_columns(perm), tuple(perm)


def parity_from_generator(G_sys: MatrixGF) -> MatrixGF:
    """H = (V^T | I) from a systematic G = (I | V)."""
    f = G_sys.field
    k, n = G_sys.shape
    for i in range(k):
        if any(G_sys.rows[i][j] != (1 if i == j else 0) for j in range(k)):
            raise NotSystematic("generator lacks a leading identity block")
    vt = [[f.neg(G_sys.rows[i][k + j]) for i in range(k)] for j in range(n - k)]
    return MatrixGF(f, vt).hstack(MatrixGF.identity(f, n - k))


class LinearCode:
    """An [n, k] linear code given by generator and parity matrices."""

    def __init__(self, field, G: MatrixGF, H: MatrixGF):
        self.field = field
        self.G = G
        self.H = H
        self.k, self.n = G.shape
        if self.n == self.k:
            if H.rows:
                raise LengthMismatch("a full-space code has an empty parity matrix")
        elif H.shape != (self.n - self.k, self.n):
            raise LengthMismatch(
                f"parity matrix {H.shape} does not match [{self.n},{self.k}]"
            )
        zero = G @ H.transpose()
        if any(any(row) for row in zero.rows):
            raise ValueError("G H^T != 0")
        self._d = None

    @classmethod
    def from_generator(cls, field, rows) -> "LinearCode":
        G = rows if isinstance(rows, MatrixGF) else MatrixGF(field, rows)
        if G.rank() != G.shape[0]:
            raise RankDeficient("generator rows are dependent")
        k, n = G.shape
        systematic = k < n and all(
            G.rows[i][j] == (1 if i == j else 0)
            for i in range(k) for j in range(k)
        )
        H = parity_from_generator(G) if systematic else G.null_space()
        return cls(field, G, H)

    @classmethod
    def from_parity(cls, field, rows) -> "LinearCode":
        H = rows if isinstance(rows, MatrixGF) else MatrixGF(field, rows)
        if H.rank() != H.shape[0]:
            raise RankDeficient("parity rows are dependent")
        return cls(field, H.null_space(), H)

    # -- encoding / syndromes -------------------------------------------

    def encode(self, u):
        if len(u) != self.k:
            raise LengthMismatch(f"message length {len(u)} != k={self.k}")
        return self.G.mul_vec(tuple(u))

    def syndrome(self, word):
        w = as_received(word)
        if len(w) != self.n:
            raise LengthMismatch(f"word length {len(w)} != n={self.n}")
        return tuple(_dot(self.field, w.symbols, row) for row in self.H.rows)

    def contains(self, word) -> bool:
        return not any(self.syndrome(word))

    def message_of(self, codeword):
        """Invert the encoding: the message u with u G = codeword.

        Uses the pivot columns of G (G restricted to them is
        invertible), so it works for non-systematic generators too.
        """
        codeword = tuple(codeword)
        if len(codeword) != self.n:
            raise LengthMismatch(f"word length {len(codeword)} != n={self.n}")
        if not hasattr(self, "_pivot_solver"):
            red, pivots = self.G.rref()
            sub = self.G.select_columns(pivots)
            # invert the k x k pivot block by solving k unit systems
            f = self.field
            identity = MatrixGF.identity(f, self.k)
            cols = []
            for unit in identity.rows:
                cols.append(_solve_square(f, sub.transpose().rows, unit))
            inv = MatrixGF(f, cols)  # rows are the solution vectors
            self._pivot_solver = (pivots, inv)
        pivots, inv = self._pivot_solver
        picked = tuple(codeword[p] for p in pivots)
        return inv.mul_vec(picked)

    # -- enumeration ------------------------------------------------------

    def messages(self):
        return product(self.field.elements(), repeat=self.k)

    def codewords(self):
        for u in self.messages():
            yield u, self.encode(u)

    def min_distance(self) -> int:
        if self._d is None:
            if self.field.q**self.k > MAX_ML_CODEWORDS:
                raise TooLarge("too many codewords to enumerate")
            self._d = min(
                hamming_weight(c) for u, c in self.codewords() if any(u)
            )
        return self._d

    @property
    def d(self) -> int:
        return self.min_distance()

    # -- derived codes ----------------------------------------------------

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.H, self.G)

    def extend(self) -> "LinearCode":
        """Append an overall parity symbol (coordinates sum to zero)."""
        f = self.field
        g_rows = [
            row + (f.neg(_dot(f, row, [1] * self.n)),) for row in self.G.rows
        ]
        h_rows = [row + (0,) for row in self.H.rows]
        h_rows.append(tuple([1] * (self.n + 1)))
        return LinearCode(f, MatrixGF(f, g_rows), MatrixGF(f, h_rows))

    def shorten(self, columns) -> "LinearCode":
        """Delete parity-matrix columns."""
        columns = sorted(set(columns))
        if any(not 0 <= c < self.n for c in columns) or not columns:
            raise InvalidColumns(f"bad column set {columns}")
        keep = [c for c in range(self.n) if c not in columns]
        h = self.H.select_columns(keep)
        red, pivots = h.rref()
        h = MatrixGF(self.field, red.rows[: len(pivots)])
        return LinearCode.from_parity(self.field, h)

    # -- bounds -----------------------------------------------------------

    def sphere_size(self, radius: int) -> int:
        """V_q(radius): number of words within the given Hamming radius."""
        return sum(
            math.comb(self.n, i) * (self.field.q - 1) ** i
            for i in range(radius + 1)
        )

    def bounds_report(self) -> dict:
        d = self.min_distance()
        t = (d - 1) // 2
        v = self.sphere_size(t)
        q = self.field.q
        return {
            "singleton_met": d == self.n - self.k + 1,
            "hamming_slack": (self.n - self.k) - math.log(v, q),
            "perfect": q ** (self.n - self.k) == v,
        }

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.G == other.G
            and self.H == other.H
        )

    def __repr__(self):
        return f"LinearCode[{self.n},{self.k}] over {self.field.spec_string()}"


# ----------------------------------------------------------------------
# Standard arrays.
# ----------------------------------------------------------------------

def _leader_key(v):
    # minimum weight first; ties broken by comparing coordinates from
    # the last position backwards, which reproduces the classical
    # textbook tables.
    return (hamming_weight(v), tuple(reversed(v)))


def _message_key(u):
    return (hamming_weight(u), tuple(u))


class StandardArray:
    """The coset table of a code: one row per syndrome, led by a
    minimum-weight coset leader, columns labelled by messages."""

    def __init__(self, code: LinearCode):
        q, n, k = code.field.q, code.n, code.k
        if q**n > MAX_ARRAY_VECTORS:
            raise TooLarge(f"q^n = {q**n} exceeds standard-array cap")
        self.code = code
        f = code.field

        self.messages = sorted(code.messages(), key=_message_key)
        self.code_row = [code.encode(u) for u in self.messages]

        leaders = {}
        for v in product(f.elements(), repeat=n):
            s = code.syndrome(v)
            if s not in leaders or _leader_key(v) < _leader_key(leaders[s]):
                leaders[s] = v
        order = sorted(
            (s for s in leaders if any(s)),
            key=lambda s: _leader_key(leaders[s]),
        )
        zero_syndrome = tuple([0] * (n - k))
        self.syndromes = [zero_syndrome] + order
        self.leaders = [leaders[s] for s in self.syndromes]
        self.rows = [
            [tuple(f.add(a, b) for a, b in zip(leader, c)) for c in self.code_row]
            for leader in self.leaders
        ]
        self._row_of_syndrome = {s: i for i, s in enumerate(self.syndromes)}
        self._message_of_codeword = {
            c: u for u, c in zip(self.messages, self.code_row)
        }

    def row_index(self, syndrome) -> int:
        return self._row_of_syndrome[tuple(syndrome)]

    def decode(self, word) -> DecodeOutcome:
        w = as_received(word)
        f = self.code.field
        s = self.code.syndrome(w)
        leader = self.leaders[self.row_index(s)]
        codeword = tuple(f.sub(a, b) for a, b in zip(w.symbols, leader))
        return DecodeOutcome(
            verdict="corrected",
            codeword=codeword,
            error_vector=leader,
            error_positions=tuple(i for i, e in enumerate(leader) if e),
            info=self._message_of_codeword[codeword],
        )


def build_standard_array(code: LinearCode) -> StandardArray:
    return StandardArray(code)


def ml_decode(code: LinearCode, word):
    """All codewords at minimum Hamming distance over the non-erased
    positions; more than one entry signals a tie."""
    if code.field.q**code.k > MAX_ML_CODEWORDS:
        raise TooLarge("too many codewords for brute-force decoding")
    w = as_received(word)
    if len(w) != code.n:
        raise LengthMismatch(f"word length {len(w)} != n={code.n}")
    keep = [i for i in range(code.n) if i not in w.erasures]
    best, best_d = [], None
    for u, c in code.codewords():
        d = sum(1 for i in keep if c[i] != w.symbols[i])
        if best_d is None or d < best_d:
            best, best_d = [c], d
        elif d == best_d:
            best.append(c)
    return best, best_d
