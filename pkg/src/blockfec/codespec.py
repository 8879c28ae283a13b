"""Textual code specifications for the command-line front end.

Grammar (one line, no spaces required):

    family[:key=value,key=value,...]

with families linear, hamming, golay23, golay24, cyclic, rs, bch,
interleaved, product.  Field values use 'GF(p^nu)[c0,c1,...,cnu]'
(brackets optional: the default primitive polynomial is used).
Element lists (generator coefficients, matrix rows) are dot-separated
symbols in the same syntax the decoders print: '0', '1', 'a<k>' or
radix-p digit groups.  Nested codes use braces:

    interleaved:depth=4,base={rs:field=GF(2^3)[1,1,0,1],n=7,k=5}

Parsing then rendering a canonical spec is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .bch import BCHCode
from .burst import InterleavedCode, ProductCode, ProductDecodePolicy
from .cyclic import CyclicCode
from .errors import FecError
from .galois import FiniteField
from .linear import (
    DecodeOutcome,
    LinearCode,
    MatrixGF,
    StandardArray,
    as_received,
)
from .named_codes import GolayCode, HammingCode
from .poly import Poly
from .reed_solomon import RSCode

FAMILIES = (
    "linear", "hamming", "golay23", "golay24", "cyclic", "rs", "bch",
    "interleaved", "product",
)

_FIELD_RE = re.compile(r"^GF\((\d+)(?:\^(\d+))?\)(?:\[([0-9,]*)\])?$")


class SpecError(FecError):
    """Malformed code specification."""


@dataclass
class CodeSpec:
    family: str
    params: dict = dc_field(default_factory=dict)

    def render(self) -> str:
        if not self.params:
            return self.family
        parts = []
        for key in sorted(self.params):
            val = self.params[key]
            if isinstance(val, CodeSpec):
                parts.append(f"{key}={{{val.render()}}}")
            else:
                parts.append(f"{key}={val}")
        return f"{self.family}:" + ",".join(parts)


def parse_field(text: str) -> FiniteField:
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise SpecError(f"bad field spec {text!r}")
    p = int(m.group(1))
    nu = int(m.group(2) or 1)
    coeffs = m.group(3)
    if coeffs is None or coeffs == "":
        return FiniteField(p, nu, None)
    modulus = tuple(int(c) for c in coeffs.split(","))
    if nu == 1:
        raise SpecError("prime fields take no defining polynomial")
    return FiniteField(p, nu, modulus)


def _split_top(text: str, sep: str):
    """Split on `sep` outside of brackets and braces."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[{(":
            depth += 1
        elif ch in "]})":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_spec(text: str) -> CodeSpec:
    text = text.strip()
    if ":" not in text:
        family, rest = text, ""
    else:
        family, rest = text.split(":", 1)
    family = family.strip()
    if family not in FAMILIES:
        raise SpecError(f"unknown family {family!r}")
    params = {}
    if rest:
        for item in _split_top(rest, ","):
            if "=" not in item:
                raise SpecError(f"expected key=value, got {item!r}")
            key, val = item.split("=", 1)
            key, val = key.strip(), val.strip()
            if val.startswith("{") and val.endswith("}"):
                params[key] = parse_spec(val[1:-1])
            else:
                params[key] = val
    return CodeSpec(family, params)


class BuiltCode:
    """A family-specific bundle: the code object plus uniform encode
    and decode entry points for the CLI."""

    def __init__(self, spec, code, field, n, k, encode, decode):
        self.spec = spec
        self.code = code
        self.field = field
        self.n = n
        self.k = k
        self.encode = encode
        self.decode = decode


def _parse_symbols(field, text: str):
    return tuple(field.parse_element(s) for s in text.split(".") if s != "")


def load_code_file(path: str):
    """Code-spec text file: a field spec on the first line, then one
    generator row per line (whitespace- or comma-separated symbols)."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise SpecError(f"{path}: empty code file")
    fld = parse_field(lines[0])
    rows = [
        tuple(fld.parse_element(s) for s in ln.replace(",", " ").split())
        for ln in lines[1:]
    ]
    if not rows:
        raise SpecError(f"{path}: no generator rows")
    return fld, rows


def _int(params, key, default=None):
    if key not in params:
        if default is None:
            raise SpecError(f"missing parameter {key!r}")
        return default
    try:
        return int(params[key])
    except ValueError as exc:
        raise SpecError(f"bad integer for {key!r}: {params[key]!r}") from exc


_GF2 = None


def _gf2():
    global _GF2
    if _GF2 is None:
        _GF2 = FiniteField(2)
    return _GF2


def build(spec) -> BuiltCode:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    params = dict(spec.params)
    family = spec.family

    if family == "hamming":
        ham = HammingCode(_int(params, "r"))
        return BuiltCode(spec, ham, _gf2(), ham.n, ham.k,
                         lambda u, systematic=True: ham.encode(u),
                         lambda w, erasures=(): ham.decode(w))

    if family in ("golay23", "golay24"):
        g = GolayCode("G23" if family == "golay23" else "G24")
        return BuiltCode(spec, g, _gf2(), g.n, g.k,
                         lambda u, systematic=True: g.encode(u),
                         lambda w, erasures=(): g.decode(w))

    if family == "linear":
        if "file" in params:
            fld, rows = load_code_file(params["file"])
            code = LinearCode.from_generator(fld, MatrixGF(fld, rows))
        else:
            fld = parse_field(params["field"]) if "field" in params else _gf2()
            if "rows" in params:
                rows = [_parse_symbols(fld, r) for r in params["rows"].split(";")]
                code = LinearCode.from_generator(fld, MatrixGF(fld, rows))
            elif "parity" in params:
                rows = [_parse_symbols(fld, r)
                        for r in params["parity"].split(";")]
                code = LinearCode.from_parity(fld, MatrixGF(fld, rows))
            else:
                raise SpecError("linear codes need rows=, parity= or file=")
        array = StandardArray(code)
        return BuiltCode(spec, code, fld, code.n, code.k,
                         lambda u, systematic=True: code.encode(u),
                         lambda w, erasures=(): array.decode(as_received(w, erasures)))

    if family == "cyclic":
        fld = parse_field(params["field"]) if "field" in params else _gf2()
        n = _int(params, "n")
        g = Poly(fld, _parse_symbols(fld, params["g"]))
        code = CyclicCode(fld, n, g)
        lin = LinearCode.from_generator(fld, code.matrices()[0])
        array = StandardArray(lin)

        def decode(w, erasures=()):
            out = array.decode(as_received(w, erasures))
            # systematic encoding keeps the message in the first k
            # coordinates; report that rather than the shift-basis label
            return DecodeOutcome(
                out.verdict, codeword=out.codeword,
                error_vector=out.error_vector,
                error_positions=out.error_positions,
                info=out.codeword[: code.k],
            )

        def encode(u, systematic=True):
            return code.encode(u, systematic=systematic)

        return BuiltCode(spec, code, fld, code.n, code.k, encode, decode)

    if family == "rs":
        fld = parse_field(params["field"]) if "field" in params else None
        if fld is None:
            raise SpecError("rs codes need field=GF(...)")
        code = RSCode(fld, _int(params, "n"), _int(params, "k"),
                      m0=_int(params, "m0", 1),
                      shorten_by=_int(params, "shorten", 0))
        use_pgz = params.get("decoder", "euclid") == "pgz"

        def decode(w, erasures=()):
            if use_pgz:
                return code.pgz_decode(w, erasures)
            return code.euclid_decode(w, erasures)

        return BuiltCode(spec, code, fld, code.n_out, code.k_out,
                         code.encode, decode)

    if family == "bch":
        fld = parse_field(params["field"]) if "field" in params else None
        if fld is None:
            raise SpecError("bch codes need field=GF(...)")
        code = BCHCode(fld, _int(params, "sub", 2), _int(params, "d"),
                       m0=_int(params, "m0", 1))
        return BuiltCode(spec, code, fld, code.n, code.k,
                         code.encode,
                         lambda w, erasures=(): code.decode(w, erasures))

    if family == "interleaved":
        base = build(params["base"])
        code = InterleavedCode(base.code, _int(params, "depth"))
        return BuiltCode(spec, code, base.field, code.total_n, code.total_k,
                         lambda u, systematic=True: code.encode(u),
                         lambda w, erasures=(): code.decode(w, erasures))

    if family == "product":
        outer = build(params["outer"])
        inner = build(params["inner"])
        code = ProductCode(outer.code, inner.code)

        def encode(u, systematic=True):
            u = tuple(u)
            rows = [u[i * code.k2:(i + 1) * code.k2] for i in range(code.k1)]
            return code.serialize(code.encode(rows))

        def decode(w, erasures=(), rerun_inner=False, max_inner_errors=None):
            policy = ProductDecodePolicy(
                max_inner_errors=max_inner_errors, rerun_inner=rerun_inner
            )
            return code.decode(code.deserialize(w), policy)

        return BuiltCode(spec, code, outer.field,
                         code.n1 * code.n2, code.k1 * code.k2, encode, decode)

    raise SpecError(f"unknown family {family!r}")
