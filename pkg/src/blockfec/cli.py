"""Command-line front end.

Subcommands: field, encode, decode, array, simulate, analyze.
Messages and received words are comma- or dot-separated element
symbols ('0', '1', 'a<k>', or radix-p digit groups); --vector switches
output to digit groups.  Exit status: 0 on success / corrected,
2 on an uncorrectable word, 1 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .burst import reiger_report
from .channel import event_polynomials, monte_carlo
from .codespec import SpecError, build, parse_field
from .errors import FecError, TooLarge
from .galois import LOG_ZERO
from .linear import LinearCode, StandardArray

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_UNCORRECTABLE = 2


def _parse_word(field, text: str):
    seps = "," if "," in text else "."
    return tuple(field.parse_element(s) for s in text.split(seps) if s)


def _fmt_word(field, word, vector: bool) -> str:
    style = "vector" if vector else "log"
    return ",".join(field.format_element(x, style) for x in word)


def cmd_field(args) -> int:
    fld = parse_field(args.field)
    header = ("Vector", "Polynomial", "Power", "Logarithm")
    rows = [header]
    elements = [0] + [fld.exp(i) for i in range(fld.q - 1)]
    for a in elements:
        lg = fld.log(a)
        power = "0" if a == 0 else ("1" if lg == 0 else ("a" if lg == 1 else f"a^{lg}"))
        logtxt = "-inf" if lg == LOG_ZERO else str(lg)
        rows.append((
            fld.format_element(a, "vector"),
            fld.poly_one_letter(a),
            power,
            logtxt,
        ))
    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    for r in rows:
        print("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_encode(args) -> int:
    built = build(args.code)
    u = _parse_word(built.field, args.message)
    word = built.encode(u, systematic=not args.nonsystematic)
    print(_fmt_word(built.field, word, args.vector))
    return EXIT_OK


def cmd_decode(args) -> int:
    built = build(args.code)
    received = _parse_word(built.field, args.received)
    erasures = tuple(int(x) for x in args.erasures.split(",") if x) \
        if args.erasures else ()
    kwargs = {}
    if args.rerun_inner:
        kwargs["rerun_inner"] = True
    if args.max_inner_errors is not None:
        kwargs["max_inner_errors"] = args.max_inner_errors
    if kwargs and not args.code.strip().startswith("product"):
        raise ValueError("inner-decode policy flags apply to product codes")
    out = built.decode(received, erasures=erasures, **kwargs)
    fld = built.field
    if args.format == "record":
        print(f"verdict={out.verdict}")
        if out.corrected:
            print(f"codeword={_fmt_word(fld, out.codeword, args.vector)}")
            print(f"info={_fmt_word(fld, out.info, args.vector)}")
            print("error_positions=" + ",".join(map(str, out.error_positions)))
            if out.error_vector:
                vals = [
                    fld.format_element(out.error_vector[i])
                    for i in out.error_positions
                ]
                print("error_values=" + ",".join(vals))
    else:
        if out.corrected:
            print(f"corrected: {_fmt_word(fld, out.codeword, args.vector)}")
            print(f"info:      {_fmt_word(fld, out.info, args.vector)}")
            if out.error_positions:
                print(f"errors at: {','.join(map(str, out.error_positions))}")
        else:
            print("uncorrectable")
    return EXIT_OK if out.corrected else EXIT_UNCORRECTABLE


def _linear_of(built):
    code = built.code
    if isinstance(code, LinearCode):
        return code
    if hasattr(code, "code") and isinstance(code.code, LinearCode):
        return code.code
    if hasattr(code, "matrices"):
        return LinearCode.from_generator(built.field, code.matrices()[0])
    if hasattr(code, "encode"):
        # generic linear view: encode the unit messages
        rows = [
            built.encode(tuple(1 if i == j else 0 for i in range(built.k)))
            for j in range(built.k)
        ]
        return LinearCode.from_generator(built.field, rows)
    raise TooLarge("no linear view available for this family")


def cmd_array(args) -> int:
    built = build(args.code)
    code = _linear_of(built)
    array = StandardArray(code)
    fld = built.field

    def vec(w):
        return "".join(fld.format_element(x, "vector") for x in w)

    print("\t".join(["message"] + [vec(m) for m in array.messages] + ["syndrome"]))
    for row, syndrome in zip(array.rows, array.syndromes):
        print("\t".join([vec(w) for w in row] + [vec(syndrome)]))
    return EXIT_OK


def _simulate_once(built, detect, p, trials, seed):
    """One (p, trials) run: Monte Carlo plus, when feasible, the exact
    event polynomials.  Returns (mc dict, {metric: Fraction} or None)."""
    try:
        if built.field.p != 2 or built.field.q**built.n > (1 << 20):
            raise TooLarge("standard-array analysis limited to small "
                           "binary codes")
        code = _linear_of(built)
        array = StandardArray(code)
        mc = monte_carlo(code, array, p, trials, seed,
                         detect_syndromes=detect)
        exact = event_polynomials(code, array, detect_syndromes=detect)
        pfrac = Fraction(p).limit_denominator(10**9)
        exact_vals = {
            "P_err": Fraction(exact["P_err"](pfrac)),
            "p_err": Fraction(exact["p_err"](pfrac)),
            "P_det": Fraction(exact["P_det"](pfrac)),
        }
        return mc, exact_vals
    except TooLarge:
        print("warning: exact classification skipped (too large); "
              "using the family decoder", file=sys.stderr)
        return monte_carlo(built, built.decode, p, trials, seed), None


def cmd_simulate(args) -> int:
    ps = [float(x) for x in str(args.p).split(",") if x]
    if not ps or not all(0 <= p <= 0.5 for p in ps):
        raise ValueError("crossover probabilities must be in [0, 0.5]")
    built = build(args.code)
    detect = set()
    if args.policy and args.policy.startswith("detect="):
        for s in args.policy[len("detect="):].split("|"):
            detect.add(tuple(int(b) for b in s))

    if args.format == "csv":
        print("p,metric,exact,estimate,stderr")
    for p in ps:
        mc, exact_vals = _simulate_once(built, detect, p, args.trials,
                                        args.seed)
        if args.format == "csv":
            for key in ("P_err", "p_err", "P_det"):
                exact = ("" if exact_vals is None
                         else f"{float(exact_vals[key]):.10g}")
                print(f"{p},{key},{exact},{mc[f'{key}_hat']:.10g},"
                      f"{mc[f'{key}_stderr']:.4g}")
            continue
        print(f"trials={args.trials} seed={args.seed} p={p}")
        for key in ("P_err", "p_err", "P_det"):
            line = (f"{key}: estimate={mc[f'{key}_hat']:.6g} "
                    f"stderr={mc[f'{key}_stderr']:.3g}")
            if exact_vals is not None:
                frac = exact_vals[key]
                line += f" exact={float(frac):.6g} exact_rational={frac}"
            print(line)
    return EXIT_OK


def cmd_analyze(args) -> int:
    built = build(args.code)
    gen = getattr(built.code, "g", None)
    if gen is not None:
        coeffs = ",".join(
            built.field.format_element(c) for c in gen.to_vector(
                len(gen.coeffs))
        )
        print(f"g={coeffs}")
    try:
        code = _linear_of(built)
        rep = code.bounds_report()
        print(f"n={code.n} k={code.k} d={code.min_distance()}")
        print(f"singleton_met={rep['singleton_met']}")
        print(f"hamming_slack={rep['hamming_slack']:.6g}")
        print(f"perfect={rep['perfect']}")
    except TooLarge:
        print("bounds: skipped (too large for exhaustive distance)")
    if args.burst is not None:
        rep = reiger_report(built.code if hasattr(built.code, "n") else built,
                            args.burst)
        print(f"burst_l={args.burst} bound_ok={rep['bound_ok']} "
              f"efficiency={rep['efficiency']}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="blockfec",
        description="Block error-correcting codes: fields, encoders, "
                    "decoders, and channel analysis.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print a finite-field table")
    p.add_argument("field", help="e.g. 'GF(2^3)[1,1,0,1]'")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("encode", help="encode a message")
    p.add_argument("--code", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--nonsystematic", action="store_true")
    p.add_argument("--vector", action="store_true",
                   help="print symbols as digit groups")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("--code", required=True)
    p.add_argument("--received", required=True)
    p.add_argument("--erasures", default="",
                   help="comma-separated positions in the received word")
    p.add_argument("--vector", action="store_true")
    p.add_argument("--format", choices=("text", "record"), default="text")
    p.add_argument("--rerun-inner", action="store_true",
                   help="product codes: run the inner decoder once more")
    p.add_argument("--max-inner-errors", type=int, default=None,
                   help="product codes: erase rows whose inner decode "
                        "corrected more than this many symbols")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("array", help="dump the standard array")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_array)

    p = sub.add_parser("simulate", help="Monte Carlo vs exact analysis")
    p.add_argument("--code", required=True)
    p.add_argument("--p", required=True,
                   help="crossover probability, or a comma list to sweep")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--policy", default="full",
                   help="'full' or 'detect=101|111' (syndrome bit strings)")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("analyze", help="bound checks and burst efficiency")
    p.add_argument("--code", required=True)
    p.add_argument("--burst", type=int, default=None)
    p.set_defaults(func=cmd_analyze)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (FecError, SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
