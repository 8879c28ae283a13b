"""Command-line interface: round trips, formats, and exit statuses."""

import pytest

from blockfec.cli import main
from blockfec.codespec import build, parse_field, parse_spec


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


# -- code specifications ---------------------------------------------------------

def test_parse_render_identity():
    specs = [
        "golay24",
        "hamming:r=3",
        "rs:field=GF(2^3)[1,1,0,1],k=3,n=7",
        "cyclic:field=GF(3^1),g=2.0.1.1.2.1,n=8",
        "interleaved:base={rs:field=GF(2^3)[1,1,0,1],k=5,n=7},depth=4",
        "product:inner={rs:field=GF(2^3)[1,1,0,1],k=5,n=7},"
        "outer={rs:field=GF(2^3)[1,1,0,1],k=3,n=7}",
    ]
    for text in specs:
        spec = parse_spec(text)
        assert spec.render() == text
        assert parse_spec(spec.render()) == spec


def test_parse_field_variants():
    assert parse_field("GF(2^3)[1,1,0,1]").q == 8
    assert parse_field("GF(11)").q == 11
    assert parse_field("GF(2^4)").modulus == (1, 1, 0, 0, 1)
    with pytest.raises(Exception):
        parse_field("GF(six)")


def test_build_families():
    for text, n, k in [
        ("hamming:r=3", 7, 4),
        ("golay23", 23, 12),
        ("golay24", 24, 12),
        ("linear:rows=1.0.0.1.1;0.1.1.1.0", 5, 2),
        ("cyclic:field=GF(3^1),n=8,g=2.0.1.1.2.1", 8, 3),
        ("rs:field=GF(2^3)[1,1,0,1],n=7,k=3", 7, 3),
        ("rs:field=GF(2^4)[1,1,0,0,1],n=15,k=9,shorten=5", 10, 4),
        ("bch:field=GF(2^4)[1,1,0,0,1],sub=2,d=7", 15, 5),
        ("interleaved:base={rs:field=GF(2^3)[1,1,0,1],k=5,n=7},depth=4",
         28, 20),
    ]:
        built = build(text)
        assert (built.n, built.k) == (n, k), text


# -- field table -------------------------------------------------------------------

def test_field_table(capsys):
    status, out, _ = run(capsys, "field", "GF(2^3)[1,1,0,1]")
    assert status == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    vectors = [line.split()[0] for line in lines[1:]]
    assert vectors == ["000", "100", "010", "001", "110", "011", "111", "101"]
    assert lines[1].split()[-1] == "-inf"


def test_field_table_gf9(capsys):
    status, out, _ = run(capsys, "field", "GF(3^2)[2,1,1]")
    assert status == 0
    vectors = [line.split()[0] for line in out.strip().splitlines()[1:]]
    assert vectors == ["00", "10", "01", "12", "22", "20", "02", "21", "11"]


def test_field_table_trivial(capsys):
    status, out, _ = run(capsys, "field", "GF(2)")
    assert status == 0
    assert len(out.strip().splitlines()) == 3


# -- encode / decode round trips ----------------------------------------------------

RS73 = "rs:field=GF(2^3)[1,1,0,1],n=7,k=3"


def test_encode_systematic_bytes(capsys):
    status, out, _ = run(
        capsys, "encode", "--code", RS73, "--message", "a6,a2,a5", "--vector"
    )
    assert status == 0
    assert out.strip() == "101,001,111,101,111,011,011"


def test_encode_nonsystematic(capsys):
    status, out, _ = run(
        capsys, "encode", "--code", RS73, "--message", "a6,a2,a5",
        "--vector", "--nonsystematic",
    )
    assert out.strip() == "001,011,001,101,101,011,111"


def test_decode_record_format(capsys):
    status, out, _ = run(
        capsys, "decode", "--code", RS73,
        "--received", "a4,a6,a5,a5,a5,a6,a1", "--format", "record",
    )
    assert status == 0
    record = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert record["verdict"] == "corrected"
    assert record["error_positions"] == "0,2"
    assert record["error_values"] == "a4,a5"
    assert record["info"] == "0,a6,0"


def test_decode_with_erasures(capsys):
    code = "rs:field=GF(2^4)[1,1,0,0,1],n=15,k=9,shorten=5"
    status, out, _ = run(
        capsys, "decode", "--code", code,
        "--received",
        "0011,1100,1111,0110,0000,1101,1010,0000,0001,1110",
        "--erasures", "4,7", "--vector", "--format", "record",
    )
    assert status == 0
    record = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert record["info"] == "0011,1100,1111,0100"
    assert record["error_positions"] == "3,9,12"


def test_decode_golay_example(capsys):
    word = ",".join("011110111010001100000010")
    status, out, _ = run(capsys, "decode", "--code", "golay24",
                         "--received", word)
    assert status == 0
    assert "0,1,1,1,1,0,0,1,1,0,1,0" in out


def test_decode_intact_word(capsys):
    status, out, _ = run(
        capsys, "decode", "--code", RS73,
        "--received", "a6,a2,a5,a6,a5,a4,a4", "--format", "record",
    )
    assert status == 0
    record = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert record["error_positions"] == ""


def test_decode_uncorrectable_exit_status(capsys):
    # more erased symbols than redundancy: always rejected
    status, out, _ = run(
        capsys, "decode", "--code", RS73,
        "--received", "0,0,0,0,0,0,0", "--erasures", "0,1,2,3,4",
    )
    assert status == 2
    assert "uncorrectable" in out


def test_bad_input_exit_status(capsys):
    status, _, err = run(capsys, "decode", "--code", "nosuch",
                         "--received", "0")
    assert status == 1
    assert "error" in err


@pytest.mark.parametrize(
    "code,message",
    [
        ("hamming:r=3", "1,0,1,1"),
        ("golay23", "1,0,1,1,0,0,1,0,1,0,1,0"),
        ("golay24", "1,0,1,1,0,0,1,0,1,0,1,0"),
        ("linear:rows=1.0.0.1.1;0.1.1.1.0", "1,1"),
        ("cyclic:field=GF(3^1),n=8,g=2.0.1.1.2.1", "2,0,1"),
        (RS73, "a6,a2,a5"),
        ("bch:field=GF(2^4)[1,1,0,0,1],sub=2,d=7", "1,0,1,1,0"),
        ("interleaved:base={rs:field=GF(2^3)[1,1,0,1],k=5,n=7},depth=2",
         ",".join(["a1"] * 10)),
        ("product:outer={rs:field=GF(2^3)[1,1,0,1],k=3,n=7},"
         "inner={rs:field=GF(2^3)[1,1,0,1],k=5,n=7}",
         ",".join(["a2"] * 15)),
    ],
)
def test_family_roundtrip_with_noise(capsys, code, message):
    status, encoded, _ = run(capsys, "encode", "--code", code,
                             "--message", message)
    assert status == 0
    symbols = encoded.strip().split(",")
    # flip one symbol (within every family's correction radius)
    built = build(code)
    original = built.field.parse_element(symbols[0])
    flipped = built.field.add(original, 1)
    symbols[0] = built.field.format_element(flipped)
    status, out, _ = run(capsys, "decode", "--code", code,
                         "--received", ",".join(symbols),
                         "--format", "record")
    assert status == 0
    record = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert record["verdict"] == "corrected"
    got = [built.field.parse_element(s) for s in record["info"].split(",")]
    want = [built.field.parse_element(s) for s in message.split(",")]
    assert got == want


# -- array / simulate / analyze ---------------------------------------------------------

def test_array_dump_matches_reference(capsys):
    status, out, _ = run(
        capsys, "array", "--code", "linear:parity=0.1.1.0.0;1.1.0.1.0;1.0.0.0.1"
    )
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["message", "00", "01", "10", "11", "syndrome"]
    assert lines[1].split("\t") == ["00000", "01110", "10011", "11101", "000"]
    assert lines[-1].split("\t") == ["10100", "11010", "00111", "01001", "111"]
    assert len(lines) == 9


def test_array_and_simulate_for_6_3(capsys):
    spec = "linear:parity=0.1.1.1.0.0;1.0.1.0.1.0;1.1.0.0.0.1"
    status, out, _ = run(capsys, "array", "--code", spec)
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[-1].split("\t")[0] == "100100"
    status, out, _ = run(
        capsys, "simulate", "--code", spec, "--p", "0.01",
        "--trials", "20000", "--seed", "3", "--policy", "detect=111",
    )
    assert status == 0
    assert "P_det" in out and "exact" in out


def test_simulate_exact_column(capsys):
    status, out, _ = run(
        capsys, "simulate", "--code", "linear:rows=1.0.0.1.1;0.1.1.1.0",
        "--p", "0.01", "--trials", "50000", "--seed", "11",
    )
    assert status == 0
    line = next(l for l in out.splitlines() if l.startswith("P_err"))
    assert "exact=0.00078609" in line


def test_simulate_csv_sweep(capsys):
    status, out, _ = run(
        capsys, "simulate", "--code", "linear:rows=1.0.0.1.1;0.1.1.1.0",
        "--p", "0.005,0.01", "--trials", "5000", "--seed", "8",
        "--format", "csv",
    )
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,metric,exact,estimate,stderr"
    assert len(lines) == 1 + 2 * 3
    assert lines[4].startswith("0.01,P_err,0.0007860898,")


def test_simulate_text_reports_exact_rational(capsys):
    status, out, _ = run(
        capsys, "simulate", "--code", "linear:rows=1.0.0.1.1;0.1.1.1.0",
        "--p", "0.01", "--trials", "2000", "--seed", "8",
    )
    assert status == 0
    assert "exact_rational=3930449/5000000000" in out


def test_analyze_prints_generator(capsys):
    status, out, _ = run(
        capsys, "analyze", "--code", "cyclic:field=GF(3^1),n=8,g=2.0.1.1.2.1"
    )
    assert status == 0
    assert out.splitlines()[0] == "g=a1,0,1,1,a1,1"


def test_simulate_p_zero(capsys):
    status, out, _ = run(
        capsys, "simulate", "--code", "hamming:r=3", "--p", "0",
        "--trials", "1000", "--seed", "2",
    )
    assert status == 0
    assert "P_err: estimate=0 " in out


def test_simulate_rejects_large_p(capsys):
    status, _, err = run(
        capsys, "simulate", "--code", "hamming:r=3", "--p", "0.9",
        "--trials", "10", "--seed", "1",
    )
    assert status == 1


def test_linear_code_from_file(tmp_path, capsys):
    path = tmp_path / "code.txt"
    path.write_text(
        "# a [5,2,3] code\n"
        "GF(2^1)\n"
        "1 0 0 1 1\n"
        "0 1 1 1 0\n"
    )
    status, out, _ = run(
        capsys, "encode", "--code", f"linear:file={path}", "--message", "1,1",
        "--vector",
    )
    assert status == 0
    assert out.strip() == "1,1,1,0,1"


def test_hex_symbols_for_byte_field():
    from blockfec import FiniteField

    f256 = FiniteField(2, 8)
    assert f256.parse_element("0xff") == 255
    assert f256.parse_element("0x1d") == 0x1D
    with pytest.raises(ValueError):
        f256.parse_element("0x100")


def test_product_policy_flags(capsys):
    code = ("product:outer={rs:field=GF(2^3)[1,1,0,1],k=3,n=7},"
            "inner={rs:field=GF(2^3)[1,1,0,1],k=5,n=7}")
    message = ",".join(["a2"] * 15)
    status, encoded, _ = run(capsys, "encode", "--code", code,
                             "--message", message)
    assert status == 0
    status, out, _ = run(
        capsys, "decode", "--code", code, "--received", encoded.strip(),
        "--rerun-inner", "--max-inner-errors", "1", "--format", "record",
    )
    assert status == 0
    assert "verdict=corrected" in out
    # policy flags are product-only
    status, _, err = run(
        capsys, "decode", "--code", RS73,
        "--received", "0,0,0,0,0,0,0", "--rerun-inner",
    )
    assert status == 1


def test_analyze(capsys):
    status, out, _ = run(capsys, "analyze", "--code", "golay23")
    assert status == 0
    assert "perfect=True" in out
    status, out, _ = run(capsys, "analyze", "--code", RS73, "--burst", "2")
    assert status == 0
    assert "singleton_met=True" in out
    assert "efficiency=1" in out
