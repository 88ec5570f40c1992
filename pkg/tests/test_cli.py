"""Command-line interface: outputs, exit codes and structured errors."""

import json
import subprocess
import sys

import pytest

from radtilt.cli import main


def run(*args):
    return subprocess.run([sys.executable, "-m", "radtilt", *args], capture_output=True, text=True, timeout=300)


def call(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_radical_index(capsys):
    code, out, _ = call(capsys, "radical", "index", "eje1a", "--json")
    assert code == 0
    assert json.loads(out)["r_A"] == 4


def test_radical_index_with_oracle(capsys):
    code, out, _ = call(capsys, "radical", "index", "ejemplo1b", "--oracle", "--json")
    data = json.loads(out)
    assert code == 0 and data["r_A"] == 4 and data["oracle"] == 4


def test_algebra_check(capsys):
    code, out, _ = call(capsys, "algebra", "check", "aprsix", "--json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 13


def test_ar_knit_dot(capsys):
    code, out, _ = call(capsys, "ar", "knit", "one_vertex", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_dynkin_table_e6(capsys):
    code, out, _ = call(capsys, "dynkin", "table", "--type", "E", "--n", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["r"] == 11 and data["nodes"] == 36


def test_dynkin_bad_orientation(capsys):
    code, out, _ = call(capsys, "dynkin", "table", "--type", "A", "--n", "4", "--orientation", "++", "--json")
    assert code == 1
    assert json.loads(out)["error"]["code"] == "dynkin"


def test_tilt_check(capsys):
    code, out, _ = call(capsys, "tilt", "check", "eje1a", "--summands", "P(1)+P(2)+P(3)+S(3)", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["separating"] is True and data["splitting"] is False


def test_tilt_apr(capsys):
    code, out, _ = call(capsys, "tilt", "apr", "aprsix", "--sink", "1", "--json")
    assert code == 0


def test_tilt_chain(capsys):
    code, out, _ = call(capsys, "tilt", "chain", "ejemplo1a", "--sinks", "5,4,3,5,4,5", "--json")
    data = json.loads(out)
    assert code == 0 and data["indices"] == [5] * 7 and data["final_type"] == "A5"


def test_tilt_chain_bad_sink(capsys):
    code, out, _ = call(capsys, "tilt", "chain", "eje1a", "--sinks", "1", "--json")
    assert code == 1 and json.loads(out)["error"]["code"] == "chain"


def test_verify_lines(capsys):
    code, out, _ = call(capsys, "verify", "--claim", "TheoremA,Tsep", "--instance", "eje1a", "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [x["status"] for x in lines] == ["verified", "verified"]


def test_verify_unknown_claim(capsys):
    code, out, _ = call(capsys, "verify", "--claim", "bogus", "--instance", "eje1a", "--json")
    assert code == 1 and json.loads(out)["error"]["code"] == "unknown_claim"


def test_missing_file(capsys):
    code, out, _ = call(capsys, "radical", "index", "/nonexistent/alg.txt", "--json")
    err = json.loads(out)["error"]
    assert code == 1 and err["code"] == "algebra" and err["type"] == "AlgebraError"


def test_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("vertices 1 2\narrow al 1 3\n")
    code, out, _ = call(capsys, "algebra", "check", str(p), "--json")
    assert code == 1 and json.loads(out)["error"]["code"] == "parse"


def test_bad_literal(capsys):
    code, out, _ = call(capsys, "tilt", "check", "eje1a", "--summands", "P(9)", "--json")
    assert code == 1 and json.loads(out)["error"]["code"] == "parse"


def test_usage_error():
    res = run("frobnicate")
    assert res.returncode == 2


def test_plain_text_output(capsys):
    code, out, _ = call(capsys, "radical", "index", "eje1a")
    assert code == 0 and "4" in out


@pytest.mark.parametrize(
    "args",
    [
        ("ar", "knit", "eje1b", "--json"),
        ("verify", "--claim", "all", "--instance", "eje1a", "--json"),
        ("tilt", "check", "aprsix", "--summands", "tau-(S(1))+P(2)+P(3)+P(4)+P(5)+P(6)", "--json"),
    ],
)
def test_json_byte_identical(args):
    a, b = run(*args), run(*args)
    assert a.returncode == b.returncode
    assert a.stdout == b.stdout and a.stdout
