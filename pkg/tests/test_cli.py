import json
import subprocess
import sys

import pytest

from pccfl import enumerate_words, member, parse_pcg
from pccfl.cli import main, run
from pccfl.gallery import EX1, EX2
from pccfl.words import format_word


def json_of(argv):
    result = run(argv + ["--json"])
    text = result.render(True)
    data = json.loads(text)
    assert json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) == text
    return result.code, data


def test_member_examples(capsys):
    assert main(["member", "gallery:ex2", "absccab"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["member", "gallery:ex1", "ab"]) == 1
    assert capsys.readouterr().out.strip() == "false"


def test_enumerate_json():
    code, data = json_of(["enumerate", "gallery:ex2", "--max-len", "4"])
    assert code == 0 and data == ["s", "asca", "bscb"]


@pytest.mark.parametrize("word", ["absccab", "abscbca", "abs", "s", "bbsccbb", "asac"])
def test_member_is_a_thin_adapter(word):
    code, data = json_of(["member", "gallery:ex2", word])
    assert data["member"] is member(EX2, word)
    assert code == (0 if data["member"] else 1)


def test_multi_letter_tokens():
    assert run(["member", "gallery:ex1", "a", "abar", "b", "bbar", "cbar", "c"]).code == 0
    assert run(["member", "gallery:ex1", "aabarbbbarcbarc"]).code == 0


def test_usage_errors(capsys):
    assert main(["frobnicate"]) == 2
    assert "usage" in capsys.readouterr().err
    assert run(["member", "gallery:nope", "a"]).code == 2
    assert run(["member", "/no/such/file.pcg", "a"]).code == 2
    assert run(["member", "gallery:ex2", "xyz"]).code == 2
    assert run(["enumerate", "gallery:ex2"]).code == 2


def test_budget_exit_code():
    result = run(["member", "gallery:ex2", "aaaabbbbsccccccccabababab", "--budget", "3"])
    assert result.code == 3


def test_witness_and_certificate_files(tmp_path):
    cert = tmp_path / "cert.json"
    code, data = json_of(["witness", "gallery:ex2", "absccab", "--out", str(cert)])
    assert code == 0 and data["production_steps"] == 7 and data["swap_steps"] >= 1
    assert json.loads(cert.read_text()) == data["certificate"]
    assert run(["verify-cert", "gallery:ex2", str(cert), "absccab"]).code == 0
    assert run(["verify-cert", "gallery:ex2", str(cert), "absccba"]).code == 1
    assert run(["witness", "gallery:ex2", "abs"]).code == 1


def test_validate(tmp_path):
    code, data = json_of(["validate", "gallery:ex2"])
    assert code == 0 and data["valid"]
    bad = tmp_path / "bad.pcg"
    bad.write_text("S -a-> S\n")
    assert run(["validate", str(bad)]).code == 1


def test_constructions_write_grammars(tmp_path):
    out = tmp_path / "u.pcg"
    assert run(["union", "gallery:ex2", "gallery:anbn", "--out", str(out)]).code == 0
    g = parse_pcg(out.read_text())
    assert set(enumerate_words(g, 5)) == set(enumerate_words(EX2, 5)) | {tuple("ab"), tuple("aabb")}
    a = tmp_path / "a.pcg"
    a.write_text("A -c->\nA -d->\n")
    b = tmp_path / "b.pcg"
    b.write_text("B -e->\n")
    ab = tmp_path / "ab.pcg"
    ab.write_text("S -a-> T\nT -b->\n")
    code, data = json_of(["subst", str(ab), "--sub", f"a={a}", "--sub", f"b={b}"])
    assert {format_word(w) for w in enumerate_words(parse_pcg(data["grammar"]), 3)} == {"ce", "de"}
    code, data = json_of(["hom", str(ab), "--hom", "a=xy", "--hom", "b=z"])
    assert {format_word(w) for w in enumerate_words(parse_pcg(data["grammar"]), 4)} == {"xyz"}
    assert run(["hom", str(ab), "--hom", "a"]).code == 2


def test_to_mpda_and_runs(tmp_path):
    code, data = json_of(["to-mpda", "gallery:ex1"])
    assert code == 1 and data["witness"] == ["B", "P", "C"]
    out = tmp_path / "ex2.mpda"
    assert run(["to-mpda", "gallery:ex2", "--out", str(out)]).code == 0
    assert run(["mpda", "run", str(out), "absccab"]).code == 0
    code, data = json_of(["mpda", "enum", str(out), "--max-len", "4"])
    assert data == ["s", "asca", "bscb"]


def test_pa_commands():
    code, data = json_of(["pa", "enum", "gallery:pa-example", "--max-len", "4"])
    assert data == ["abcd", "abdc", "adbc"]
    assert run(["pa", "member", "gallery:pa-example", "acbd"]).code == 1
    assert run(["pa", "member", "gallery:ex2", "s"]).code == 2


def test_trace_closure_commands():
    assert run(["trace-closure", "member", "gallery:l3-cfg+indep", "ascb"]).code == 0
    assert run(["trace-closure", "member", "gallery:l3-cfg+indep", "asbb"]).code == 1
    code, data = json_of(["trace-closure", "class", "abc", "--letter-indep", "b c"])
    assert data == ["abc", "acb"]
    assert run(["trace-closure", "class", "a" * 20, "--letter-indep", "b c"]).code == 3


def test_pump_commands():
    code, data = json_of(["pump", "--oracle", "builtin:anbn", "--N", "2", "aaaabbbb"])
    assert code == 0 and data["outcome"] == "found" and data["decomposition"]["s"]
    code, data = json_of(["pump", "--oracle", "builtin:anbncn", "--N", "4", "aaaaabbbbbccccc"])
    assert code == 1 and data["outcome"] == "none"
    assert run(["pump", "--mode", "shuffle-alt", "--oracle", "gallery:anbn", "--N", "2", "aabb"]).code == 0
    assert run(["pump", "--oracle", "builtin:anbncn", "--N", "4", "--budget", "5", "aaabbbccc"]).code == 3


def test_gallery_commands(tmp_path):
    code, names = json_of(["gallery", "list"])
    assert "ex2" in names
    code, data = json_of(["gallery", "get", "ex2"])
    assert data["kind"] == "grammar" and parse_pcg(data["text"]) == EX2
    out = tmp_path / "ex1.pcg"
    assert run(["gallery", "export", "ex1", "--out", str(out)]).code == 0
    assert parse_pcg(out.read_text()) == EX1
    assert run(["gallery", "export", "anbncn"]).code == 2


def test_selftest_subset():
    code, data = json_of(["selftest", "--only", "1,6"])
    assert code == 0 and [d["criterion"] for d in data] == [1, 6] and all(d["passed"] for d in data)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pccfl", "member", "gallery:ex2", "s"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "true"
