import json

import pytest

from sepred.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    payload = json.loads(out) if out.strip() else {}
    return code, payload


def test_factor_uni_cli(capsys):
    code, payload = run_cli(capsys, "factor-uni", "x^4+4")
    assert code == 1  # reducible
    assert payload["schema_version"] == 1
    assert len(payload["result"]["factors"]) == 2
    code, _ = run_cli(capsys, "factor-uni", "x^2-2")
    assert code == 0


def test_factor_bi_cli(capsys):
    code, payload = run_cli(capsys, "factor-bi", "X^4 + 4*Y^4")
    assert code == 1
    assert [f["degX"] for f in payload["result"]["factors"]] == [2, 2]
    code, _ = run_cli(capsys, "factor-bi", "X^2 + Y^2")
    assert code == 0


def test_factor_bi_cli_with_field(capsys):
    code, payload = run_cli(capsys, "factor-bi", "X^2 + Y^2", "--field", "x^2+1", "--gen", "i")
    assert code == 1


def test_classify_cli(capsys):
    code, payload = run_cli(capsys, "classify", "--", "x^4-4*x^2+2", "-x^4+4*x^2-2")
    assert code == 0 and payload["verdict"]["case"] == "Irreducible"
    code, payload = run_cli(capsys, "classify", "--field", "x^2-2", "--gen", "s", "--",
                            "x^4-4*x^2+2", "-x^4+4*x^2-2")
    assert code == 1 and payload["verdict"]["case"] == "DicksonPair"
    assert payload["witness_verified"]


def test_decompose_cli(capsys):
    code, payload = run_cli(capsys, "decompose", "x^6+2*x^4+x^2")
    assert code == 0
    assert len(payload["chains"]) == 2


def test_families_cli(capsys):
    code, payload = run_cli(capsys, "families", "verify", "Dickson4")
    assert code == 0 and payload["report"]["ok"]
    code, payload = run_cli(capsys, "families", "emit", "Deg7_237")
    assert code == 0 and payload["result"]["h1"].startswith("x^7")
    code, payload = run_cli(capsys, "families", "emit", "T4")
    assert payload["result"]["poly"] == "x^4 - 4*x^2 + 2"
    code, _ = run_cli(capsys, "families", "emit", "H4")
    assert code == 0


def test_group_cli(capsys):
    code, payload = run_cli(capsys, "group", "basics", "(0 1 2 3)")
    assert code == 0
    assert payload["report"]["order"] == 4
    code, payload = run_cli(capsys, "group", "nilpclass", "(0 1 2 3)", "(1 3)")
    assert payload["report"]["class"] == 2
    code, payload = run_cli(capsys, "group", "two-action",
                            "(0 1 2 3)", "(1 3)",
                            "--h1", "(1 3)", "--h2", "(0 1)(2 3)")
    assert code == 1 and payload["report"]["reducible"]


def test_group_wreath_cli(capsys):
    code, payload = run_cli(capsys, "group", "wreath", "(0 1)",
                            "--top-gens", "(0 1)", "--top-degree", "2")
    assert code == 0 and payload["report"]["order"] == 8


def test_scan_cli(capsys):
    code, payload = run_cli(capsys, "scan", "x^4", "20")
    assert code == 1  # nonempty residual
    assert payload["report"]["residual"] == [-4]
    code, payload = run_cli(capsys, "scan", "x^3", "10")
    assert code == 0


def test_stability_cli(capsys):
    code, payload = run_cli(capsys, "stability", "x^2", "2", "100")
    assert code == 1
    assert payload["report"]["difference"] == [-64, -4]


def test_mn_check_cli(capsys):
    code, payload = run_cli(capsys, "mn-check", "x^3-3*x+1", "x^2-x", "x^2", "x^2")
    assert code == 0 and payload["report"]["irreducible"]
    code, payload = run_cli(capsys, "mn-check", "x^3", "x^2", "x", "x")
    assert code == 3  # precondition violated -> input error


def test_bad_input_exit_code(capsys):
    code = main(["factor-uni", "x^^ +"])
    assert code == 3
