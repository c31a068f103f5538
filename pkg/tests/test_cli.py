import json
import subprocess
import sys
from pathlib import Path

import pytest

from isgcoh.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_OK, EXIT_PRECONDITION, _load_json, main
from isgcoh.errors import ParseError
from isgcoh.tmodule_cohomology import Cochain, cocycle_values, is_strongly_normalized

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
FAST = ["--samples", "300"]


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_validate_fixture_and_bundle(capsys):
    assert run(capsys, "validate", "--fixture", "z2")[0] == EXIT_OK
    code, out = run(capsys, "validate", "--bundle", str(DATA / "z2_chain.json"), "--json")
    assert code == EXIT_OK and json.loads(out)["valid"] is True


def test_cohomology_orders(capsys):
    code, out = run(capsys, "cohomology", "--fixture", "z2", "-n", "3", "--json")
    assert code == EXIT_OK and json.loads(out)["H"] == 2
    code, out = run(capsys, "cohomology", "--fixture", "two-chain", "--degree", "3")
    assert code == EXIT_OK and "|H^3| = 1" in out
    code, out = run(capsys, "cohomology", "--fixture", "z2", "-n", "1")
    assert "undefined" in out and "note:" in out


def test_budget_exit_code(capsys, monkeypatch):
    code, out = run(capsys, "cohomology", "--fixture", "z2-chain", "-n", "3")
    assert code == EXIT_BUDGET and "BudgetExceeded" in out
    code, _ = run(capsys, "cohomology", "--fixture", "z2", "-n", "3", "--budget", "4")
    assert code == EXIT_BUDGET
    monkeypatch.setenv("ISGCOH_BUDGET", "4")
    assert run(capsys, "cohomology", "--fixture", "z2", "-n", "3")[0] == EXIT_BUDGET
    monkeypatch.setenv("ISGCOH_BUDGET", "0")
    assert run(capsys, "cohomology", "--fixture", "z2", "-n", "3")[0] == EXIT_OK


def test_non_associative_table_names_a_witness(capsys, tmp_path):
    sg = write(tmp_path, "bad.json", {"elements": ["x", "y", "z"],
                                      "table": [[0, 0, 0], [1, 1, 0], [2, 1, 2]]})
    code, out = run(capsys, "validate", "--semigroup", sg, "--json")
    assert code == EXIT_INVALID
    payload = json.loads(out)
    assert payload["error"] == "NotAssociative" and len(payload["witness"]) == 3


def test_parse_error_reports_position(capsys, tmp_path):
    p = write(tmp_path, "broken.json", '{"elements": ["x"],\n  "table": [[0,]]}')
    code, out = run(capsys, "validate", "--semigroup", p)
    assert code == EXIT_INVALID and "ParseError" in out
    with pytest.raises(ParseError) as exc:
        _load_json(p)
    assert (exc.value.line, exc.value.column) == (2, 16)
    bad_entry = write(tmp_path, "entry.json", {"elements": ["x", "y"], "table": [[0, 1], [1, 7]]})
    code, out = run(capsys, "validate", "--semigroup", bad_entry, "--json")
    assert code == EXIT_INVALID and "not an element index" in json.loads(out)["message"]


def test_cochain_in_the_wrong_component(capsys, tmp_path):
    data = json.loads((DATA / "two_chain.json").read_text())
    data["cochains"] = [{"degree": 3, "entries": {"f,f,f": "a"}}]
    code, out = run(capsys, "validate", "--bundle", write(tmp_path, "b.json", data), "--json")
    assert code == EXIT_INVALID
    report = json.loads(out)
    assert report["cochain[0]"]["violations"] == [{"axiom": "component", "witness": ["f", "f", "f"]}]


def test_roundtrip_theorem_mode(capsys):
    code, out = run(capsys, "roundtrip", "--bundle", str(DATA / "z2.json"), *FAST)
    assert code == EXIT_OK and "roundtrip passed" in out


def test_roundtrip_extension_mode_and_preconditions(capsys):
    bundle = str(DATA / "two_chain.json")
    code, _ = run(capsys, "roundtrip", "--bundle", bundle, "--mode", "extension", "--normalize", *FAST)
    assert code == EXIT_OK
    code, out = run(capsys, "roundtrip", "--bundle", bundle, "--mode", "extension",
                    "--transversal", "plain", "--normalize", *FAST)
    assert code == EXIT_PRECONDITION and "NotAdmissible" in out


def test_not_strongly_normalized_is_a_precondition(capsys, tmp_path, z2_mod):
    loose = next(c for c in (Cochain(z2_mod, 3, v) for v in cocycle_values(z2_mod, 3))
                 if not is_strongly_normalized(c))
    data = json.loads((DATA / "z2.json").read_text())
    data["cochains"] = [loose.to_json()]
    b = write(tmp_path, "b.json", data)
    code, out = run(capsys, "roundtrip", "--bundle", b, "--mode", "extension", *FAST)
    assert code == EXIT_PRECONDITION and "NotStronglyNormalized" in out
    assert run(capsys, "roundtrip", "--bundle", b, "--mode", "extension", "--normalize",
               *FAST)[0] == EXIT_OK


def test_not_f_inverse_is_a_precondition(capsys, tmp_path):
    # two incomparable idempotents over a zero: no identity, so not an F-inverse monoid
    names = ["p", "q", "0"]
    table = [[0, 2, 2], [2, 1, 2], [2, 2, 2]]
    module = {"components": {n: {"elements": [f"1{n}"], "table": [[0]]} for n in names},
              "theta": {n: f"1{n}" for n in names},
              "eta": {t: {f"1{e}": f"1{names[table[table[i][j]][i]]}"
                          for j, e in enumerate(names)}
                      for i, t in enumerate(names)}}
    bundle = {"semigroup": {"elements": names, "table": table}, "module": module,
              "cochains": [{"degree": 3, "entries": {}}]}
    b = write(tmp_path, "b.json", bundle)
    assert run(capsys, "validate", "--bundle", b)[0] == EXIT_OK
    code, out = run(capsys, "roundtrip", "--bundle", b, *FAST)
    assert code == EXIT_PRECONDITION and "NotFInverse" in out


def test_roundtrip_json_is_deterministic(capsys):
    argv = ["roundtrip", "--bundle", str(DATA / "z2_chain.json"), "--json", "--seed", "3", *FAST]
    a, b = run(capsys, *argv), run(capsys, *argv)
    assert a == b and a[0] == EXIT_OK
    assert json.loads(a[1])["descriptor"]["seed"] == 3


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "isgcoh.cli", "validate", "--fixture", "z2"],
                         capture_output=True, text=True)
    assert out.returncode == EXIT_OK and out.stdout.strip() == "valid"
