import json

import jsonschema
import pytest

from finitop import sierpinski, v_space
from finitop.cli import load_space, main
from finitop.schemas import SCHEMAS


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS[schema])
    return code, doc


@pytest.fixture
def space_file(tmp_path):
    def write(X, name="space.json"):
        p = tmp_path / name
        p.write_text(json.dumps(X.to_dict()))
        return str(p)
    return write


def test_schemas_are_valid():
    for s in SCHEMAS.values():
        jsonschema.Draft7Validator.check_schema(s)


def test_enumerate(capsys):
    code, doc = run_json(capsys, "enumerate", "enumerate", "--n", "3", "--iso")
    assert code == 0 and doc["count"] == 9
    code, doc = run_json(capsys, "enumerate", "enumerate", "--n", "3", "--t0", "--list")
    assert doc["count"] == 19 and len(doc["spaces"]) == 19


def test_check_exit_codes(capsys, space_file):
    code, doc = run_json(capsys, "check", "check", "--space", space_file(sierpinski()), "--property", "vacnormal")
    assert code == 0 and doc["verdict"] is True
    code, doc = run_json(capsys, "check", "check", "--space", space_file(v_space()), "--property", "normal")
    assert code == 1 and doc["witness"] == [[0], [1]]


def test_check_builtin_names(capsys):
    code, doc = run_json(capsys, "check", "check", "--space", "discrete2", "--property", "vacnormal")
    assert code == 1


def test_usage_errors(capsys, tmp_path):
    code, out, err = run(capsys, "check", "--space", "nonexistent.json", "--property", "normal")
    assert code == 2 and err and not out
    code, out, err = run(capsys, "check", "--space", "sierpinski", "--property", "bogus")
    assert code == 2 and "bogus" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "le": [[0, 1], [1, 2]]}')
    code, out, err = run(capsys, "check", "--space", str(bad), "--property", "normal")
    assert code == 2 and "Transitivity" in err
    code, out, err = run(capsys, "frobnicate")
    assert code == 2
    code, out, err = run(capsys, "search", "--where", "normal(X", "--bound", "X=2")
    assert code == 2 and "column 9" in err
    code, out, err = run(capsys, "search", "--where", "normal(X)", "--bound", "X")
    assert code == 2


def test_decompose(capsys, space_file):
    code, doc = run_json(capsys, "decompose", "decompose", "--space", "lambda_space")
    assert code == 0 and doc["z"] == [2]
    code, doc = run_json(capsys, "decompose", "decompose", "--space", space_file(v_space()))
    assert code == 1 and doc["decomposed"] is False
    code, doc = run_json(capsys, "decompose", "decompose", "--space", "e_space")
    assert code == 1
    code, out, _ = run(capsys, "decompose", "--space", "lambda_space", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_shrink(capsys, space_file, tmp_path):
    cover = tmp_path / "cover.json"
    cover.write_text(json.dumps({"members": [[0], [0, 1]]}))
    code, doc = run_json(capsys, "shrink", "shrink", "--space", space_file(sierpinski()), "--cover", str(cover))
    assert code == 0 and doc["shrinking"]["members"] == [[], [0, 1]]
    jsonschema.validate(json.loads(cover.read_text()), SCHEMAS["cover"])
    cover.write_text(json.dumps({"members": [[0, 2], [1, 2]]}))
    code, doc = run_json(capsys, "shrink", "shrink", "--space", space_file(v_space()), "--cover", str(cover))
    assert code == 1 and not doc["shrinks"]
    cover.write_text(json.dumps({"members": [[1]]}))
    code, _, err = run(capsys, "shrink", "--space", space_file(sierpinski()), "--cover", str(cover))
    assert code == 2


def test_search(capsys):
    code, doc = run_json(capsys, "search", "search", "--where", "!normal(X)", "--bound", "X=3")
    assert code == 1 and doc["verdict"] == "counterexample"
    assert load_space_from(doc["witness"]["X"]).n == 3
    code, doc = run_json(capsys, "search", "search", "--where", "!normal(X)", "--bound", "X=2", "--workers", "2")
    assert code == 0 and doc["verdict"] == "exhausted_none"


def load_space_from(d):
    from finitop import FinSpace
    return FinSpace.from_dict(d)


def test_symbolic_verify(capsys):
    code, doc = run_json(capsys, "symbolic-verify", "symbolic-verify", "--claim", "staircase_lid_inseparable",
                         "--windows", "8,16")
    assert code == 0 and doc["verdict"] is True
    code, doc = run_json(capsys, "symbolic-verify", "symbolic-verify", "--claim", "staircase_upper_omega",
                         "--windows", "8")
    assert code == 1
    code, _, _ = run(capsys, "symbolic-verify", "--windows", "eight")
    assert code == 2


def test_suite(capsys):
    code, doc = run_json(capsys, "suite", "suite", "--id", "prop_2_2_3_shrink_iff_normal", "--max-n", "4")
    assert code == 0 and doc["verdict"] == "pass"
    code, _, err = run(capsys, "suite", "--id", "nope", "--max-n", "2")
    assert code == 2


def test_export(capsys):
    code, out, _ = run(capsys, "export", "--space", "divisor12", "--format", "dot")
    assert code == 0
    nodes = [ln.split("[")[0].strip() for ln in out.splitlines() if "[" in ln and "->" not in ln]
    assert nodes and len(nodes) == len(set(nodes))
    code, doc = run_json(capsys, "space", "export", "--space", "sierpinski", "--format", "json")
    assert doc == sierpinski().to_dict()


def test_schema_command(capsys):
    code, out, _ = run(capsys, "schema", "search")
    assert code == 0 and json.loads(out) == SCHEMAS["search"]


def test_load_space():
    assert load_space("sierpinski") == sierpinski()
    assert load_space("chain_lower3").n == 3
    assert load_space("divisor9").n == 8
