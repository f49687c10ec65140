import io
import json
from importlib import resources

import jsonschema
import pytest

from cohadj.cli import run
from cohadj.monad_lab.categories import chain_poset
from cohadj.monad_lab.examples import closure3

A = "4:(-,2,1,4,1,3,-)"

INVOCATIONS = {
    "validate": ["validate", A],
    "compose": ["compose", "u", "f"],
    "act": ["act", A, "--op", "[5->4: 0 0 1 2 3 4]"],
    "vertices": ["vertices", A],
    "decompose": ["decompose", "1:(-,1,-,1,-)"],
    "normal-form": ["normal-form", A],
    "atomic": ["atomic", "beta"],
    "render": ["render", "omega"],
    "hammock": ["hammock", A],
    "parent": ["parent", "alpha"],
    "to-ss": ["to-ss", "alpha"],
    "enumerate": ["enumerate", "--from", "-", "--to", "+", "--max-dim", "1", "--max-width", "4"],
    "segal": ["segal", "--from", "+", "--to", "+", "--max-width", "4"],
    "subcomputad": ["subcomputad", "{alpha,beta}", "--max-width", "5"],
    "parental": ["parental", "{omega,tau}", "--max-width", "5"],
    "filtrate": ["filtrate", "--from", "{eps}", "--to", "{beta}", "--max-dim", "3", "--max-width", "6"],
    "cell-cert": ["cell-cert", "tau", "--base", "{beta}", "--max-width", "6"],
    "from-ss": ["from-ss", "--pair=-,+", "--objects", "0,1", "--mor", "[0->1: 1]", "--max-width", "6"],
    "coeq-check": ["coeq-check", "--k", "1", "--bound", "2"],
    "resolve": ["resolve", "--monad", "closure2", "--object", "0", "--max-dim", "2"],
    "em": ["em", "--monad", "closure3"],
    "cones": ["cones", "--monad", "closure2", "--n", "1", "--max-width", "5"],
    "compare-em": ["compare-em", "--monad", "closure3", "--max-n", "1", "--max-width", "5"],
    "conservative": ["conservative", "--monad", "identity3"],
    "canonical-resolution": ["canonical-resolution", "--monad", "closure2", "--carrier", "1",
                             "--structure", "1<=1", "--max-dim", "2"],
}


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def schema():
    text = resources.files("cohadj").joinpath("schemas/report.json").read_text()
    doc = json.loads(text)
    jsonschema.Draft202012Validator.check_schema(doc)
    return doc


def test_every_subcommand_is_covered():
    from cohadj.cli import build_parser
    assert set(build_parser().parse_args(["validate", "f"])._cmds) == set(INVOCATIONS)


@pytest.mark.parametrize("name", sorted(INVOCATIONS))
def test_json_output_matches_schema(name, schema):
    code, out, err = call("--json", *INVOCATIONS[name])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["command"] == name and doc["ok"] is True
    jsonschema.validate(doc, schema)
    # the flag may also follow the subcommand
    code2, out2, _ = call(*INVOCATIONS[name], "--json")
    assert code2 == 0 and out2 == out


@pytest.mark.parametrize("name", sorted(INVOCATIONS))
def test_text_output_is_deterministic(name):
    first = call(*INVOCATIONS[name])
    assert first[0] == 0
    assert call(*INVOCATIONS[name]) == first


def test_act_golden():
    code, out, _ = call(*INVOCATIONS["act"])
    assert code == 0 and out.strip() == "5:(-,3,2,5,2,4,-)"


def test_compose_golden():
    code, out, _ = call("compose", "0:(-)", "0:(-)")
    assert code == 0 and out.strip() == "0:(-)"


def test_filtrate_golden():
    code, out, _ = call("--json", *INVOCATIONS["filtrate"])
    stages = json.loads(out)["result"]["stages"]
    assert len(stages) == 1
    assert stages[0]["triple"] == [3, 2, 2]
    assert [c["label"] for c in stages[0]["certificates"]] == ["Type3{2}"]


def test_bounds_header():
    code, out, _ = call("segal", "--from", "+", "--to", "+", "--max-width", "4")
    assert out.splitlines()[0].startswith("# bounds:") and "max_width=4" in out.splitlines()[0]


def test_env_width(monkeypatch):
    monkeypatch.setenv("COHADJ_MAX_WIDTH", "3")
    code, out, _ = call("--json", "enumerate", "--from", "-", "--to", "+", "--max-dim", "0")
    assert json.loads(out)["bounds"]["max_width"] == 3
    monkeypatch.setenv("COHADJ_MAX_WIDTH", "x")
    code, _, err = call("enumerate", "--from", "-", "--to", "+")
    assert code == 2 and "COHADJ_MAX_WIDTH" in err


def test_default_width(monkeypatch):
    monkeypatch.delenv("COHADJ_MAX_WIDTH", raising=False)
    code, out, _ = call("--json", "enumerate", "--from", "-", "--to", "+", "--max-dim", "0")
    assert json.loads(out)["bounds"]["max_width"] == 8


@pytest.mark.parametrize("argv", [
    ["validate", "2:(-,x,+)"],
    ["compose", "f", "f"],
    ["act", A, "--op", "[5->3: 0 0 1 2 3 3]"],
    ["resolve", "--monad", "nosuch", "--object", "0"],
    ["nosuch"],
    ["act", A],
    ["conservative"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_syntax_error_reports_position():
    code, _, err = call("validate", "2:(-,x,+)")
    assert code == 2 and "5" in err


def test_verification_failure_exits_1():
    code, out, _ = call("parental", "{alpha,beta}", "--max-width", "5")
    assert code == 1 and "2:(+,1,2,-)" in out
    code, out, _ = call("--json", "parental", "{alpha,beta}", "--max-width", "5")
    assert code == 1 and json.loads(out)["ok"] is False
    code, _, err = call("filtrate", "--from", "{f}", "--to", "{alpha,beta}", "--max-width", "5")
    # a non-parental input is a precondition failure, not a failed verification
    assert code == 2 and "NotParental" in err


def test_conservative_functor_file(tmp_path):
    two, one = chain_poset(2), chain_poset(1)
    data = {"source": two.to_json(), "target": one.to_json(),
            "objMap": {"0": "0", "1": "0"}, "morMap": {m: "0<=0" for m in two.morphisms}}
    path = tmp_path / "collapse.json"
    path.write_text(json.dumps(data))
    code, out, _ = call("conservative", "--functor", str(path))
    assert code == 1 and "witness 0<=1" in out


def test_monad_json_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(closure3().to_json()))
    assert call("em", "--monad", str(path)) == call("em", "--monad", "closure3")
    bad = closure3().to_json()
    bad["mu"]["0"] = "0<=0"
    path.write_text(json.dumps(bad))
    code, _, err = call("em", "--monad", str(path))
    assert code == 1 and "law violation" in err
