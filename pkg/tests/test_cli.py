import io
import json

import pytest

from dblcat import cli, prof


def _run(argv, tmp_path):
    out = io.StringIO()
    code = cli.run(argv + ["--out", str(tmp_path / "r.json"), "--json"], out)
    return code, json.loads(out.getvalue()) if out.getvalue().strip() else None


def _strip(rep):
    for r in rep["rows"]:
        r.pop("wall_time", None)
        ev = r.get("evidence")
        if isinstance(ev, dict):
            for row in ev.get("rows", []):
                row.pop("wall_time", None)
    return rep


@pytest.mark.parametrize("argv", [
    ["laws", "--instance", "span", "--max-size", "1", "--samples", "5"],
    ["fibrancy", "--instance", "rel", "--max-size", "1"],
    ["cartesian", "--instance", "span", "--max-size", "1", "--samples", "5"],
    ["tabulator", "--instance", "span", "--max-size", "1", "--samples", "5"],
    ["karoubi", "--max-size", "2", "--samples", "10"],
    ["prof", "kleisli", "--max-size", "2"],
])
def test_subcommands_exit_zero(argv, tmp_path):
    code, rep = _run(argv, tmp_path)
    assert code == 0 and rep["ok"] and rep["schema"] == cli.SCHEMA
    assert json.loads((tmp_path / "r.json").read_text())["rows"]


def test_report_is_deterministic(tmp_path):
    argv = ["cartesian", "--instance", "rel", "--max-size", "2", "--samples", "8", "--seed", "4"]
    _, a = _run(argv, tmp_path)
    _, b = _run(argv, tmp_path)
    assert _strip(a) == _strip(b)


def test_negative_size_is_config_error(tmp_path):
    assert _run(["laws", "--instance", "span", "--max-size", "-1"], tmp_path)[0] == 2


def test_unknown_instance_rejected(tmp_path):
    assert _run(["laws", "--instance", "bogus"], tmp_path)[0] == 2


def test_unsupported_instance(tmp_path):
    assert _run(["tabulator", "--instance", "prof", "--max-size", "1"], tmp_path)[0] == 2


def test_malformed_json_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"categories": {"A": [1, 2,}}')
    assert _run(["prof", "compose", "--input", str(bad)], tmp_path)[0] == 2
    assert "line 1 column" in capsys.readouterr().err


def test_invalid_category_input(tmp_path):
    bad = tmp_path / "bad.json"
    cat = prof.z2().to_json()
    cat["comp"] = cat["comp"][:-1]
    bad.write_text(json.dumps({"categories": {"A": cat}}))
    assert _run(["prof", "validate", "--input", str(bad)], tmp_path)[0] == 2


def test_compose_from_file(tmp_path):
    c = prof.z2()
    h = prof.hom_profunctor(c)
    doc = {"categories": {"Z": c.to_json()},
           "M": dict(h.to_json(), src="Z", tgt="Z"), "N": dict(h.to_json(), src="Z", tgt="Z")}
    path = tmp_path / "in.json"
    path.write_text(json.dumps(doc))
    code, rep = _run(["prof", "compose", "--input", str(path)], tmp_path)
    assert code == 0
    assert len(rep["rows"][0]["composite"]["carrier"]) == 2


def test_compose_needs_input(tmp_path):
    assert _run(["prof", "compose"], tmp_path)[0] == 2
