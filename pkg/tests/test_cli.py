import json

import pytest

from nnrepr.boolfn import BoolFn
from nnrepr.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, load_input, main
from nnrepr.core.base import PassReport


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for var in ("NNREPR_JOBS", "NNREPR_BUDGET", "NNREPR_CHECKPOINT_DIR", "NNREPR_LOG_LEVEL"):
        monkeypatch.delenv(var, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_mpptf(tmp_path, capsys, n=3):
    path = tmp_path / "xor.json"
    code, _ = run(capsys, "construct", "--family", "xor", "--n", str(n), "--model", "mpptf", "--out", str(path))
    assert code == EXIT_OK
    return path


class TestLoadInput:
    def test_literals(self):
        assert load_input("family:maj:3").ones() == 4
        assert load_input("table:n=2:6") == BoolFn.parse_hex("n=2:6")

    def test_bad_family_literal(self):
        with pytest.raises(ValueError):
            load_input("family:maj")


class TestConstruct:
    def test_mpptf_document(self, capsys):
        code, out = run(capsys, "construct", "--family", "xor", "--n", "4", "--model", "mpptf")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["model"] == "mpptf"
        assert len(doc["left"]) + len(doc["right"]) == 5

    def test_unknown_model(self, capsys):
        code, _ = run(capsys, "construct", "--family", "maj", "--n", "3", "--model", "ldl")
        assert code == EXIT_USAGE


class TestVerify:
    def test_equal(self, tmp_path, capsys):
        path = write_mpptf(tmp_path, capsys)
        code, out = run(capsys, "verify", "--a", str(path), "--b", "family:xor:3")
        assert code == EXIT_OK
        assert json.loads(out)["status"] == "EQUAL"

    def test_mismatch(self, capsys):
        code, out = run(capsys, "verify", "--a", "family:xor:2", "--b", "family:maj:2")
        doc = json.loads(out)
        assert code == EXIT_MISMATCH
        assert doc["status"] == "MISMATCH"
        assert doc["witness"] == [1, 1]
        assert "wall_time" not in doc

    def test_malformed_document(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"model": "mpptf", "arity": 1, "left": [')
        code, _ = run(capsys, "verify", "--a", str(bad), "--b", "family:xor:1")
        assert code == EXIT_USAGE

    def test_missing_file(self, capsys):
        code, _ = run(capsys, "verify", "--a", "nowhere.json", "--b", "family:xor:1")
        assert code == EXIT_USAGE


class TestConvert:
    def test_inline_output_and_report(self, tmp_path, capsys):
        path = write_mpptf(tmp_path, capsys)
        code, out = run(capsys, "convert", "--pass", "mpptf-to-hnn", "--in", str(path))
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["output"]["model"] == "nn"
        assert doc["output"]["boolean"] is True
        assert PassReport.model_validate(doc["report"]).met

    def test_output_file(self, tmp_path, capsys):
        path = write_mpptf(tmp_path, capsys)
        target = tmp_path / "hnn.json"
        code, out = run(capsys, "convert", "--pass", "mpptf-to-hnn", "--in", str(path), "--out", str(target))
        assert code == EXIT_OK
        assert json.loads(target.read_text())["model"] == "nn"
        assert json.loads(out)["name"] == "mpptf-to-hnn"

    def test_symmetric_circuit_document(self, tmp_path, capsys):
        path = tmp_path / "ip.json"
        code, _ = run(capsys, "construct", "--family", "ip", "--n", "2", "--model", "sym_and", "--out", str(path))
        assert code == EXIT_OK
        assert json.loads(path.read_text())["model"] == "sym_and"
        target = tmp_path / "knn.json"
        code, out = run(capsys, "convert", "--pass", "sym_and-to-knn", "--in", str(path), "--out", str(target))
        assert code == EXIT_OK
        assert PassReport.model_validate_json(out).met
        code, out = run(capsys, "verify", "--a", str(target), "--b", "family:ip:2")
        assert code == EXIT_OK
        assert json.loads(out)["status"] == "EQUAL"

    def test_unknown_pass(self, tmp_path, capsys):
        path = write_mpptf(tmp_path, capsys)
        code, _ = run(capsys, "convert", "--pass", "mpptf-to-banana", "--in", str(path))
        assert code == EXIT_USAGE

    def test_wrong_source_kind(self, capsys):
        code, _ = run(capsys, "convert", "--pass", "mpptf-to-hnn", "--in", "family:xor:2")
        assert code == EXIT_USAGE

    def test_missing_arguments(self, capsys):
        assert main(["convert", "--pass", "mpptf-to-hnn"]) == EXIT_USAGE


class TestOtherCommands:
    def test_components(self, capsys):
        code, out = run(capsys, "components", "--in", "family:xor:3")
        assert code == EXIT_OK
        assert json.loads(out) == {"arity": 3, "components": 4}

    def test_search(self, capsys):
        code, out = run(capsys, "search-min-hnn", "--in", "family:maj:3")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["m"] == 2
        assert doc["witness"]["model"] == "nn"

    def test_search_budget(self, tmp_path, capsys):
        code, _ = run(
            capsys, "search-min-hnn", "--in", "family:maj:4", "--budget", "5",
            "--checkpoint-dir", str(tmp_path / "ckpt"),
        )
        assert code == EXIT_USAGE
        assert list((tmp_path / "ckpt").glob("nnrepr-min-hnn-*.json"))

    def test_emit_dot(self, tmp_path, capsys):
        path = tmp_path / "disj.json"
        run(capsys, "construct", "--family", "disj", "--n", "2", "--model", "hnn", "--out", str(path))
        code, out = run(capsys, "emit-circuit", "--in", str(path), "--variant", "depth2", "--format", "dot")
        assert code == EXIT_OK
        assert out.count("shape=circle") == 48

    def test_emit_needs_nn(self, capsys):
        code, _ = run(capsys, "emit-circuit", "--in", "family:xor:2")
        assert code == EXIT_USAGE

    def test_bitcomplexity(self, tmp_path, capsys):
        path = tmp_path / "cnf.json"
        run(capsys, "construct", "--family", "exact-half-cnf", "--n", "4", "--k", "2", "--model", "nn", "--out", str(path))
        code, out = run(capsys, "bitcomplexity", "--in", str(path))
        assert code == EXIT_OK
        assert json.loads(out) == {"model": "nn", "bit_complexity": 4}

    def test_report(self, tmp_path, capsys):
        path = write_mpptf(tmp_path, capsys)
        code, out = run(
            capsys, "report", "--in", str(path), "--pass", "mpptf-to-hnn", "--pass", "hnn-to-depth3",
            "--checkpoint-dir", str(tmp_path / "traces"),
        )
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["output"]["model"] == "circuit"
        assert [r["name"] for r in doc["reports"]] == ["mpptf-to-hnn", "hnn-to-depth3"]
        assert len(list((tmp_path / "traces").glob("nnrepr-trace_*.json"))) == 2
