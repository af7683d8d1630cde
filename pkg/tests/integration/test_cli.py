"""Integration tests for the command-line interface."""

import csv
import json
import os

import numpy as np
import pytest
from click.testing import CliRunner

from entgraph.archive import WitnessLedger
from entgraph.cli.main import cli
from entgraph.exporters import load_graph, load_state, save_graph
from entgraph.models.archive_entry import ArchiveAction
from entgraph.models.graph import EntangledGraph
from tests.conftest import FIXTURES_DIR


def _fixture(name: str) -> str:
    return str(FIXTURES_DIR / name)


def _run(*args: str):
    return CliRunner().invoke(cli, ["--log-level", "WARNING", *args])


class TestBuildMixed:
    def test_triangle(self, tmp_path):
        out = tmp_path / "state.json"
        result = _run("build-mixed", _fixture("triangle_entangled.json"), "--out", str(out))
        assert result.exit_code == 0, result.output
        assert "0.25" in result.output
        assert load_state(str(out)).n == 3

    def test_dense_output_beside_state(self, tmp_path):
        out = tmp_path / "pair.json"
        result = _run("build-mixed", _fixture("pair_empty.json"), "--out", str(out), "--dense")
        assert result.exit_code == 0, result.output
        dense = load_state(str(tmp_path / "pair_dense.json"))
        np.testing.assert_allclose(dense.matrix, np.eye(4) / 4)

    def test_single_vertex_is_a_usage_error(self, tmp_path):
        result = _run(
            "build-mixed", _fixture("single_vertex.json"), "--out", str(tmp_path / "s.json")
        )
        assert result.exit_code == 2
        assert not (tmp_path / "s.json").exists()

    def test_invalid_graph(self, tmp_path):
        path = tmp_path / "loop.json"
        path.write_text('{"n": 2, "entangled": [[0, 0]], "classical": []}')
        result = _run("build-mixed", str(path), "--out", str(tmp_path / "s.json"))
        assert result.exit_code == 2


class TestClassify:
    def test_ghz_gives_dashed_triangle(self, tmp_path):
        out = tmp_path / "ghz_graph.json"
        dot = tmp_path / "ghz.dot"
        result = _run("classify", _fixture("ghz3.json"), "--out", str(out), "--dot", str(dot))
        assert result.exit_code == 0, result.output
        assert load_graph(str(out)) == EntangledGraph(n=3, classical=[(0, 1), (0, 2), (1, 2)])
        assert dot.read_text().count("[style=dashed]") == 3
        with open(tmp_path / "ghz_graph_verdicts.json") as f:
            assert len(json.load(f)) == 3

    def test_w_gives_solid_triangle(self, tmp_path):
        dot = tmp_path / "w.dot"
        result = _run(
            "classify",
            _fixture("w3.json"),
            "--out",
            str(tmp_path / "w.json"),
            "--dot",
            str(dot),
            "--jobs",
            "2",
        )
        assert result.exit_code == 0, result.output
        assert dot.read_text().count("[style=solid]") == 3

    def test_catalog_state(self, tmp_path):
        out = tmp_path / "h.json"
        result = _run("classify", _fixture("catalog_h.json"), "--out", str(out))
        assert result.exit_code == 0, result.output
        assert load_graph(str(out)) == EntangledGraph(
            n=3, entangled=[(0, 1), (1, 2)], classical=[(0, 2)]
        )

    def test_invalid_state_is_numerical_error(self, tmp_path):
        result = _run("classify", _fixture("not_psd.json"), "--out", str(tmp_path / "g.json"))
        assert result.exit_code == 3

    def test_malformed_state_is_usage_error(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"n": 2, "amplitudes": [[1.0]]}')
        result = _run("classify", str(path), "--out", str(tmp_path / "g.json"))
        assert result.exit_code == 2

    def test_rejects_non_positive_tolerance(self, tmp_path):
        result = _run("classify", _fixture("w3.json"), "--tol-ent", "0")
        assert result.exit_code == 2


class TestRoundTrip:
    @pytest.mark.parametrize(
        "graph",
        [
            EntangledGraph(n=3, entangled=[(0, 1)], classical=[(1, 2)]),
            EntangledGraph(n=5, entangled=[(0, 4), (1, 2)], classical=[(0, 1), (2, 3)]),
        ],
    )
    def test_graph_file_reproduced_byte_for_byte(self, graph, tmp_path):
        source = save_graph(graph, str(tmp_path / "in.json"))
        state = tmp_path / "state.json"
        assert _run("build-mixed", source, "--out", str(state)).exit_code == 0
        extracted = tmp_path / "out.json"
        assert _run("classify", str(state), "--out", str(extracted)).exit_code == 0
        assert extracted.read_bytes() == (tmp_path / "in.json").read_bytes()


class TestFeasibility:
    def test_correlated_pair(self, tmp_path):
        archive = tmp_path / "archive"
        result = _run(
            "feasibility", _fixture("pair_classical.json"), "--archive-dir", str(archive)
        )
        assert result.exit_code == 1
        assert "R3" in result.output
        assert not archive.exists()

    def test_classical_web_archived(self, tmp_path):
        archive = tmp_path / "archive"
        out = tmp_path / "verdict.json"
        result = _run(
            "feasibility",
            _fixture("web4_classical.json"),
            "--archive-dir",
            str(archive),
            "--out",
            str(out),
        )
        assert result.exit_code == 0, result.output
        assert (archive / "feasibility_4_111111.json").exists()
        assert (archive / "ledger.jsonl").exists()
        with open(out) as f:
            data = json.load(f)
        assert data["status"] == "feasible-constructive"
        assert data["rules"] == ["R5"]
        assert data["witness"].endswith("feasibility_4_111111.json")
        (entry,) = WitnessLedger(str(archive)).load_from_file()
        (webs,) = entry.parameters["webs"]
        assert webs["vertices"] == [0, 1, 2, 3]
        assert webs["alpha"] == pytest.approx(2**-0.5)
        assert webs["gamma"] == 0.0

    def test_numerical_claim_without_search(self, tmp_path):
        archive = tmp_path / "archive"
        result = _run(
            "feasibility", _fixture("web4_single_entangled.json"), "--archive-dir", str(archive)
        )
        assert result.exit_code == 0, result.output
        assert "R7" in result.output
        assert not archive.exists()

    @pytest.mark.slow
    def test_four_cycle_searched(self, tmp_path):
        archive = tmp_path / "archive"
        result = _run(
            "feasibility",
            _fixture("cycle4_entangled.json"),
            "--search",
            "--seed",
            "0",
            "--archive-dir",
            str(archive),
        )
        assert result.exit_code == 0, result.output
        assert [p.name for p in archive.glob("feasibility_4_*.json")]


class TestCensus:
    def test_three_vertices(self, tmp_path):
        out = tmp_path / "census.csv"
        archive = tmp_path / "archive"
        result = _run("census", "3", "--out", str(out), "--archive-dir", str(archive))
        assert result.exit_code == 0, result.output
        with open(out, newline="") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 10
        assert sum(1 for r in rows if r["status"] == "infeasible") == 4
        assert all(os.path.exists(r["witness"]) for r in rows if r["status"] != "infeasible")

    def test_cap(self, tmp_path):
        result = _run("census", "9", "--out", str(tmp_path / "c.csv"))
        assert result.exit_code == 2


class TestWeb:
    @pytest.fixture
    def single_entangled_triangle(self, tmp_path) -> str:
        g = EntangledGraph(n=3, entangled=[(0, 1)], classical=[(0, 2), (1, 2)])
        return save_graph(g, str(tmp_path / "web3.json"))

    def test_explicit_parameters(self, tmp_path):
        out = tmp_path / "web.json"
        result = _run(
            "web",
            _fixture("web4_classical.json"),
            "--alpha",
            "0.6",
            "--beta",
            "0.8",
            "--gamma",
            "0",
            "--out",
            str(out),
            "--archive-dir",
            str(tmp_path / "archive"),
        )
        assert result.exit_code == 0, result.output
        assert load_state(str(out)).k == 4
        (entry,) = WitnessLedger(str(tmp_path / "archive")).load_from_file()
        assert entry.subject == "4:111111"
        assert entry.parameters == {
            "alpha": 0.6,
            "beta": 0.8,
            "gamma": 0.0,
            "attempts": 1,
            "swept": False,
        }

    def test_partial_parameters(self, tmp_path):
        result = _run("web", _fixture("web4_classical.json"), "--alpha", "0.6")
        assert result.exit_code == 2

    def test_invalid_parameters(self, tmp_path):
        result = _run(
            "web",
            _fixture("web4_classical.json"),
            "--alpha",
            "0.5",
            "--beta",
            "0.5",
            "--gamma",
            "0",
            "--out",
            str(tmp_path / "web.json"),
        )
        assert result.exit_code == 2

    def test_sweep_realizes(self, single_entangled_triangle, tmp_path):
        out = tmp_path / "web.json"
        archive = tmp_path / "archive"
        result = _run(
            "web", single_entangled_triangle, "--out", str(out), "--archive-dir", str(archive)
        )
        assert result.exit_code == 0, result.output
        assert out.exists()
        (entry,) = WitnessLedger(str(archive)).load_from_file()
        assert entry.action == ArchiveAction.WEB
        assert entry.parameters["attempts"] >= 1
        assert set(entry.parameters) == {"alpha", "beta", "gamma", "attempts", "swept"}
        assert (archive / "web_3_112.json").exists()

    def test_sweep_fails(self, tmp_path):
        out = tmp_path / "web.json"
        archive = tmp_path / "archive"
        result = _run(
            "web",
            _fixture("web4_single_entangled.json"),
            "--grid",
            "6",
            "--out",
            str(out),
            "--archive-dir",
            str(archive),
        )
        assert result.exit_code == 1
        assert not out.exists()
        assert not archive.exists()


class TestSearch:
    def test_found_and_archived(self, tmp_path):
        archive = tmp_path / "archive"
        result = _run(
            "search",
            _fixture("pair_entangled.json"),
            "--config",
            _fixture("search_config.json"),
            "--archive-dir",
            str(archive),
            "--trace",
        )
        assert result.exit_code == 0, result.output
        assert "Restart Trace" in result.output
        assert (archive / "search_2_2_seed7.json").exists()
        with open(archive / "search_2_2_seed7_verdicts.json") as f:
            assert json.load(f)[0]["class"] == "entangled"

    def test_not_found(self, tmp_path):
        archive = tmp_path / "archive"
        result = _run(
            "search",
            _fixture("pair_classical.json"),
            "--restarts",
            "2",
            "--max-evals",
            "200",
            "--archive-dir",
            str(archive),
        )
        assert result.exit_code == 1
        assert not archive.exists()

    def test_retry_reported(self, tmp_path):
        result = _run(
            "search",
            _fixture("pair_classical.json"),
            "--restarts",
            "1",
            "--max-evals",
            "100",
            "--retry-factor",
            "2",
            "--archive-dir",
            str(tmp_path / "archive"),
            "--trace",
        )
        assert result.exit_code == 1
        assert "retried" in result.output

    def test_disconnected_graph(self):
        result = _run("search", _fixture("pair_empty.json"), "--restarts", "1")
        assert result.exit_code == 2

    def test_bad_config(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"restarts": 0}')
        result = _run("search", _fixture("pair_entangled.json"), "--config", str(path))
        assert result.exit_code == 2


class TestVerifyArchive:
    def test_valid_then_tampered(self, tmp_path):
        archive = tmp_path / "archive"
        for name in ("pair_entangled.json", "web4_classical.json"):
            _run("feasibility", _fixture(name), "--archive-dir", str(archive))

        result = _run("verify-archive", "--archive-dir", str(archive))
        assert result.exit_code == 0, result.output
        assert "VALID" in result.output

        ledger = archive / "ledger.jsonl"
        lines = ledger.read_text().splitlines()
        entry = json.loads(lines[0])
        entry["subject"] = "2:1"
        lines[0] = json.dumps(entry)
        ledger.write_text("\n".join(lines) + "\n")

        result = _run("verify-archive", "--archive-dir", str(archive))
        assert result.exit_code == 1
        assert "BROKEN" in result.output

    def test_missing_ledger(self, tmp_path):
        result = _run("verify-archive", "--archive-dir", str(tmp_path / "none"))
        assert result.exit_code == 0
