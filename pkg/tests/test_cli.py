import json

import pytest

from mpiassist import cli, corpus, predictor

MPI_TEXT = """\
int main(int argc, char **argv)
{
    int rank;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    MPI_Finalize();
    return 0;
}
"""


@pytest.fixture
def tree(tmp_path):
    root = tmp_path / "src"
    root.mkdir()
    for i in range(4):
        text = MPI_TEXT.replace("int rank;", f"int rank;\n    int pad{i};")
        (root / f"f{i}.c").write_text(text)
    return root


def run(*argv):
    return cli.main(list(argv))


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert run("frobnicate") == 2
        assert "usage" in capsys.readouterr().err

    def test_no_subcommand(self, capsys):
        assert run() == 2

    def test_missing_required_flag(self, capsys):
        assert run("build", "--root", "x") == 2

    def test_missing_config_file(self, capsys):
        assert run("--config", "/nonexistent.conf", "build",
                   "--root", "x", "--out", "y") == 1


class TestBuild:
    def test_creates_dataset_and_manifest(self, tree, tmp_path):
        out = tmp_path / "data.jsonl"
        assert run("build", "--root", str(tree), "--out", str(out)) == 0
        assert out.exists()
        manifest = json.loads((tmp_path / "data.jsonl.manifest.json").read_text())
        assert manifest["included"] == 4
        assert len(corpus.load_dataset(out)) == 4

    def test_deterministic_outputs(self, tree, tmp_path):
        out = tmp_path / "data.jsonl"
        run("build", "--root", str(tree), "--out", str(out))
        first = out.read_bytes()
        first_manifest = (tmp_path / "data.jsonl.manifest.json").read_bytes()
        run("build", "--root", str(tree), "--out", str(out))
        assert out.read_bytes() == first
        assert (tmp_path / "data.jsonl.manifest.json").read_bytes() == first_manifest

    def test_bad_ratios(self, tree, tmp_path, capsys):
        code = run("build", "--root", str(tree), "--out",
                   str(tmp_path / "d.jsonl"), "--ratios", "0.5,0.5,0.5")
        assert code == 1
        assert "ratios" in capsys.readouterr().err

    def test_config_file_defaults(self, tree, tmp_path):
        conf = tmp_path / "run.conf"
        conf.write_text("token_limit = 5\n# comment\n")
        out = tmp_path / "d.jsonl"
        assert run("--config", str(conf), "build", "--root", str(tree),
                   "--out", str(out)) == 0
        manifest = json.loads((tmp_path / "d.jsonl.manifest.json").read_text())
        assert manifest["included"] == 0
        assert manifest["config"]["token_limit"] == 5

    def test_flag_overrides_config(self, tree, tmp_path):
        conf = tmp_path / "run.conf"
        conf.write_text("token_limit = 5\n")
        out = tmp_path / "d.jsonl"
        assert run("--config", str(conf), "build", "--root", str(tree),
                   "--out", str(out), "--token-limit", "320") == 0
        manifest = json.loads((tmp_path / "d.jsonl.manifest.json").read_text())
        assert manifest["included"] == 4


class TestSingleFileCommands:
    def test_prune_stdout(self, tmp_path, capsys):
        f = tmp_path / "x.c"
        f.write_text(MPI_TEXT)
        assert run("prune", str(f)) == 0
        payload = json.loads(capsys.readouterr().out)
        assert "MPI_Init" not in payload["pruned_code"]
        assert [c["name"] for c in payload["removed"]] == [
            "MPI_Init", "MPI_Comm_rank", "MPI_Finalize",
        ]

    def test_xsbt_out_file(self, tmp_path):
        f = tmp_path / "x.c"
        f.write_text(MPI_TEXT)
        out = tmp_path / "x.xsbt"
        assert run("xsbt", str(f), "--out", str(out)) == 0
        assert "<function_definition>" in out.read_text()

    def test_prune_missing_file(self, capsys):
        assert run("prune", "/nonexistent.c") == 1


class TestPipeline:
    def test_baseline_then_evaluate(self, tree, tmp_path, capsys):
        ds = tmp_path / "d.jsonl"
        run("build", "--root", str(tree), "--out", str(ds))
        preds = tmp_path / "p.jsonl"
        assert run("baseline", "--dataset", str(ds), "--out", str(preds),
                   "--split", "all") == 0
        report_path = tmp_path / "report.json"
        assert run("evaluate", "--dataset", str(ds), "--predictions",
                   str(preds), "--out", str(report_path), "--split", "all") == 0
        report = json.loads(report_path.read_text())
        assert report["n_examples"] == 4
        assert 0.0 <= report["m_f1"] <= 1.0

    def test_evaluate_oracle_all_ones(self, tree, tmp_path, capsys):
        ds = tmp_path / "d.jsonl"
        run("build", "--root", str(tree), "--out", str(ds))
        examples = corpus.load_dataset(ds)
        preds = tmp_path / "p.jsonl"
        predictor.write_predictions(
            preds,
            [predictor.PredictionRecord(ex.id, ex.label_code) for ex in examples],
        )
        report_path = tmp_path / "report.json"
        assert run("--pretty", "evaluate", "--dataset", str(ds),
                   "--predictions", str(preds), "--out", str(report_path),
                   "--split", "all") == 0
        report = json.loads(report_path.read_text())
        assert report["m_f1"] == 1.0
        assert report["exact_match_acc"] == 1.0
        assert "M-F1" in capsys.readouterr().out

    def test_bench_without_execution(self, tmp_path):
        out = tmp_path / "bench.csv"
        assert run("bench", "--out", str(out), "--skip-execution") == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 13
        assert lines[-1].startswith("total,")
