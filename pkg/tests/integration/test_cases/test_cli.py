"""
Command-Line Test Cases
Parsing, precedence and exit codes, plus end-to-end runs of every subcommand on small files.
"""
import json
import logging

import allure
import pytest

from core.base.base_test import BaseTest
from core.mapping.model_io import load_model
from core.specialisation.embedding_store import load_embeddings
from runners.cli_runner import parse_args, run
from tests.helpers.synthetic_factory import SyntheticFactory

SMALL_FLAGS = ["--epochs", "1", "--batch", "5", "--hidden", "1", "--width", "8",
               "--map-epochs", "3", "--k", "2", "--batch-size", "8", "--seed", "3"]


@pytest.fixture
def cli_files(tmp_path):
    """Vectors, constraints and an evaluation file whose words stay unseen"""
    factory = SyntheticFactory(seed=21)
    space = factory.space(60, 8)
    words = list(space.words)
    pairs = factory.disjoint_pairs(words, 20)
    return {
        "vectors": str(factory.write_vectors(space, tmp_path / "vectors.txt")),
        "attract": str(factory.write_pairs(pairs[:15], tmp_path / "attract.txt")),
        "repel": str(factory.write_pairs(pairs[15:], tmp_path / "repel.txt")),
        "eval": str(factory.write_eval(factory.scored_pairs(words[40:], 8), tmp_path / "simlex.tsv")),
        "dir": tmp_path,
    }


def _summary(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


@allure.feature("Command line")
@allure.story("Parsing and precedence")
class TestParsing(BaseTest):

    @allure.title("A complete pipeline command parses into a run config")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    @pytest.mark.integration
    def test_valid_pipeline(self, cli_files):
        config = parse_args(["pipeline", "--vectors", cli_files["vectors"], "--attract", cli_files["attract"],
                             "--out", str(cli_files["dir"] / "final.txt"), *SMALL_FLAGS])

        self.assert_equals(config.subcommand, "pipeline")
        self.assert_equals(config.seed, 3)
        self.assert_equals(config.pipeline.ar.epochs, 1)
        self.assert_equals((config.pipeline.ar.batch_att, config.pipeline.ar.batch_rep), (5, 5))
        self.assert_equals((config.pipeline.map.hidden_layers, config.pipeline.map.epochs), (1, 3))

    @allure.title("Missing required paths exit with code 2")
    @pytest.mark.integration
    def test_missing_required(self, cli_files):
        with pytest.raises(SystemExit) as raised:
            parse_args(["evaluate", "--dataset", cli_files["eval"]])

        self.assert_equals(raised.value.code, 2)

    @allure.title("Input files that do not exist exit with code 2")
    @pytest.mark.integration
    def test_missing_file(self, cli_files):
        with pytest.raises(SystemExit) as raised:
            parse_args(["evaluate", "--vectors", str(cli_files["dir"] / "absent.txt"),
                        "--dataset", cli_files["eval"]])

        self.assert_equals(raised.value.code, 2)

    @allure.title("Retrofitting rejects ATTRACT-REPEL-only flags")
    @pytest.mark.integration
    def test_retrofit_conflict(self, cli_files):
        with pytest.raises(SystemExit) as raised:
            parse_args(["specialise", "--vectors", cli_files["vectors"], "--attract", cli_files["attract"],
                        "--out", str(cli_files["dir"] / "spec.txt"), "--method", "retrofit", "--delta-att", "0.5"])

        self.assert_equals(raised.value.code, 2)

    @allure.title("Flags override the key=value file, which overrides the defaults")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.integration
    def test_precedence(self, cli_files):
        run_file = cli_files["dir"] / "run.cfg"
        run_file.write_text("epochs=5\nbatch=7\nmargin=0.4\n", encoding="utf-8")

        config = parse_args(["pipeline", "--config", str(run_file), "--vectors", cli_files["vectors"],
                             "--attract", cli_files["attract"], "--out", str(cli_files["dir"] / "final.txt"),
                             "--epochs", "3"])

        self.assert_equals(config.pipeline.ar.epochs, 3)
        self.assert_equals(config.pipeline.ar.batch_att, 7)
        self.assert_close(config.pipeline.map.delta_mm, 0.4)
        self.assert_close(config.pipeline.ar.delta_att, 0.6, message="untouched keys keep their defaults")


@allure.feature("Command line")
@allure.story("Runs and exit codes")
class TestRuns(BaseTest):

    @allure.title("evaluate writes a report and a JSON summary")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.integration
    def test_evaluate(self, cli_files, capsys):
        out = cli_files["dir"] / "report.json"

        code = run(parse_args(["evaluate", "--vectors", cli_files["vectors"], "--dataset", cli_files["eval"],
                               "--out", str(out)]))

        summary = _summary(capsys)
        self.assert_equals(code, 0)
        self.assert_equals(summary["exit_code"], 0)
        self.assert_equals(summary["outputs"], [str(out)])
        records = json.loads(out.read_text(encoding="utf-8"))
        self.assert_equals((records[0]["covered"], records[0]["total"]), (8, 8))
        self.assert_equals(summary["metrics"]["reports"][0]["rho"], records[0]["rho"])

    @allure.title("A malformed vector file exits 1 and names the offending line")
    @pytest.mark.integration
    def test_malformed_vectors(self, cli_files, capsys, caplog):
        broken = cli_files["dir"] / "broken.txt"
        broken.write_text("2 3\nalpha 1 2 3\nbeta 1 2\n", encoding="utf-8")
        out = cli_files["dir"] / "report.json"

        with caplog.at_level(logging.ERROR):
            code = run(parse_args(["evaluate", "--vectors", str(broken), "--dataset", cli_files["eval"],
                                   "--out", str(out)]))

        self.assert_equals(code, 1)
        self.assert_true(f"{broken}:3" in caplog.text, caplog.text)
        self.assert_equals(_summary(capsys)["outputs"], [])
        self.assert_true(not out.exists())

    @allure.title("A pipeline without usable constraints exits 1 and writes nothing")
    @pytest.mark.integration
    def test_failed_pipeline_leaves_no_output(self, cli_files, capsys):
        stray = SyntheticFactory.write_pairs([("absent_a", "absent_b")], cli_files["dir"] / "stray.txt")
        out = cli_files["dir"] / "final.txt"

        code = run(parse_args(["pipeline", "--vectors", cli_files["vectors"], "--attract", str(stray),
                               "--out", str(out), *SMALL_FLAGS]))

        self.assert_equals(code, 1)
        self.assert_equals(_summary(capsys)["exit_code"], 1)
        self.assert_true(not out.exists())

    @allure.title("A model path that cannot be written exits 1 before the vectors are saved")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.integration
    def test_unwritable_model_leaves_no_vectors(self, cli_files, capsys):
        out = cli_files["dir"] / "final.txt"
        model_dir = cli_files["dir"] / "models"
        model_dir.mkdir()

        code = run(parse_args(["pipeline", "--vectors", cli_files["vectors"], "--attract", cli_files["attract"],
                               "--out", str(out), "--model-out", str(model_dir), *SMALL_FLAGS]))

        self.assert_equals(code, 1)
        self.assert_equals(_summary(capsys)["outputs"], [])
        self.assert_true(not out.exists())
        self.assert_equals(list(model_dir.iterdir()), [])

    @allure.title("pipeline, apply, evaluate and train-map run end to end")
    @allure.severity(allure.severity_level.BLOCKER)
    @pytest.mark.integration
    def test_end_to_end(self, cli_files, capsys):
        work = cli_files["dir"]
        final, model = work / "final.txt", work / "model.npz"

        code = run(parse_args(["pipeline", "--vectors", cli_files["vectors"], "--attract", cli_files["attract"],
                               "--repel", cli_files["repel"], "--holdout-eval", cli_files["eval"],
                               "--out", str(final), "--model-out", str(model), *SMALL_FLAGS]))
        summary = _summary(capsys)
        self.assert_equals(code, 0)
        self.assert_equals(summary["metrics"]["pipeline"]["vocabulary_size"], 60)
        self.assert_equals(len(load_embeddings(final)), 60)
        self.assert_equals(load_model(model).hidden_layers, 1)
        self.attach_json_to_report(summary["metrics"], "Pipeline metrics")

        applied = work / "applied.txt"
        code = run(parse_args(["apply", "--vectors", cli_files["vectors"], "--model", str(model),
                               "--out", str(applied)]))
        self.assert_equals(code, 0)
        self.assert_equals(_summary(capsys)["metrics"]["vocabulary_size"], 60)

        code = run(parse_args(["evaluate", "--vectors", str(final), "--dataset", cli_files["eval"]]))
        self.assert_equals(code, 0)
        self.assert_equals(len(_summary(capsys)["metrics"]["reports"]), 1)

        specialised, linear = work / "specialised.txt", work / "linear.npz"
        self.assert_equals(run(parse_args(["specialise", "--vectors", cli_files["vectors"],
                                           "--attract", cli_files["attract"], "--repel", cli_files["repel"],
                                           "--out", str(specialised), "--epochs", "1", "--batch", "5"])), 0)
        capsys.readouterr()
        code = run(parse_args(["train-map", "--original", cli_files["vectors"], "--specialised", str(specialised),
                               "--attract", cli_files["attract"], "--repel", cli_files["repel"],
                               "--model-out", str(linear), "--closed-form"]))
        summary = _summary(capsys)
        self.assert_equals(code, 0)
        self.assert_equals(summary["metrics"]["training_pairs"], 40)
        self.assert_equals(load_model(linear).hidden_layers, 0)

    @allure.title("sweep writes a TSV table and reports the distributional baseline")
    @pytest.mark.integration
    @pytest.mark.slow
    def test_sweep(self, cli_files, capsys):
        out = cli_files["dir"] / "sweep.tsv"
        flags = ["--epochs", "1", "--batch", "5", "--width", "8", "--map-epochs", "3", "--k", "2",
                 "--batch-size", "8", "--seed", "3"]

        code = run(parse_args(["sweep", "--vectors", cli_files["vectors"], "--attract", cli_files["attract"],
                               "--repel", cli_files["repel"], "--dataset", cli_files["eval"], "--hidden", "0,1",
                               "--runs", "2", "--report", "tsv", "--out", str(out), *flags]))

        summary = _summary(capsys)
        self.assert_equals(code, 0)
        self.assert_equals(list(summary["metrics"]["baseline"]), ["simlex"])
        self.assert_equals([row["hidden"] for row in summary["metrics"]["sweep"]], [0, 1])
        self.assert_equals(out.read_text(encoding="utf-8").splitlines()[0], "hidden\tdataset\tmean\tmin\tmax\truns")
