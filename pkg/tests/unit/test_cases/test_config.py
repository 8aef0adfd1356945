"""
Configuration, Seeding and Utility Test Cases
"""
import logging

import allure
import pytest

from core.constants.application_constants import ApplicationConstants
from core.models.pojo.config_pojo import ARConfig, MapTrainConfig, PipelineConfig
from core.base.base_test import BaseTest
from core.utils.config_reader import ConfigReader
from core.utils.file_utility import FileUtility
from core.utils.json_utility import JSONUtility
from core.utils.logger_utility import setup_logging
from core.utils.random_utility import derive_seed, make_rng


@allure.feature("Configuration")
@allure.story("YAML defaults and profiles")
class TestConfigReader(BaseTest):

    @allure.title("Defaults match the shipped configuration")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    @pytest.mark.unit
    def test_defaults(self):
        reader = ConfigReader(environment="default")

        self.assert_close(reader.get_float_property("attract_repel.delta_att"), 0.6)
        self.assert_equals(reader.get_int_property("mapping.k_neg"), 25)
        self.assert_equals(reader.get_list_property("evaluation.sweep_hidden"), [0, 1, 3, 5, 7])
        self.assert_equals(reader.get_property("mapping.missing", "fallback"), "fallback")

    @allure.title("Environment profiles are merged over the defaults")
    @pytest.mark.unit
    def test_profile_overlay(self):
        dev = ConfigReader(environment="dev")
        full = ConfigReader(environment="full")

        self.assert_equals(dev.get_int_property("mapping.hidden_layers"), 1)
        self.assert_close(dev.get_float_property("mapping.delta_mm"), 0.6, message="untouched keys survive")
        self.assert_equals(full.get_int_property("evaluation.sweep_runs"), 20)

    @allure.title("Unknown profiles fall back to the defaults")
    @pytest.mark.unit
    def test_unknown_profile(self, caplog):
        with caplog.at_level(logging.WARNING):
            reader = ConfigReader(environment="staging")

        self.assert_equals(reader.get_int_property("mapping.hidden_layers"), 5)
        self.assert_true("Unknown environment 'staging'" in caplog.text)

    @allure.title("key=value run files parse with comments and dashes")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.unit
    def test_key_value_file(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("# run settings\nepochs = 5\n\ndelta-att=0.4\n", encoding="utf-8")

        values = ConfigReader.read_key_value_file(path)

        self.assert_equals(values, {"epochs": "5", "delta_att": "0.4"})

    @allure.title("Lines without '=' are errors with a line number")
    @pytest.mark.unit
    def test_malformed_key_value(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("epochs=5\nnonsense\n", encoding="utf-8")

        with pytest.raises(ValueError, match="run.cfg:2"):
            ConfigReader.read_key_value_file(path)

    @allure.title("Shipped configuration validates cleanly")
    @pytest.mark.unit
    def test_validate_configuration(self):
        self.assert_equals(ApplicationConstants.validate_configuration(), [])
        self.assert_equals(ApplicationConstants.get_ar_defaults()["batch_att"], 50)
        self.assert_equals(ApplicationConstants.get_mapping_defaults()["hidden_width"], 512)


@allure.feature("Configuration")
@allure.story("Stage models")
class TestStageModels(BaseTest):

    @allure.title("Stage configs carry the documented defaults")
    @pytest.mark.unit
    def test_stage_defaults(self):
        ar = ARConfig()
        mapping = MapTrainConfig()

        self.assert_equals((ar.delta_att, ar.delta_rep, ar.lambda_reg), (0.6, 0.0, 1e-9))
        self.assert_equals((mapping.k_neg, mapping.patience, mapping.batch_size), (25, 10, 128))
        self.assert_true(not PipelineConfig().map_all)

    @allure.title("Out-of-range values are rejected")
    @pytest.mark.unit
    def test_validation(self):
        with pytest.raises(ValueError):
            ARConfig(batch_att=0)
        with pytest.raises(ValueError):
            MapTrainConfig(validation_fraction=1.0)
        with pytest.raises(ValueError):
            MapTrainConfig(objective="cosine")

    @allure.title("Enum fields accept their string values")
    @pytest.mark.unit
    def test_string_enums(self):
        cfg = PipelineConfig(post_processor="retrofit", model_kind="linear")

        self.assert_equals(cfg.post_processor.value, "retrofit")
        self.assert_equals(cfg.model_kind.value, "linear")


@allure.feature("Configuration")
@allure.story("Seeds, files and logging")
class TestUtilities(BaseTest):

    @allure.title("Stage seeds are stable and label-specific")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.unit
    def test_derive_seed(self):
        self.assert_equals(derive_seed(42, "mapping"), derive_seed(42, "mapping"))
        self.assert_true(derive_seed(42, "mapping") != derive_seed(42, "attract_repel"))
        self.assert_true(derive_seed(42, "mapping") != derive_seed(43, "mapping"))
        self.assert_true(0 <= derive_seed(7, "x") < 2 ** 63)
        self.assert_equals(make_rng(1, "a").integers(0, 1000, 5).tolist(),
                           make_rng(1, "a").integers(0, 1000, 5).tolist())

    @allure.title("Failed atomic writes leave no file behind")
    @pytest.mark.unit
    def test_atomic_write(self, tmp_path):
        target = tmp_path / "out.txt"

        with pytest.raises(RuntimeError):
            with FileUtility.atomic_open(target) as handle:
                handle.write("partial")
                raise RuntimeError("interrupted")

        self.assert_true(not target.exists())
        self.assert_equals(list(tmp_path.iterdir()), [])
        FileUtility().write_file(target, "done")
        self.assert_equals(target.read_text(encoding="utf-8"), "done")

    @allure.title("Schema validation reports the failing field")
    @pytest.mark.unit
    def test_schema_validation(self):
        utility = JSONUtility()
        record = [{"dataset": "x", "rho": 0.3, "covered": 2, "total": 2, "config": {}}]

        self.assert_equals(utility.validate_schema_file(record, "eval_report_schema.json"), (True, None))
        valid, error = utility.validate_schema_file([{"dataset": "x"}], "eval_report_schema.json")
        self.assert_true(not valid and "rho" in error)

    @allure.title("Logging setup replaces handlers and honours the level")
    @pytest.mark.unit
    def test_setup_logging(self, tmp_path):
        root = logging.getLogger()
        saved = list(root.handlers), root.level
        try:
            configured = setup_logging("warning", log_file=str(tmp_path / "run.log"), file_enabled=True)
            logging.getLogger("postspec.test").warning("written")

            self.assert_equals(configured.level, logging.WARNING)
            self.assert_true((tmp_path / "run.log").exists())
        finally:
            for handler in list(root.handlers):
                handler.close()
                root.removeHandler(handler)
            for handler in saved[0]:
                root.addHandler(handler)
            root.setLevel(saved[1])
