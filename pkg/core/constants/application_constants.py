"""
Application Constants
Centralized defaults for every stage of the post-specialisation toolkit

Description: Contains all application-level constants loaded from configuration files.
             Environment variables (optionally from a .env file) override the YAML values.
"""

import os
import logging
from pathlib import Path
from typing import List

from dotenv import load_dotenv

from core.utils.config_reader import ConfigReader

load_dotenv()

logger = logging.getLogger(__name__)


class ApplicationConstants:
    """
    Application level constants
    All constants are loaded from config files and can be overridden by environment variables
    """

    config = ConfigReader()

    # ========================================================================
    # ENVIRONMENT CONFIGURATION
    # ========================================================================

    ENVIRONMENT = os.getenv('POSTSPEC_ENV') or config.get_property("app.environment", "default")
    APPLICATION_NAME = config.get_property("app.application_name", "postspec")
    VERSION = config.get_property("app.version", "1.0.0")

    # ========================================================================
    # RUN CONFIGURATION
    # ========================================================================

    SEED = int(os.getenv('POSTSPEC_SEED') or config.get_int_property("run.seed", 42))
    THREADS = config.get_int_property("run.threads", 0)
    SUMMARY_INDENT = config.get_int_property("run.summary_indent", 2)

    # ========================================================================
    # ATTRACT-REPEL
    # ========================================================================

    AR_DELTA_ATT = config.get_float_property("attract_repel.delta_att", 0.6)
    AR_DELTA_REP = config.get_float_property("attract_repel.delta_rep", 0.0)
    AR_LAMBDA_REG = config.get_float_property("attract_repel.lambda_reg", 1e-9)
    AR_BATCH_ATT = config.get_int_property("attract_repel.batch_att", 50)
    AR_BATCH_REP = config.get_int_property("attract_repel.batch_rep", 50)
    AR_EPOCHS = config.get_int_property("attract_repel.epochs", 5)
    AR_ADAGRAD_LR = config.get_float_property("attract_repel.adagrad_lr", 0.05)
    AR_ADAGRAD_INITIAL_ACCUMULATOR = config.get_float_property(
        "attract_repel.adagrad_initial_accumulator", 0.1)

    RETROFIT_ITERATIONS = config.get_int_property("retrofit.iterations", 10)

    # ========================================================================
    # MAPPING
    # ========================================================================

    MAP_KIND = config.get_property("mapping.kind", "dffn")
    MAP_OBJECTIVE = config.get_property("mapping.objective", "mm")
    MAP_HIDDEN_LAYERS = config.get_int_property("mapping.hidden_layers", 5)
    MAP_HIDDEN_WIDTH = config.get_int_property("mapping.hidden_width", 512)
    MAP_ACTIVATION = config.get_property("mapping.activation", "swish")
    MAP_INIT = config.get_property("mapping.init", "he")
    MAP_DELTA_MM = config.get_float_property("mapping.delta_mm", 0.6)
    MAP_K_NEG = config.get_int_property("mapping.k_neg", 25)
    MAP_EPOCHS = config.get_int_property("mapping.epochs", 100)
    MAP_PATIENCE = config.get_int_property("mapping.patience", 10)
    MAP_VALIDATION_FRACTION = config.get_float_property("mapping.validation_fraction", 0.1)
    MAP_BATCH_SIZE = config.get_int_property("mapping.batch_size", 128)
    MAP_LEARNING_RATE = config.get_float_property("mapping.learning_rate", 1e-3)
    MAP_BETA1 = config.get_float_property("mapping.beta1", 0.9)
    MAP_BETA2 = config.get_float_property("mapping.beta2", 0.999)
    MAP_ADAM_EPSILON = config.get_float_property("mapping.adam_epsilon", 1e-8)
    MAP_SUM_REDUCTION = config.get_bool_property("mapping.sum_reduction", False)

    # ========================================================================
    # PIPELINE
    # ========================================================================

    PIPELINE_POST_PROCESSOR = config.get_property("pipeline.post_processor", "ar")
    PIPELINE_MAP_ALL = config.get_bool_property("pipeline.map_all", False)
    PIPELINE_NORMALIZE_INPUT = config.get_bool_property("pipeline.normalize_input", True)

    # ========================================================================
    # EVALUATION
    # ========================================================================

    EVAL_REPORT_FORMAT = config.get_property("evaluation.report_format", "json")
    SWEEP_HIDDEN: List[int] = [int(h) for h in config.get_list_property("evaluation.sweep_hidden", [0, 1, 3, 5, 7])]
    SWEEP_RUNS = config.get_int_property("evaluation.sweep_runs", 5)
    SWEEP_SETTING = config.get_property("evaluation.setting", "holdout")

    # ========================================================================
    # LOGGING CONFIGURATION
    # ========================================================================

    LOG_LEVEL = (os.getenv('POSTSPEC_LOG_LEVEL') or config.get_property("logging.level", "INFO")).upper()
    LOG_FILE_PATH = config.get_property("logging.file_path", "logs/postspec.log")
    CONSOLE_LOGGING_ENABLED = config.get_bool_property("logging.console_enabled", True)
    FILE_LOGGING_ENABLED = config.get_bool_property("logging.file_enabled", False)
    LOG_FORMAT = config.get_property(
        "logging.format",
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    LOG_DATE_FORMAT = config.get_property("logging.date_format", "%Y-%m-%d %H:%M:%S")
    LOG_MAX_FILE_SIZE = config.get_property("logging.max_file_size", "10MB")
    LOG_BACKUP_COUNT = config.get_int_property("logging.backup_count", 5)

    # ========================================================================
    # PATHS
    # ========================================================================

    PROJECT_ROOT = Path(__file__).parent.parent.parent
    SCHEMAS_PATH = PROJECT_ROOT / "core" / "models" / "schemas"

    # ========================================================================
    # HELPER METHODS
    # ========================================================================

    @classmethod
    def get_ar_defaults(cls) -> dict:
        """Get ATTRACT-REPEL defaults as dictionary (ARConfig field names)"""
        return {
            "delta_att": cls.AR_DELTA_ATT,
            "delta_rep": cls.AR_DELTA_REP,
            "lambda_reg": cls.AR_LAMBDA_REG,
            "batch_att": cls.AR_BATCH_ATT,
            "batch_rep": cls.AR_BATCH_REP,
            "epochs": cls.AR_EPOCHS,
            "adagrad_lr": cls.AR_ADAGRAD_LR,
            "adagrad_initial_accumulator": cls.AR_ADAGRAD_INITIAL_ACCUMULATOR,
            "seed": cls.SEED,
        }

    @classmethod
    def get_mapping_defaults(cls) -> dict:
        """Get mapping training defaults as dictionary (MapTrainConfig field names)"""
        return {
            "objective": cls.MAP_OBJECTIVE,
            "hidden_layers": cls.MAP_HIDDEN_LAYERS,
            "hidden_width": cls.MAP_HIDDEN_WIDTH,
            "activation": cls.MAP_ACTIVATION,
            "init": cls.MAP_INIT,
            "delta_mm": cls.MAP_DELTA_MM,
            "k_neg": cls.MAP_K_NEG,
            "epochs": cls.MAP_EPOCHS,
            "patience": cls.MAP_PATIENCE,
            "validation_fraction": cls.MAP_VALIDATION_FRACTION,
            "batch_size": cls.MAP_BATCH_SIZE,
            "learning_rate": cls.MAP_LEARNING_RATE,
            "beta1": cls.MAP_BETA1,
            "beta2": cls.MAP_BETA2,
            "adam_epsilon": cls.MAP_ADAM_EPSILON,
            "sum_reduction": cls.MAP_SUM_REDUCTION,
            "seed": cls.SEED,
        }

    @classmethod
    def get_log_max_bytes(cls) -> int:
        """Convert the configured max log size ('10MB', '512KB', '1000') into bytes"""
        size = str(cls.LOG_MAX_FILE_SIZE).strip().upper()
        for suffix, factor in (("GB", 1024 ** 3), ("MB", 1024 ** 2), ("KB", 1024)):
            if size.endswith(suffix):
                return int(float(size[:-len(suffix)]) * factor)
        return int(size)

    @classmethod
    def validate_configuration(cls) -> List[str]:
        """Validate configuration values, returning a list of problems (empty when valid)"""
        errors = []

        if cls.LOG_LEVEL not in ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']:
            errors.append(f"Invalid LOG_LEVEL value: {cls.LOG_LEVEL}")

        if cls.MAP_KIND not in ['linear', 'dffn']:
            errors.append(f"Invalid mapping.kind value: {cls.MAP_KIND}")

        if cls.MAP_OBJECTIVE not in ['mse', 'mm', 'hinge']:
            errors.append(f"Invalid mapping.objective value: {cls.MAP_OBJECTIVE}")

        if cls.PIPELINE_POST_PROCESSOR not in ['ar', 'retrofit']:
            errors.append(f"Invalid pipeline.post_processor value: {cls.PIPELINE_POST_PROCESSOR}")

        if not 0.0 < cls.MAP_VALIDATION_FRACTION < 1.0:
            errors.append(f"mapping.validation_fraction must lie in (0, 1): {cls.MAP_VALIDATION_FRACTION}")

        for error in errors:
            logger.warning(f"Configuration problem: {error}")
        return errors
