"""
Command-line entry point

    postspec <specialise|train-map|apply|evaluate|pipeline|sweep> [flags]

Settings resolve as config.yaml defaults < --config key=value file < flags. Outputs are
written atomically; a JSON run summary goes to stdout (and to --summary-out).
"""
import argparse
import logging
import platform
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
import scipy
from pydantic import BaseModel, Field, model_validator

from core.constants.application_constants import ApplicationConstants
from core.constants.error_messages import ErrorMessages
from core.evaluation.depth_sweep import depth_sweep, distributional_baseline
from core.evaluation.word_similarity import evaluate_many, load_eval, render_reports
from core.mapping.model_io import load_model, save_model
from core.mapping.trainer import apply_mapping, closed_form_linear_mse, train_mapping
from core.models.pojo.config_pojo import ARConfig, MapTrainConfig, PipelineConfig, RetrofitConfig
from core.models.pojo.constraint_pojo import ConstraintSet
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.pipeline.post_specialise import (assemble_final_space, build_post_processor, run_pipeline,
                                          with_run_seed)
from core.specialisation.constraints import filter_to_vocab, load_constraints
from core.specialisation.embedding_store import load_embeddings, save_embeddings, unit_normalize
from core.utils.config_reader import ConfigReader
from core.utils.file_utility import FileUtility
from core.utils.json_utility import JSONUtility
from core.utils.logger_utility import setup_logging

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("specialise", "train-map", "apply", "evaluate", "pipeline", "sweep")
SUMMARY_SCHEMA = "run_summary_schema.json"

# Flag (and key=value file key) -> config field names
AR_KEYS = {
    "delta_att": ("delta_att",),
    "delta_rep": ("delta_rep",),
    "lambda_reg": ("lambda_reg",),
    "epochs": ("epochs",),
    "batch": ("batch_att", "batch_rep"),
    "batch_att": ("batch_att",),
    "batch_rep": ("batch_rep",),
    "lr": ("adagrad_lr",),
}
AR_ONLY_FLAGS = ("delta_att", "delta_rep", "lambda_reg", "lr", "batch")

MAP_KEYS = {
    "objective": ("objective",),
    "hidden": ("hidden_layers",),
    "width": ("hidden_width",),
    "k": ("k_neg",),
    "margin": ("delta_mm",),
    "map_epochs": ("epochs",),
    "patience": ("patience",),
    "validation_fraction": ("validation_fraction",),
    "batch_size": ("batch_size",),
    "map_lr": ("learning_rate",),
    "beta1": ("beta1",),
    "beta2": ("beta2",),
    "adam_epsilon": ("adam_epsilon",),
    "activation": ("activation",),
    "init": ("init",),
    "sum_reduction": ("sum_reduction",),
}
# train-map has no AR stage, so the short names belong to the mapping
TRAIN_MAP_KEYS = {**{k: v for k, v in MAP_KEYS.items() if k not in ("map_epochs", "map_lr")},
                  "epochs": ("epochs",), "lr": ("learning_rate",)}


class RunConfig(BaseModel):
    """Validated, fully resolved settings of one CLI run"""

    subcommand: Literal["specialise", "train-map", "apply", "evaluate", "pipeline", "sweep"]
    seed: int
    threads: int = Field(0, ge=0)
    log_level: str = "INFO"
    config_file: Optional[str] = None
    summary_out: Optional[str] = None

    vectors: Optional[str] = None
    attract: Optional[str] = None
    repel: Optional[str] = None
    original: Optional[str] = None
    specialised: Optional[str] = None
    model: Optional[str] = None
    datasets: List[str] = Field(default_factory=list)
    holdout_eval: List[str] = Field(default_factory=list)
    out: Optional[str] = None
    model_out: Optional[str] = None

    strip_prefix: Optional[str] = None
    limit: Optional[int] = Field(None, ge=1)
    closed_form: bool = False
    report_format: Literal["json", "tsv"] = "json"
    hidden_values: List[int] = Field(default_factory=list)
    runs: int = Field(5, ge=1)
    setting: Literal["holdout", "all"] = "holdout"

    pipeline: PipelineConfig = Field(default_factory=PipelineConfig)

    @model_validator(mode="after")
    def _inputs_exist(self):
        for path in self.input_paths():
            if not Path(path).is_file():
                raise ValueError(ErrorMessages.FILE_NOT_FOUND.format(file_path=path))
        return self

    def input_paths(self) -> List[str]:
        single = [self.vectors, self.attract, self.repel, self.original, self.specialised, self.model]
        return [p for p in single if p] + list(self.datasets) + list(self.holdout_eval)


# ==================== Argument Parsing ====================

def _int_list(value: str) -> List[int]:
    try:
        return [int(v) for v in str(value).split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{value}'")


def _add_ar_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("specialisation")
    group.add_argument("--method", choices=["ar", "retrofit"], default=None)
    group.add_argument("--delta-att", type=float, default=None)
    group.add_argument("--delta-rep", type=float, default=None)
    group.add_argument("--lambda-reg", type=float, default=None)
    group.add_argument("--epochs", type=int, default=None, help="ATTRACT-REPEL epochs")
    group.add_argument("--batch", type=int, default=None, help="attract and repel mini-batch size")
    group.add_argument("--lr", type=float, default=None, help="Adagrad step size")
    group.add_argument("--iterations", type=int, default=None, help="retrofitting iterations")


def _add_map_flags(parser: argparse.ArgumentParser, standalone: bool = False, sweep: bool = False):
    group = parser.add_argument_group("mapping")
    group.add_argument("--kind", choices=["linear", "dffn"], default=None)
    group.add_argument("--objective", choices=["mse", "mm", "hinge"], default=None)
    if sweep:
        group.add_argument("--hidden", type=_int_list, default=None, help="H values, e.g. 0,1,3,5,7")
    else:
        group.add_argument("--hidden", type=int, default=None, help="hidden layers H")
    group.add_argument("--width", type=int, default=None)
    group.add_argument("--k", type=int, default=None, help="negatives per example (mm)")
    group.add_argument("--margin", type=float, default=None, help="delta_mm")
    group.add_argument("--epochs" if standalone else "--map-epochs", type=int, default=None,
                       dest="epochs" if standalone else "map_epochs")
    group.add_argument("--lr" if standalone else "--map-lr", type=float, default=None,
                       dest="lr" if standalone else "map_lr", help="Adam step size")
    group.add_argument("--patience", type=int, default=None)
    group.add_argument("--validation-fraction", type=float, default=None)
    group.add_argument("--batch-size", type=int, default=None)
    group.add_argument("--beta1", type=float, default=None)
    group.add_argument("--beta2", type=float, default=None)
    group.add_argument("--adam-epsilon", type=float, default=None)
    group.add_argument("--activation", choices=["swish", "relu"], default=None)
    group.add_argument("--init", choices=["he", "xavier"], default=None)
    group.add_argument("--sum-reduction", action="store_true", default=None)


def _add_constraint_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--attract", default=None)
    parser.add_argument("--repel", default=None)
    parser.add_argument("--strip-prefix", default=None)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=None, help="0 = all cores")
    common.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        type=str.upper)
    common.add_argument("--config", default=None, help="key=value run configuration file")
    common.add_argument("--summary-out", default=None, help="also write the JSON run summary here")
    common.add_argument("--limit", type=int, default=None, help="read only the first N vectors")

    parser = argparse.ArgumentParser(prog="postspec", description="Post-specialisation of word vector spaces")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    specialise = commands.add_parser("specialise", parents=[common], help="specialise seen words")
    specialise.add_argument("--vectors", default=None)
    specialise.add_argument("--out", default=None)
    _add_constraint_flags(specialise)
    _add_ar_flags(specialise)

    train = commands.add_parser("train-map", parents=[common], help="learn the specialisation function")
    train.add_argument("--original", default=None)
    train.add_argument("--specialised", default=None)
    train.add_argument("--model-out", default=None)
    train.add_argument("--closed-form", action="store_true", default=None, help="least-squares linear map")
    _add_constraint_flags(train)
    _add_map_flags(train, standalone=True)

    apply = commands.add_parser("apply", parents=[common], help="map a space through a trained model")
    apply.add_argument("--vectors", default=None)
    apply.add_argument("--model", default=None)
    apply.add_argument("--out", default=None)
    apply.add_argument("--specialised", default=None, help="keep these rows for seen words")
    apply.add_argument("--map-all", action="store_true", default=None)
    apply.add_argument("--no-normalize", action="store_false", dest="normalize_input", default=None)
    _add_constraint_flags(apply)

    evaluate = commands.add_parser("evaluate", parents=[common], help="Spearman's rho on scored pairs")
    evaluate.add_argument("--vectors", default=None)
    evaluate.add_argument("--dataset", action="append", dest="datasets", default=None)
    evaluate.add_argument("--report", choices=["json", "tsv"], default=None, dest="report_format")
    evaluate.add_argument("--out", default=None)

    pipeline = commands.add_parser("pipeline", parents=[common], help="specialise, train, map, assemble")
    pipeline.add_argument("--vectors", default=None)
    pipeline.add_argument("--out", default=None)
    pipeline.add_argument("--model-out", default=None)
    pipeline.add_argument("--holdout-eval", action="append", default=None)
    pipeline.add_argument("--map-all", action="store_true", default=None)
    pipeline.add_argument("--no-normalize", action="store_false", dest="normalize_input", default=None)
    _add_constraint_flags(pipeline)
    _add_ar_flags(pipeline)
    _add_map_flags(pipeline)

    sweep = commands.add_parser("sweep", parents=[common], help="rho as a function of depth H")
    sweep.add_argument("--vectors", default=None)
    sweep.add_argument("--dataset", action="append", dest="datasets", default=None)
    sweep.add_argument("--runs", type=int, default=None)
    sweep.add_argument("--setting", choices=["holdout", "all"], default=None)
    sweep.add_argument("--report", choices=["json", "tsv"], default=None, dest="report_format")
    sweep.add_argument("--out", default=None)
    sweep.add_argument("--no-normalize", action="store_false", dest="normalize_input", default=None)
    _add_constraint_flags(sweep)
    _add_ar_flags(sweep)
    _add_map_flags(sweep, sweep=True)

    return parser


def _pick(args: argparse.Namespace, file_values: Dict[str, str], key: str, default: Any = None) -> Any:
    value = getattr(args, key, None)
    if value is not None:
        return value
    return file_values.get(key, default)


def _resolve(model_cls, defaults: Dict[str, Any], keys: Dict[str, Tuple[str, ...]],
             args: argparse.Namespace, file_values: Dict[str, str]):
    """Build a stage config: defaults, then key=value file entries, then flags"""
    values = dict(defaults)
    for source in (file_values, vars(args)):
        for key, fields in keys.items():
            if source.get(key) is not None:
                for field in fields:
                    values[field] = source[key]
    return model_cls(**{k: v for k, v in values.items() if k in model_cls.model_fields})


def _path_list(args: argparse.Namespace, file_values: Dict[str, str], key: str) -> List[str]:
    value = getattr(args, key, None)
    if value:
        return list(value)
    raw = file_values.get(key, "")
    return [p.strip() for p in raw.split(",") if p.strip()]


def _require(parser: argparse.ArgumentParser, subcommand: str, resolved: Dict[str, Any]):
    required = {
        "specialise": ("vectors", "out"),
        "train-map": ("original", "specialised", "model_out"),
        "apply": ("vectors", "model", "out"),
        "evaluate": ("vectors", "datasets"),
        "pipeline": ("vectors", "out"),
        "sweep": ("vectors", "datasets"),
    }[subcommand]
    labels = {"datasets": "--dataset"}
    missing = [labels.get(key, f"--{key.replace('_', '-')}") for key in required if not resolved.get(key)]
    if missing:
        parser.error(f"{subcommand}: missing required {', '.join(missing)}")
    if subcommand in ("specialise", "pipeline", "sweep") and not (resolved.get("attract") or resolved.get("repel")):
        parser.error(f"{subcommand}: at least one of --attract/--repel is required")


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Parse and validate a command line

    Usage problems (unknown flag, missing required path, conflicting flags, invalid
    values) end the process through argparse with exit code 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    file_values: Dict[str, str] = {}
    if args.config:
        try:
            file_values = ConfigReader.read_key_value_file(args.config)
        except (OSError, ValueError) as e:
            parser.error(str(e))

    subcommand = args.subcommand
    method = _pick(args, file_values, "method", ApplicationConstants.PIPELINE_POST_PROCESSOR)
    if method == "retrofit":
        clashing = [f"--{flag.replace('_', '-')}" for flag in AR_ONLY_FLAGS if getattr(args, flag, None) is not None]
        if clashing:
            parser.error(f"--method retrofit conflicts with ATTRACT-REPEL flags: {', '.join(clashing)}")

    resolved: Dict[str, Any] = {
        key: _pick(args, file_values, key)
        for key in ("vectors", "attract", "repel", "original", "specialised", "model", "out", "model_out",
                    "strip_prefix", "summary_out")
    }
    resolved["datasets"] = _path_list(args, file_values, "datasets")
    resolved["holdout_eval"] = _path_list(args, file_values, "holdout_eval")
    _require(parser, subcommand, resolved)

    seed = _pick(args, file_values, "seed", ApplicationConstants.SEED)
    ar_keys = AR_KEYS if subcommand in ("specialise", "pipeline", "sweep") else {}
    map_keys = TRAIN_MAP_KEYS if subcommand == "train-map" else MAP_KEYS
    if subcommand == "sweep":
        map_keys = {k: v for k, v in map_keys.items() if k != "hidden"}
    try:
        ar = _resolve(ARConfig, ApplicationConstants.get_ar_defaults(), ar_keys, args, file_values)
        mapping = _resolve(MapTrainConfig, ApplicationConstants.get_mapping_defaults(), map_keys, args, file_values)
        retrofit = RetrofitConfig(iterations=_pick(args, file_values, "iterations",
                                                   ApplicationConstants.RETROFIT_ITERATIONS))
        pipeline = PipelineConfig(
            ar=ar, retrofit=retrofit, map=mapping,
            model_kind=_pick(args, file_values, "kind", ApplicationConstants.MAP_KIND),
            post_processor=method,
            map_all=_pick(args, file_values, "map_all", ApplicationConstants.PIPELINE_MAP_ALL),
            normalize_input=_pick(args, file_values, "normalize_input", ApplicationConstants.PIPELINE_NORMALIZE_INPUT),
        )
        hidden = _pick(args, file_values, "hidden", None) if subcommand == "sweep" else None
        config = RunConfig(
            subcommand=subcommand,
            seed=seed,
            threads=_pick(args, file_values, "threads", ApplicationConstants.THREADS),
            log_level=str(_pick(args, file_values, "log_level", ApplicationConstants.LOG_LEVEL)).upper(),
            config_file=args.config,
            limit=_pick(args, file_values, "limit"),
            closed_form=_pick(args, file_values, "closed_form", False),
            report_format=_pick(args, file_values, "report_format", ApplicationConstants.EVAL_REPORT_FORMAT),
            hidden_values=_int_list(hidden) if isinstance(hidden, str) else (hidden or ApplicationConstants.SWEEP_HIDDEN),
            runs=_pick(args, file_values, "runs", ApplicationConstants.SWEEP_RUNS),
            setting=_pick(args, file_values, "setting", ApplicationConstants.SWEEP_SETTING),
            pipeline=with_run_seed(pipeline, int(seed)),
            **resolved,
        )
    except (ValueError, argparse.ArgumentTypeError) as e:
        parser.error(str(e))
    return config


# ==================== Stages ====================

class StageContext:
    """Collects timings, metrics and written outputs for the run summary"""

    def __init__(self):
        self.timings: Dict[str, float] = {}
        self.metrics: Dict[str, Any] = {}
        self.outputs: List[str] = []

    def timed(self, name: str, func: Callable, *args, **kwargs):
        started = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - started

    def wrote(self, path) -> None:
        self.outputs.append(str(path))


def _load_constraints(config: RunConfig) -> ConstraintSet:
    return load_constraints(config.attract, config.repel, config.strip_prefix)


def _seen_words(original: EmbeddingSpace, specialised: EmbeddingSpace,
                constraints: Optional[ConstraintSet]) -> List[str]:
    """
    Words usable as (original, specialised) pairs: constraint words when constraints
    are given, otherwise every shared word whose vector changed
    """
    shared = [w for w in original.words if w in specialised]
    if constraints is not None:
        words = constraints.words()
        return [w for w in shared if w in words]
    return [w for w in shared if not np.array_equal(original.vector(w), specialised.vector(w))]


def _has_constraints(config: RunConfig) -> bool:
    return bool(config.attract or config.repel)


def _run_specialise(config: RunConfig, ctx: StageContext):
    space = ctx.timed("load", load_embeddings, config.vectors, config.limit)
    constraints = ctx.timed("load", _load_constraints, config)
    processor = build_post_processor(config.pipeline)
    usable = filter_to_vocab(processor.usable_constraints(constraints), space)
    specialised = ctx.timed("specialise", processor.specialise, space, usable)
    ctx.wrote(ctx.timed("save", save_embeddings, specialised, config.out))
    ctx.metrics["seen_words"] = len(usable.words())
    ctx.metrics["vocabulary_size"] = len(space)
    report = getattr(processor, "report", None)
    if report is not None:
        ctx.metrics["specialisation"] = report.model_dump()


def _run_train_map(config: RunConfig, ctx: StageContext):
    original = ctx.timed("load", load_embeddings, config.original, config.limit)
    specialised = ctx.timed("load", load_embeddings, config.specialised)
    constraints = _load_constraints(config) if _has_constraints(config) else None
    words = _seen_words(original, specialised, constraints)
    if config.pipeline.normalize_input:
        original = unit_normalize(original)
    inputs, targets = original.rows(words), specialised.rows(words)
    ctx.metrics["training_pairs"] = len(words)

    if config.closed_form:
        model = ctx.timed("train", closed_form_linear_mse, inputs, targets)
        residual = np.linalg.norm(model.forward(inputs) - targets) / max(np.linalg.norm(targets), 1e-12)
        ctx.metrics["relative_residual"] = float(residual)
    else:
        model, report = ctx.timed("train", train_mapping, inputs, targets,
                                  config.pipeline.model_kind, config.pipeline.map)
        ctx.metrics["training"] = report.model_dump()
    ctx.wrote(ctx.timed("save", save_model, model, config.model_out))


def _run_apply(config: RunConfig, ctx: StageContext):
    space = ctx.timed("load", load_embeddings, config.vectors, config.limit)
    model = ctx.timed("load", load_model, config.model)
    inputs = unit_normalize(space) if config.pipeline.normalize_input else space
    if config.specialised:
        specialised = ctx.timed("load", load_embeddings, config.specialised)
        constraints = _load_constraints(config) if _has_constraints(config) else None
        seen = set(_seen_words(space, specialised, constraints))
        final = ctx.timed("apply", assemble_final_space, inputs, specialised, model, seen,
                          config.pipeline.map_all)
        ctx.metrics["seen_words"] = len(seen)
    else:
        final = ctx.timed("apply", apply_mapping, model, inputs)
    ctx.metrics["vocabulary_size"] = len(final)
    ctx.wrote(ctx.timed("save", save_embeddings, final, config.out))


def _run_evaluate(config: RunConfig, ctx: StageContext):
    space = ctx.timed("load", load_embeddings, config.vectors, config.limit)
    datasets = [load_eval(path) for path in config.datasets]
    fingerprint = {"vectors": config.vectors, "seed": config.seed, "oov_policy": "skip"}
    reports = ctx.timed("evaluate", evaluate_many, space, datasets, config.threads, fingerprint)
    ctx.metrics["reports"] = [r.to_record() for r in reports]
    if config.out:
        ctx.wrote(FileUtility().write_file(config.out, render_reports(reports, config.report_format)))


def _run_pipeline(config: RunConfig, ctx: StageContext):
    space = ctx.timed("load", load_embeddings, config.vectors, config.limit)
    constraints = ctx.timed("load", _load_constraints, config)
    holdout = [load_eval(path) for path in config.holdout_eval]
    result = ctx.timed("pipeline", run_pipeline, space, constraints, config.pipeline, holdout)
    ctx.timings.update({f"pipeline.{k}": v for k, v in result.report.timings.items()})
    ctx.metrics["pipeline"] = result.report.model_dump()
    if config.model_out:
        ctx.wrote(save_model(result.model, config.model_out))
    ctx.wrote(ctx.timed("save", save_embeddings, result.space, config.out))


def _run_sweep(config: RunConfig, ctx: StageContext):
    space = ctx.timed("load", load_embeddings, config.vectors, config.limit)
    constraints = ctx.timed("load", _load_constraints, config)
    datasets = [load_eval(path) for path in config.datasets]
    baseline = ctx.timed("baseline", distributional_baseline, space, datasets, config.threads)
    table = ctx.timed("sweep", depth_sweep, space, constraints, datasets, config.hidden_values, config.runs,
                      config.pipeline, config.seed, config.setting == "holdout", config.threads)
    ctx.metrics["baseline"] = baseline
    ctx.metrics["sweep"] = table.to_dict(orient="records")
    if config.out:
        if config.report_format == "tsv":
            content = table.to_csv(sep="\t", index=False)
        else:
            content = JSONUtility().to_json_string({"baseline": baseline, "sweep": ctx.metrics["sweep"]})
        ctx.wrote(FileUtility().write_file(config.out, content))


STAGES: Dict[str, Callable[[RunConfig, StageContext], None]] = {
    "specialise": _run_specialise,
    "train-map": _run_train_map,
    "apply": _run_apply,
    "evaluate": _run_evaluate,
    "pipeline": _run_pipeline,
    "sweep": _run_sweep,
}


# ==================== Run ====================

def versions() -> Dict[str, str]:
    return {
        "postspec": str(ApplicationConstants.VERSION),
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
    }


def build_summary(config: RunConfig, ctx: StageContext, exit_code: int) -> Dict[str, Any]:
    return {
        "subcommand": config.subcommand,
        "seed": config.seed,
        "config": config.model_dump(mode="json"),
        "versions": versions(),
        "timings": ctx.timings,
        "metrics": ctx.metrics,
        "outputs": ctx.outputs if exit_code == 0 else [],
        "exit_code": exit_code,
    }


def emit_summary(summary: Dict[str, Any], summary_out: Optional[str] = None) -> str:
    """Print the run summary to stdout and optionally write it atomically"""
    json_utility = JSONUtility()
    valid, error = json_utility.validate_schema_file(summary, SUMMARY_SCHEMA)
    if not valid:
        logger.warning(f"Run summary does not match its schema: {error}")
    text = json_utility.to_json_string(summary, indent=ApplicationConstants.SUMMARY_INDENT)
    if summary_out:
        FileUtility().write_file(summary_out, text + "\n")
    sys.stdout.write(text + "\n")
    sys.stdout.flush()
    return text


def run(config: RunConfig) -> int:
    """
    Execute the configured subcommand

    Returns:
        0 when every requested output was written, 1 on any stage error
    """
    ctx = StageContext()
    logger.info(f"postspec {config.subcommand} (seed {config.seed})")
    try:
        STAGES[config.subcommand](config, ctx)
        exit_code = 0
    except (OSError, KeyError, ValueError, FloatingPointError) as e:
        logger.error(f"{config.subcommand} failed: {e}")
        exit_code = 1
    emit_summary(build_summary(config, ctx, exit_code), config.summary_out)
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parse_args(argv)
    setup_logging(config.log_level)
    for problem in ApplicationConstants.validate_configuration():
        logger.debug(f"Default configuration: {problem}")
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
