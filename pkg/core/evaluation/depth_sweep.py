"""
Depth Sweep
Spearman's rho of the post-specialised space as a function of the number of hidden
layers H, averaged over independently seeded runs. H = 0 is the linear map.
"""
import logging
from typing import Dict, List, Optional, Sequence

import pandas as pd

from core.enums.model_kind import ModelKind
from core.models.pojo.config_pojo import PipelineConfig
from core.models.pojo.constraint_pojo import ConstraintSet
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.models.pojo.eval_pojo import EvalDataset
from core.evaluation.word_similarity import evaluate_many
from core.pipeline.post_specialise import apply_holdout, run_pipeline, with_run_seed
from core.utils.random_utility import derive_seed

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["hidden", "dataset", "mean", "min", "max", "runs"]


def config_for_depth(cfg: PipelineConfig, hidden: int) -> PipelineConfig:
    """H = 0 selects the linear model; any other H a network of that depth"""
    if hidden == 0:
        return cfg.model_copy(update={"model_kind": ModelKind.LINEAR,
                                      "map": cfg.map.model_copy(update={"hidden_layers": 0})})
    return cfg.model_copy(update={"model_kind": ModelKind.DFFN,
                                  "map": cfg.map.model_copy(update={"hidden_layers": hidden})})


def run_seeds(seed: int, runs: int) -> List[int]:
    return [derive_seed(seed, f"run-{r}") for r in range(runs)]


def distributional_baseline(space: EmbeddingSpace, datasets: Sequence[EvalDataset],
                            threads: int = 0) -> Dict[str, float]:
    """rho of the unspecialised space per dataset"""
    return {r.dataset: r.rho for r in evaluate_many(space, datasets, threads)}


def depth_sweep(space: EmbeddingSpace, cs: ConstraintSet, datasets: Sequence[EvalDataset],
                hidden_values: Sequence[int], runs: int = 5, cfg: Optional[PipelineConfig] = None,
                seed: int = 42, holdout: bool = True, threads: int = 0) -> pd.DataFrame:
    """
    Run the pipeline for every H with `runs` seeds and summarise rho per dataset

    The post-processor output depends only on the run seed, so it is computed once per
    run and shared across H values.

    Returns:
        DataFrame with one row per (hidden, dataset): mean, min and max rho over runs
    """
    cfg = cfg or PipelineConfig()
    if holdout:
        cs, _ = apply_holdout(cs, datasets)
    seeds = run_seeds(seed, runs)
    cache: Dict[int, EmbeddingSpace] = {}
    scores: Dict[tuple, List[float]] = {}

    for hidden in hidden_values:
        depth_cfg = config_for_depth(cfg, int(hidden))
        for run, run_seed in enumerate(seeds):
            result = run_pipeline(space, cs, with_run_seed(depth_cfg, run_seed), specialised=cache.get(run))
            cache.setdefault(run, result.specialised)
            reports = evaluate_many(result.space, datasets, threads,
                                    config={"hidden": int(hidden), "run": run, "seed": run_seed})
            for report in reports:
                scores.setdefault((int(hidden), report.dataset), []).append(report.rho)
            logger.info(f"Sweep H={hidden} run {run + 1}/{runs}: "
                        + ", ".join(f"{r.dataset}={r.rho:.4f}" for r in reports))

    rows = [
        {"hidden": hidden, "dataset": dataset, "mean": sum(values) / len(values),
         "min": min(values), "max": max(values), "runs": len(values)}
        for (hidden, dataset), values in scores.items()
    ]
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
