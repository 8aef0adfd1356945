"""
Word Similarity Evaluation
Spearman's rho between gold similarity ratings and cosine similarities of a space
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from scipy import stats

from core.constants.error_messages import ErrorMessages
from core.dataproviders.eval_data_provider import EvalDataProvider
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.models.pojo.eval_pojo import EvalDataset, EvalReport
from core.specialisation.embedding_store import cosine_matrix
from core.utils.json_utility import JSONUtility

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "eval_report_schema.json"
# Ranks count as constant when the values spread less than this, relative to their magnitude
CONSTANT_TOLERANCE = 1e-12


def load_eval(path: Union[str, Path], name: Optional[str] = None) -> EvalDataset:
    """Load a scored word-pair dataset; a non-numeric header line is skipped"""
    return EvalDataProvider().load_data(path, name=name)


def spearman_rho(gold: Sequence[float], pred: Sequence[float]) -> float:
    """
    Spearman's rank correlation (Pearson correlation of average ranks)

    Raises:
        ValueError: On length mismatch, fewer than 2 values, or constant ranks
    """
    gold = np.asarray(gold, dtype=np.float64)
    pred = np.asarray(pred, dtype=np.float64)
    if gold.shape != pred.shape:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=len(gold), right=len(pred)))
    if len(gold) < 2:
        raise ValueError(ErrorMessages.TOO_FEW_VALUES.format(count=len(gold)))
    for which, values in (("gold", gold), ("predicted", pred)):
        if np.ptp(values) <= CONSTANT_TOLERANCE * max(1.0, float(np.max(np.abs(values)))):
            raise ValueError(ErrorMessages.ZERO_RANK_VARIANCE.format(which=which))
    rho = stats.spearmanr(gold, pred).statistic
    return float(np.clip(rho, -1.0, 1.0))


def evaluate_space(space: EmbeddingSpace, ds: EvalDataset,
                   config: Optional[Dict[str, Any]] = None) -> EvalReport:
    """
    Correlate gold scores with cosine similarities; pairs with an out-of-vocabulary
    word are skipped and counted

    Raises:
        ValueError: If fewer than 2 pairs are covered or the predictions are constant
    """
    covered = [(w1, w2, score) for w1, w2, score in ds.pairs if w1 in space and w2 in space]
    gold = [score for _, _, score in covered]
    if len(gold) < 2:
        message = ErrorMessages.TOO_FEW_COVERED.format(name=ds.name, covered=len(gold), total=len(ds))
        logger.error(message)
        raise ValueError(message)
    skipped = len(ds) - len(gold)
    if skipped:
        logger.warning(f"{ds.name}: skipped {skipped} of {len(ds)} pairs with out-of-vocabulary words")

    pred = cosine_matrix(space.rows([w1 for w1, _, _ in covered]), space.rows([w2 for _, w2, _ in covered]))
    rho = spearman_rho(gold, pred)
    logger.info(f"{ds.name}: rho={rho:.4f} on {len(gold)}/{len(ds)} pairs")
    return EvalReport(dataset=ds.name, rho=rho, covered=len(gold), total=len(ds), config=dict(config or {}))


def resolve_threads(threads: int) -> int:
    """0 means every available core"""
    return threads if threads and threads > 0 else (os.cpu_count() or 1)


def evaluate_many(space: EmbeddingSpace, datasets: Sequence[EvalDataset], threads: int = 0,
                  config: Optional[Dict[str, Any]] = None) -> List[EvalReport]:
    """Evaluate several datasets concurrently; reports keep the dataset order"""
    workers = min(resolve_threads(threads), max(len(datasets), 1))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda ds: evaluate_space(space, ds, config), datasets))


# ==================== Reports ====================

def reports_to_frame(reports: Sequence[EvalReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"dataset": r.dataset, "rho": r.rho, "covered": r.covered, "total": r.total, "skipped": r.skipped}
         for r in reports],
        columns=["dataset", "rho", "covered", "total", "skipped"],
    )


def render_reports(reports: Sequence[EvalReport], report_format: str = "json") -> str:
    """
    Render reports as a JSON array ({dataset, rho, covered, total, config} records,
    validated against the report schema) or as TSV

    Raises:
        ValueError: On an unknown format or a record failing the schema
    """
    if report_format == "tsv":
        return reports_to_frame(reports).to_csv(sep="\t", index=False)
    if report_format != "json":
        raise ValueError(f"Unknown report format: {report_format}")
    json_utility = JSONUtility()
    records = [r.to_record() for r in reports]
    valid, error = json_utility.validate_schema_file(records, REPORT_SCHEMA)
    if not valid:
        raise ValueError(error)
    return json_utility.to_json_string(records)
