"""
Post-specialisation pipeline
Specialise the seen words, learn f from (original, specialised) seen vectors, map the
unseen words through f, and assemble the final space over the full vocabulary.
"""
import logging
import time
from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence, Tuple

from core.base.base_post_processor import BasePostProcessor
from core.constants.error_messages import ErrorMessages
from core.enums.post_processor import PostProcessorType
from core.mapping.mapping_net import MappingModel
from core.mapping.trainer import apply_mapping, train_mapping
from core.models.pojo.config_pojo import PipelineConfig
from core.models.pojo.constraint_pojo import ConstraintSet, VocabularyPartition
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.models.pojo.eval_pojo import EvalDataset
from core.models.pojo.report_pojo import PipelineReport
from core.specialisation.attract_repel import AttractRepelSpecialiser
from core.specialisation.constraints import eval_vocabulary, filter_to_vocab, holdout_filter, partition_vocab
from core.specialisation.embedding_store import unit_normalize
from core.specialisation.retrofitting import RetrofitSpecialiser
from core.utils.random_utility import derive_seed

logger = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    """Final space X_f plus everything needed to inspect or reuse the run"""
    space: EmbeddingSpace
    model: MappingModel
    report: PipelineReport
    specialised: EmbeddingSpace
    partition: VocabularyPartition


def build_post_processor(cfg: PipelineConfig) -> BasePostProcessor:
    """Post-processor selected by cfg.post_processor"""
    if PostProcessorType(cfg.post_processor) == PostProcessorType.RETROFIT:
        return RetrofitSpecialiser(cfg.retrofit)
    return AttractRepelSpecialiser(cfg.ar)


def with_run_seed(cfg: PipelineConfig, seed: int) -> PipelineConfig:
    """Copy of cfg whose stage seeds are derived from one run seed"""
    return cfg.model_copy(update={
        "ar": cfg.ar.model_copy(update={"seed": derive_seed(seed, "attract_repel")}),
        "map": cfg.map.model_copy(update={"seed": derive_seed(seed, "mapping")}),
    })


def apply_holdout(cs: ConstraintSet, datasets: Sequence[EvalDataset]) -> Tuple[ConstraintSet, int]:
    """Drop every constraint touching a word of any evaluation dataset"""
    return holdout_filter(cs, eval_vocabulary(datasets))


def assemble_final_space(original: EmbeddingSpace, specialised: EmbeddingSpace, model: MappingModel,
                         seen: AbstractSet[str], map_all: bool = False) -> EmbeddingSpace:
    """
    X_f over the vocabulary of original, in its order

    Seen words keep their rows from specialised and unseen words get f(original row).
    With map_all every word is mapped through f instead.
    """
    if map_all:
        return apply_mapping(model, original)
    seen_words = [w for w in original.words if w in seen]
    unseen_words = [w for w in original.words if w not in seen]
    final = original.with_rows(seen_words, specialised.rows(seen_words))
    if unseen_words:
        mapped = apply_mapping(model, original.subset(unseen_words))
        final = final.with_rows(unseen_words, mapped.vectors)
    return final


def run_pipeline(space: EmbeddingSpace, cs: ConstraintSet, cfg: Optional[PipelineConfig] = None,
                 holdout: Optional[Sequence[EvalDataset]] = None,
                 specialised: Optional[EmbeddingSpace] = None) -> PipelineResult:
    """
    Run the full post-specialisation pipeline

    Args:
        space: Distributional space X_d
        cs: Attract/repel constraints
        cfg: Pipeline configuration
        holdout: Evaluation datasets whose words must stay unseen; filtering happens first
        specialised: Post-processor output from an earlier run with the same inputs, reused as-is

    Returns:
        PipelineResult

    Raises:
        ValueError: On an empty space or when no constraint survives filtering
    """
    cfg = cfg or PipelineConfig()
    if len(space) == 0:
        raise ValueError(ErrorMessages.EMPTY_SPACE)
    timings = {}

    removed = 0
    if holdout:
        cs, removed = apply_holdout(cs, holdout)

    started = time.perf_counter()
    if cfg.normalize_input:
        space = unit_normalize(space)
    timings["normalise"] = time.perf_counter() - started

    processor = build_post_processor(cfg)
    usable = filter_to_vocab(processor.usable_constraints(cs), space)
    if usable.is_empty():
        logger.error(ErrorMessages.EMPTY_CONSTRAINTS)
        raise ValueError(ErrorMessages.EMPTY_CONSTRAINTS)
    partition = partition_vocab(usable, space)

    started = time.perf_counter()
    if specialised is None:
        specialised = processor.specialise(space, usable)
    else:
        logger.info("Reusing cached post-processor output")
    timings["specialise"] = time.perf_counter() - started

    seen = sorted(partition.seen)
    started = time.perf_counter()
    model, training = train_mapping(space.rows(seen), specialised.rows(seen), cfg.model_kind, cfg.map)
    timings["train"] = time.perf_counter() - started

    started = time.perf_counter()
    final = assemble_final_space(space, specialised, model, partition.seen, cfg.map_all)
    timings["assemble"] = time.perf_counter() - started

    report = PipelineReport(
        vocabulary_size=len(space),
        seen_words=len(partition.seen),
        unseen_words=len(partition.unseen),
        coverage=partition.coverage,
        holdout_removed_pairs=removed,
        post_processor=processor.name,
        map_all=cfg.map_all,
        timings=timings,
        specialisation=getattr(processor, "report", None),
        training=training,
    )
    logger.info(f"Pipeline done: {report.seen_words} seen, {report.unseen_words} unseen words mapped "
                f"({'all words' if cfg.map_all else 'unseen only'})")
    return PipelineResult(space=final, model=model, report=report, specialised=specialised, partition=partition)
