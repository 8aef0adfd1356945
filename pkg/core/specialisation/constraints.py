"""
Constraints
Restrict attract/repel pairs to a vocabulary, split the vocabulary into seen and
unseen words, and apply the hold-out filter.
"""
import logging
from pathlib import Path
from typing import AbstractSet, Iterable, Optional, Tuple, Union

from core.dataproviders.constraint_data_provider import ConstraintDataProvider
from core.models.pojo.constraint_pojo import ConstraintSet, VocabularyPartition
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.models.pojo.eval_pojo import EvalDataset

logger = logging.getLogger(__name__)


def load_constraints(attract_path: Optional[Union[str, Path]], repel_path: Optional[Union[str, Path]],
                     strip_prefix: Optional[str] = None) -> ConstraintSet:
    """Read attract and repel files; self pairs and attract/repel conflicts are dropped and counted"""
    return ConstraintDataProvider(strip_prefix=strip_prefix).load_constraints(attract_path, repel_path)


def _keep(cs: ConstraintSet, predicate) -> ConstraintSet:
    return ConstraintSet(
        attract=frozenset(p for p in cs.attract if predicate(p)),
        repel=frozenset(p for p in cs.repel if predicate(p)),
        stats=cs.stats,
    )


def filter_to_vocab(cs: ConstraintSet, space: EmbeddingSpace) -> ConstraintSet:
    """Keep only pairs whose members are both in the space vocabulary"""
    filtered = _keep(cs, lambda pair: pair[0] in space and pair[1] in space)
    dropped = len(cs) - len(filtered)
    if dropped:
        logger.info(f"Dropped {dropped} of {len(cs)} constraint pairs with out-of-vocabulary words")
    return filtered


def partition_vocab(cs: ConstraintSet, space: EmbeddingSpace) -> VocabularyPartition:
    """Seen = every vocabulary word occurring in a pair; unseen = the rest"""
    vocabulary = space.vocabulary
    seen = cs.words() & vocabulary
    partition = VocabularyPartition(seen=frozenset(seen), unseen=frozenset(vocabulary - seen))
    logger.info(
        f"Vocabulary partition: {len(partition.seen)} seen, {len(partition.unseen)} unseen "
        f"(coverage {partition.coverage:.1%})")
    return partition


def holdout_filter(cs: ConstraintSet, eval_words: AbstractSet[str]) -> Tuple[ConstraintSet, int]:
    """
    Remove every pair with at least one member in eval_words

    Returns:
        (filtered constraints, number of removed pairs)
    """
    if not eval_words:
        return cs, 0
    filtered = _keep(cs, lambda pair: pair[0] not in eval_words and pair[1] not in eval_words)
    removed = len(cs) - len(filtered)
    logger.info(f"Hold-out filter removed {removed} of {len(cs)} pairs touching {len(eval_words)} evaluation words")
    return filtered, removed


def eval_vocabulary(datasets: Iterable[EvalDataset]) -> frozenset:
    """Union of the words of all datasets"""
    words = set()
    for dataset in datasets:
        words |= dataset.words()
    return frozenset(words)
