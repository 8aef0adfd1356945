"""
Stage Report Models
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ARReport(BaseModel):
    """What one ATTRACT-REPEL run did"""

    seen_words: int = 0
    attract_pairs: int = 0
    repel_pairs: int = 0
    epochs: int = 0
    steps: int = 0
    skipped_batches: int = 0
    epoch_costs: List[float] = Field(default_factory=list)


class TrainingReport(BaseModel):
    """Loss history and early-stopping outcome of a mapping run"""

    objective: str
    model_kind: str
    train_size: int
    validation_size: int
    train_losses: List[float] = Field(default_factory=list)
    validation_losses: List[float] = Field(default_factory=list)
    best_epoch: int = 0
    stop_epoch: int = 0
    best_validation_loss: float = float("inf")
    early_stopped: bool = False


class PipelineReport(BaseModel):
    """Counts, timings and final losses of a post-specialisation run"""

    vocabulary_size: int
    seen_words: int
    unseen_words: int
    coverage: float
    holdout_removed_pairs: int = 0
    post_processor: str
    map_all: bool
    timings: Dict[str, float] = Field(default_factory=dict)
    specialisation: Optional[ARReport] = None
    training: Optional[TrainingReport] = None
