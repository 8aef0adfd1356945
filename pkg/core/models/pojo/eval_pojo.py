"""
Evaluation Dataset and Report Models
"""
import math
from typing import Any, Dict, FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

ScoredPair = Tuple[str, str, float]


class EvalDataset(BaseModel):
    """Scored word pairs (SimLex-style) with gold similarity ratings"""
    model_config = ConfigDict(frozen=True)

    name: str
    pairs: Tuple[ScoredPair, ...]

    @field_validator("pairs")
    @classmethod
    def _check_pairs(cls, pairs):
        seen = set()
        for word1, word2, score in pairs:
            if not math.isfinite(score):
                raise ValueError(f"Gold score for ({word1}, {word2}) is not finite")
            key = frozenset((word1, word2))
            if key in seen:
                raise ValueError(f"Duplicate pair ({word1}, {word2})")
            seen.add(key)
        return pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def words(self) -> FrozenSet[str]:
        return frozenset(w for w1, w2, _ in self.pairs for w in (w1, w2))


class EvalReport(BaseModel):
    """Spearman's rho of one space on one dataset"""

    dataset: str
    rho: float = Field(..., ge=-1.0, le=1.0)
    covered: int = Field(..., ge=0)
    total: int = Field(..., ge=0)
    oov_policy: str = "skip"
    config: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_counts(self):
        if self.covered > self.total:
            raise ValueError(f"covered ({self.covered}) exceeds total ({self.total})")
        return self

    @property
    def skipped(self) -> int:
        return self.total - self.covered

    def to_record(self) -> Dict[str, Any]:
        """Record in the eval report schema shape"""
        return {
            "dataset": self.dataset,
            "rho": self.rho,
            "covered": self.covered,
            "total": self.total,
            "config": self.config,
        }
