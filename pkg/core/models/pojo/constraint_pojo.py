"""
Constraint Set and Vocabulary Partition Models
"""
from typing import FrozenSet, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

Pair = Tuple[str, str]


def canonical_pair(first: str, second: str) -> Pair:
    """Unordered pair stored with lexicographically ordered members"""
    return (first, second) if first <= second else (second, first)


class ConstraintStats(BaseModel):
    """Counts of what was dropped while building a ConstraintSet"""
    model_config = ConfigDict(frozen=True)

    duplicate_pairs: int = 0
    self_pairs: int = 0
    conflicting_pairs: int = 0


class ConstraintSet(BaseModel):
    """
    Attract (synonym) and repel (antonym) word pairs.

    Pairs are canonical, never reflexive, and never present in both sets.
    """
    model_config = ConfigDict(frozen=True)

    attract: FrozenSet[Pair] = frozenset()
    repel: FrozenSet[Pair] = frozenset()
    stats: ConstraintStats = Field(default_factory=ConstraintStats)

    @model_validator(mode="after")
    def _check_pairs(self):
        for pair in self.attract | self.repel:
            if pair[0] == pair[1]:
                raise ValueError(f"Self pair not allowed: {pair}")
            if pair != canonical_pair(*pair):
                raise ValueError(f"Pair not canonical: {pair}")
        overlap = self.attract & self.repel
        if overlap:
            raise ValueError(f"{len(overlap)} pairs present in both attract and repel")
        return self

    @classmethod
    def from_pairs(cls, attract: Iterable[Pair] = (), repel: Iterable[Pair] = (),
                   stats: ConstraintStats = None) -> "ConstraintSet":
        """
        Build a ConstraintSet from raw pairs: canonicalise, drop self pairs, and drop
        pairs found in both lists from both sets.
        """
        self_pairs = 0
        duplicates = 0
        sets = []
        for raw_pairs in (attract, repel):
            kept = set()
            for first, second in raw_pairs:
                if first == second:
                    self_pairs += 1
                    continue
                pair = canonical_pair(first, second)
                if pair in kept:
                    duplicates += 1
                kept.add(pair)
            sets.append(kept)
        attract_set, repel_set = sets
        conflicts = attract_set & repel_set
        base = stats or ConstraintStats()
        return cls(
            attract=frozenset(attract_set - conflicts),
            repel=frozenset(repel_set - conflicts),
            stats=ConstraintStats(
                duplicate_pairs=base.duplicate_pairs + duplicates,
                self_pairs=base.self_pairs + self_pairs,
                conflicting_pairs=base.conflicting_pairs + len(conflicts),
            ),
        )

    def __len__(self) -> int:
        return len(self.attract) + len(self.repel)

    def is_empty(self) -> bool:
        return not self.attract and not self.repel

    def words(self) -> FrozenSet[str]:
        """Every token that occurs in any pair"""
        return frozenset(w for pair in self.attract | self.repel for w in pair)

    def sorted_attract(self) -> List[Pair]:
        return sorted(self.attract)

    def sorted_repel(self) -> List[Pair]:
        return sorted(self.repel)

    def attract_only(self) -> "ConstraintSet":
        """Same attract pairs, repel dropped"""
        return ConstraintSet(attract=self.attract, stats=self.stats)


class VocabularyPartition(BaseModel):
    """Split of a space vocabulary into seen (constrained) and unseen words"""
    model_config = ConfigDict(frozen=True)

    seen: FrozenSet[str]
    unseen: FrozenSet[str]

    @model_validator(mode="after")
    def _check_disjoint(self):
        if self.seen & self.unseen:
            raise ValueError("seen and unseen vocabularies overlap")
        return self

    @property
    def total(self) -> int:
        return len(self.seen) + len(self.unseen)

    @property
    def coverage(self) -> float:
        """Fraction of the vocabulary that is seen, in [0, 1]"""
        return len(self.seen) / self.total if self.total else 0.0
