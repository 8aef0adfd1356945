"""
Retrofitting baseline
Synonym-only post-processor: each seen vector moves to the average of its attract
neighbours and its own original vector. Repel pairs are ignored.
"""
from collections import defaultdict
from typing import Dict, List, Optional

import numpy as np

from core.base.base_post_processor import BasePostProcessor
from core.models.pojo.config_pojo import RetrofitConfig
from core.models.pojo.constraint_pojo import ConstraintSet
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.specialisation.constraints import filter_to_vocab


class RetrofitSpecialiser(BasePostProcessor):
    """Jacobi-style retrofitting over the attract graph"""

    name = "retrofit"

    def __init__(self, config: Optional[RetrofitConfig] = None):
        super().__init__()
        self.config = config or RetrofitConfig()

    def usable_constraints(self, constraints: ConstraintSet) -> ConstraintSet:
        return constraints.attract_only()

    def specialise(self, space: EmbeddingSpace, constraints: ConstraintSet) -> EmbeddingSpace:
        """
        Run `iterations` rounds of q_i <- (sum of neighbour q_j + q_hat_i) / (deg(i) + 1)

        All rows of a round are computed from the previous round's values.
        """
        attract = filter_to_vocab(self.usable_constraints(constraints), space)
        if constraints.repel:
            self.logger.info(f"Retrofitting ignores {len(constraints.repel)} repel pairs")
        if attract.is_empty() or self.config.iterations == 0:
            if attract.is_empty():
                self.logger.warning("No attract constraints to apply; returning the input space unchanged")
            return space

        seen = sorted(attract.words())
        row_of = {w: i for i, w in enumerate(seen)}
        neighbours: Dict[int, List[int]] = defaultdict(list)
        for a, b in attract.sorted_attract():
            neighbours[row_of[a]].append(row_of[b])
            neighbours[row_of[b]].append(row_of[a])

        originals = space.rows(seen)
        current = originals.copy()
        degree = np.array([len(neighbours[i]) for i in range(len(seen))], dtype=np.float64)
        for iteration in range(1, self.config.iterations + 1):
            sums = np.zeros_like(current)
            for i, adjacent in neighbours.items():
                sums[i] = current[adjacent].sum(axis=0)
            updated = (sums + originals) / (degree[:, None] + 1.0)
            shift = float(np.abs(updated - current).max())
            current = updated
            self.logger.debug(f"Retrofit iteration {iteration}: max shift {shift:.6g}")

        self.logger.info(f"Retrofitted {len(seen)} words over {self.config.iterations} iterations")
        return space.with_rows(seen, current)


def retrofit_specialise(space: EmbeddingSpace, cs: ConstraintSet, iterations: int = 10) -> EmbeddingSpace:
    """Functional form of RetrofitSpecialiser"""
    return RetrofitSpecialiser(RetrofitConfig(iterations=iterations)).specialise(space, cs)
