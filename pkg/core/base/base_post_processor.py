"""
Base Post-Processor class that every specialisation method extends
"""
import logging
from abc import ABC, abstractmethod
from typing import FrozenSet

from core.models.pojo.constraint_pojo import ConstraintSet
from core.models.pojo.embedding_space_pojo import EmbeddingSpace


class BasePostProcessor(ABC):
    """
    A post-processor fine-tunes the vectors of words that occur in the constraints
    (the seen words) and leaves every other vector untouched.
    """

    name = "base"

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def specialise(self, space: EmbeddingSpace, constraints: ConstraintSet) -> EmbeddingSpace:
        """Return a space of the same vocabulary with seen vectors specialised"""

    def usable_constraints(self, constraints: ConstraintSet) -> ConstraintSet:
        """The part of the constraints this method actually consumes"""
        return constraints

    def seen_words(self, constraints: ConstraintSet) -> FrozenSet[str]:
        """Words whose vectors this method may change"""
        return self.usable_constraints(constraints).words()
