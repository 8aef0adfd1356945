"""
Embedding Space Model
"""
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_validator

from core.constants.error_messages import ErrorMessages


def _frozen_matrix(value) -> np.ndarray:
    if isinstance(value, np.ndarray) and value.dtype == np.float64 and not value.flags.writeable:
        return value
    matrix = np.array(value, dtype=np.float64, copy=True)
    matrix.setflags(write=False)
    return matrix


class EmbeddingSpace(BaseModel):
    """
    Ordered vocabulary plus a dense |words| x dim matrix.

    The matrix is stored read-only; operations that change vectors return new spaces.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    words: Tuple[str, ...]
    vectors: np.ndarray

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("vectors", mode="before")
    @classmethod
    def _as_matrix(cls, value):
        return _frozen_matrix(value)

    @model_validator(mode="after")
    def _check_consistency(self):
        if self.vectors.ndim != 2 or self.vectors.shape[0] != len(self.words):
            raise ValueError(ErrorMessages.SHAPE_MISMATCH.format(
                shape=self.vectors.shape, rows=len(self.words),
                dim=self.vectors.shape[-1] if self.vectors.ndim else 0))
        if self.vectors.shape[1] < 1:
            raise ValueError(ErrorMessages.INVALID_DIMENSION.format(file_path="<memory>", dim=self.vectors.shape[1]))
        duplicates = len(self.words) - len(set(self.words))
        if duplicates:
            raise ValueError(ErrorMessages.DUPLICATE_WORDS.format(count=duplicates))
        finite_rows = np.isfinite(self.vectors).all(axis=1)
        if not finite_rows.all():
            bad = self.words[int(np.flatnonzero(~finite_rows)[0])]
            raise ValueError(ErrorMessages.NON_FINITE_VECTOR.format(word=bad))
        return self

    def model_post_init(self, __context) -> None:
        self._index = {word: i for i, word in enumerate(self.words)}

    @classmethod
    def empty(cls, dim: int) -> "EmbeddingSpace":
        """Space with no words and the given dimensionality"""
        return cls(words=(), vectors=np.zeros((0, dim)))

    # ==================== Lookup ====================

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingSpace):
            return NotImplemented
        return self.words == other.words and np.array_equal(self.vectors, other.vectors)

    def __hash__(self) -> int:
        return hash((self.words, self.vectors.shape))

    def index_of(self, word: str) -> int:
        """Row index of a word; raises KeyError when absent"""
        return self._index[word]

    def vector(self, word: str) -> np.ndarray:
        return self.vectors[self._index[word]]

    def rows(self, words: Iterable[str]) -> np.ndarray:
        """Matrix of the given words' vectors, in the given order"""
        idx = [self._index[w] for w in words]
        return self.vectors[idx] if idx else np.zeros((0, self.dim))

    @property
    def vocabulary(self) -> frozenset:
        return frozenset(self.words)

    # ==================== Derived Spaces ====================

    def subset(self, words: Sequence[str]) -> "EmbeddingSpace":
        """New space restricted to words, keeping the given order"""
        words = tuple(words)
        return EmbeddingSpace(words=words, vectors=self.rows(words))

    def with_vectors(self, vectors: np.ndarray) -> "EmbeddingSpace":
        """Same vocabulary, new matrix"""
        return EmbeddingSpace(words=self.words, vectors=vectors)

    def with_rows(self, words: Sequence[str], rows: np.ndarray) -> "EmbeddingSpace":
        """Copy of this space with the rows of words replaced"""
        matrix = np.array(self.vectors, copy=True)
        if len(words):
            matrix[[self._index[w] for w in words]] = rows
        return self.with_vectors(matrix)
