"""
Embedding Store
Load, save, normalise and compare dense word-vector spaces
"""
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from core.constants.error_messages import ErrorMessages
from core.dataproviders.vector_data_provider import VectorDataProvider
from core.models.pojo.embedding_space_pojo import EmbeddingSpace

logger = logging.getLogger(__name__)


def load_embeddings(path: Union[str, Path], limit: Optional[int] = None) -> EmbeddingSpace:
    """Load a text vector file (optional count/dim header, first occurrence of a token wins)"""
    return VectorDataProvider().load_data(path, limit=limit)


def save_embeddings(space: EmbeddingSpace, path: Union[str, Path]) -> Path:
    """Write a space in the text format with a count/dim header; the write is atomic"""
    return VectorDataProvider().save_data(space, path)


def normalize_rows(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Rescale every nonzero row of matrix to unit Euclidean norm

    Returns:
        (normalised copy, boolean mask of zero rows)
    """
    norms = np.linalg.norm(matrix, axis=1)
    zero = norms == 0.0
    out = np.array(matrix, dtype=np.float64, copy=True)
    out[~zero] /= norms[~zero, None]
    return out, zero


def unit_normalize(space: EmbeddingSpace) -> EmbeddingSpace:
    """
    Return a copy of space with unit-length rows. Zero rows stay zero and are
    reported as a warning.
    """
    normalised, zero = normalize_rows(space.vectors)
    if zero.any():
        sample = [space.words[i] for i in np.flatnonzero(zero)[:5]]
        logger.warning(f"{int(zero.sum())} zero vectors left unnormalised (e.g. {sample})")
    return space.with_vectors(normalised)


UNIT_COSINE_TOLERANCE = 1e-12


def _snap_unit(sims):
    """Values within rounding of +-1 become exactly +-1, then everything is clamped"""
    sims = np.where(np.abs(sims - 1.0) < UNIT_COSINE_TOLERANCE, 1.0, sims)
    sims = np.where(np.abs(sims + 1.0) < UNIT_COSINE_TOLERANCE, -1.0, sims)
    return np.clip(sims, -1.0, 1.0)


def cosine(u, v) -> float:
    """
    Cosine similarity in [-1, 1]; 0 when either vector is zero, exactly 1 for parallel vectors

    Raises:
        ValueError: If the vectors differ in length
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=u.shape, right=v.shape))
    denom = np.linalg.norm(u) * np.linalg.norm(v)
    if denom == 0.0:
        return 0.0
    return float(_snap_unit(np.dot(u, v) / denom))


def cosine_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise cosine between aligned rows of a and b (zero rows give 0)"""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=a.shape, right=b.shape))
    denom = np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1)
    dots = np.einsum('ij,ij->i', a, b)
    with np.errstate(invalid='ignore', divide='ignore'):
        sims = np.where(denom > 0, dots / np.where(denom > 0, denom, 1.0), 0.0)
    return _snap_unit(sims)
