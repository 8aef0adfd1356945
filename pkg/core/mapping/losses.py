"""
Mapping objectives
mse: squared Frobenius distance; mm: max-margin ranking against k negatives;
hinge: margin on the target cosine alone. Losses are averaged over the batch unless
sum reduction is requested. Every *_and_grad function returns d loss / d pred.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from core.constants.error_messages import ErrorMessages
from core.enums.objective import Objective

logger = logging.getLogger(__name__)


def _check_shapes(pred: np.ndarray, target: np.ndarray):
    if pred.shape != target.shape:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=pred.shape, right=target.shape))


def _scale(n: int, sum_reduction: bool) -> float:
    return 1.0 if sum_reduction else 1.0 / max(n, 1)


def cosine_and_grad(p: np.ndarray, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Cosine between aligned rows (last axis) and its gradient with respect to p.
    Rows where either vector is zero get cosine 0 and zero gradient.

    Returns:
        (cosines, d cos / d p, zero mask)
    """
    p_norm = np.linalg.norm(p, axis=-1)
    t_norm = np.linalg.norm(t, axis=-1)
    zero = (p_norm == 0) | (t_norm == 0)
    p_safe = np.where(zero, 1.0, p_norm)
    t_safe = np.where(zero, 1.0, t_norm)
    cos = np.where(zero, 0.0, np.sum(p * t, axis=-1) / (p_safe * t_safe))
    grad = t / (p_safe * t_safe)[..., None] - cos[..., None] * p / (p_safe ** 2)[..., None]
    grad = np.where(zero[..., None], 0.0, grad)
    return cos, grad, zero


def mse_loss_and_grad(pred: np.ndarray, target: np.ndarray, sum_reduction: bool = False):
    _check_shapes(pred, target)
    diff = pred - target
    scale = _scale(len(pred), sum_reduction)
    return float(scale * np.sum(diff * diff)), 2.0 * scale * diff


def mse_loss(pred: np.ndarray, target: np.ndarray, sum_reduction: bool = False) -> float:
    """||pred - target||_F^2 divided by the batch size"""
    return mse_loss_and_grad(pred, target, sum_reduction)[0]


def mm_loss_and_grad(pred: np.ndarray, target: np.ndarray, negatives: np.ndarray, delta_mm: float,
                     sum_reduction: bool = False):
    """
    Args:
        pred, target: n x dim
        negatives: n x k x dim negative targets
    """
    _check_shapes(pred, target)
    if negatives.ndim != 3 or negatives.shape[0] != len(pred) or negatives.shape[2] != pred.shape[1]:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=pred.shape, right=negatives.shape))
    pos, pos_grad, pos_zero = cosine_and_grad(pred, target)
    neg, neg_grad, neg_zero = cosine_and_grad(pred[:, None, :], negatives)
    if pos_zero.any() or neg_zero.any():
        logger.warning(f"{int(pos_zero.sum() + neg_zero.sum())} mm terms involve zero-norm vectors")
    # a zero prediction or target fixes every term of its row at tau(delta_mm)
    margins = np.where(pos_zero[:, None], delta_mm, delta_mm - pos[:, None] + neg)
    active = ((margins > 0) & ~pos_zero[:, None]).astype(np.float64)
    scale = _scale(len(pred), sum_reduction)
    loss = float(scale * np.sum(np.maximum(margins, 0.0)))
    grad = scale * (np.einsum('nk,nkd->nd', active, neg_grad) - active.sum(axis=1)[:, None] * pos_grad)
    return loss, grad


def mm_loss(pred: np.ndarray, target: np.ndarray, negatives: np.ndarray, delta_mm: float = 0.6,
            sum_reduction: bool = False) -> float:
    """Sum over examples and negatives of tau(delta - cos(pred, target) + cos(pred, negative)) / n"""
    return mm_loss_and_grad(pred, target, negatives, delta_mm, sum_reduction)[0]


def hinge_loss_and_grad(pred: np.ndarray, target: np.ndarray, delta_mm: float, sum_reduction: bool = False):
    _check_shapes(pred, target)
    cos, cos_grad, zero = cosine_and_grad(pred, target)
    if zero.any():
        logger.warning(f"{int(zero.sum())} hinge terms involve zero-norm vectors")
    margins = delta_mm - cos
    active = (margins > 0).astype(np.float64)
    scale = _scale(len(pred), sum_reduction)
    return float(scale * np.sum(np.maximum(margins, 0.0))), -scale * active[:, None] * cos_grad


def hinge_loss(pred: np.ndarray, target: np.ndarray, delta_mm: float = 1.0, sum_reduction: bool = False) -> float:
    """Mean of tau(delta - cos(pred, target))"""
    return hinge_loss_and_grad(pred, target, delta_mm, sum_reduction)[0]


def objective_loss_and_grad(objective: Objective, pred: np.ndarray, target: np.ndarray,
                            negatives: Optional[np.ndarray] = None, delta_mm: float = 0.6,
                            sum_reduction: bool = False) -> Tuple[float, np.ndarray]:
    """Dispatch on the training objective"""
    objective = Objective(objective)
    if objective == Objective.MSE:
        return mse_loss_and_grad(pred, target, sum_reduction)
    if objective == Objective.MM:
        if negatives is None:
            raise ValueError("The mm objective needs negative targets")
        return mm_loss_and_grad(pred, target, negatives, delta_mm, sum_reduction)
    return hinge_loss_and_grad(pred, target, delta_mm, sum_reduction)
