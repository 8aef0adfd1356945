"""
Mapping Trainer
Fits the specialisation function on (original, specialised) pairs of seen words with
Adam and early stopping, offers the closed-form least-squares linear map, and applies
a trained model to a space.
"""
import logging
from typing import Optional, Tuple

import numpy as np
from scipy import linalg

from core.constants.error_messages import ErrorMessages
from core.enums.model_kind import ModelKind
from core.enums.objective import Objective
from core.mapping.losses import objective_loss_and_grad
from core.mapping.mapping_net import MappingModel
from core.models.pojo.config_pojo import MapTrainConfig
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.models.pojo.report_pojo import TrainingReport
from core.optim.adam import Adam
from core.utils.random_utility import make_rng

logger = logging.getLogger(__name__)

MIN_TRAINING_PAIRS = 10


def compute_gradients(model: MappingModel, inputs: np.ndarray, targets: np.ndarray, cfg: MapTrainConfig,
                      negatives: Optional[np.ndarray] = None):
    """
    Loss of the configured objective on one batch and its gradients

    Args:
        model: Mapping model
        inputs: n x dim batch inputs
        targets: n x dim batch targets
        cfg: Objective, margin and reduction settings
        negatives: n x k x dim negative targets (mm only)

    Returns:
        (loss, gradients aligned with model.parameters())
    """
    pred, cache = model.forward_with_cache(inputs)
    loss, grad_out = objective_loss_and_grad(cfg.objective, pred, targets, negatives,
                                             cfg.delta_mm, cfg.sum_reduction)
    return loss, model.backward(cache, grad_out)


def batch_loss(model: MappingModel, inputs: np.ndarray, targets: np.ndarray, cfg: MapTrainConfig,
               negatives: Optional[np.ndarray] = None) -> float:
    """Objective value without gradients"""
    pred = model.forward(inputs)
    return objective_loss_and_grad(cfg.objective, pred, targets, negatives, cfg.delta_mm, cfg.sum_reduction)[0]


def sample_negatives(count: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """
    k indices per example drawn uniformly from range(count), never the example's own index

    Returns:
        count x k index matrix
    """
    if count < 2:
        raise ValueError(ErrorMessages.TOO_FEW_PAIRS.format(minimum=2, count=count))
    draws = rng.integers(0, count - 1, size=(count, k))
    return draws + (draws >= np.arange(count)[:, None])


def _split(count: int, fraction: float, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    order = rng.permutation(count)
    n_val = int(min(max(1, round(count * fraction)), count - 2))
    return order[n_val:], order[:n_val]


def train_mapping(x_seen: np.ndarray, x_seen_specialised: np.ndarray, model_kind: ModelKind = ModelKind.DFFN,
                  cfg: Optional[MapTrainConfig] = None) -> Tuple[MappingModel, TrainingReport]:
    """
    Train f so that f(x_seen) approximates x_seen_specialised

    The pairs are split by a seeded shuffle into training and validation parts; the
    returned model is the snapshot with the lowest validation loss.

    Raises:
        ValueError: On shape mismatch or fewer than 10 pairs
        FloatingPointError: If a batch loss becomes NaN
    """
    cfg = cfg or MapTrainConfig()
    x_seen = np.asarray(x_seen, dtype=np.float64)
    targets = np.asarray(x_seen_specialised, dtype=np.float64)
    if x_seen.shape != targets.shape or x_seen.ndim != 2:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=x_seen.shape, right=targets.shape))
    if len(x_seen) < MIN_TRAINING_PAIRS:
        raise ValueError(ErrorMessages.TOO_FEW_PAIRS.format(minimum=MIN_TRAINING_PAIRS, count=len(x_seen)))

    rng = make_rng(cfg.seed)
    train_idx, val_idx = _split(len(x_seen), cfg.validation_fraction, rng)
    x_train, y_train = x_seen[train_idx], targets[train_idx]
    x_val, y_val = x_seen[val_idx], targets[val_idx]
    model_kind = ModelKind(model_kind)
    model = MappingModel.build(model_kind, x_seen.shape[1], cfg.hidden_layers, cfg.hidden_width,
                               cfg.activation, cfg.init, rng)
    optimizer = Adam(model.parameters(), cfg.learning_rate, cfg.beta1, cfg.beta2, cfg.adam_epsilon)

    use_negatives = Objective(cfg.objective) == Objective.MM
    val_negatives = None
    if use_negatives:
        val_negatives = y_train[rng.integers(0, len(y_train), size=(len(y_val), cfg.k_neg))]

    report = TrainingReport(objective=Objective(cfg.objective).value, model_kind=model_kind.value,
                            train_size=len(x_train), validation_size=len(x_val))
    logger.info(f"Training {model!r} on {len(x_train)} pairs ({len(x_val)} validation), "
                f"objective {report.objective}, up to {cfg.epochs} epochs")

    best = model.copy()
    stale = 0
    for epoch in range(1, cfg.epochs + 1):
        negative_idx = sample_negatives(len(x_train), cfg.k_neg, rng) if use_negatives else None
        order = rng.permutation(len(x_train))
        total = 0.0
        for batch_no, start in enumerate(range(0, len(order), cfg.batch_size), start=1):
            idx = order[start:start + cfg.batch_size]
            negatives = y_train[negative_idx[idx]] if use_negatives else None
            loss, grads = compute_gradients(model, x_train[idx], y_train[idx], cfg, negatives)
            if not np.isfinite(loss):
                message = ErrorMessages.NAN_LOSS.format(epoch=epoch, batch=batch_no, objective=report.objective)
                logger.error(message)
                raise FloatingPointError(message)
            optimizer.step(grads)
            total += loss * (len(idx) if not cfg.sum_reduction else 1)
        train_loss = total if cfg.sum_reduction else total / len(x_train)
        val_loss = batch_loss(model, x_val, y_val, cfg, val_negatives)
        report.train_losses.append(float(train_loss))
        report.validation_losses.append(float(val_loss))
        report.stop_epoch = epoch
        logger.debug(f"Epoch {epoch}: train {train_loss:.6f}, validation {val_loss:.6f}")

        if val_loss < report.best_validation_loss:
            report.best_validation_loss = float(val_loss)
            report.best_epoch = epoch
            best = model.copy()
            stale = 0
        else:
            stale += 1
            if stale >= cfg.patience:
                report.early_stopped = True
                logger.info(f"Early stopping at epoch {epoch}: no improvement for {cfg.patience} epochs")
                break

    logger.info(f"Best validation loss {report.best_validation_loss:.6f} at epoch {report.best_epoch}")
    return best, report


def closed_form_linear_mse(x_seen: np.ndarray, x_seen_specialised: np.ndarray) -> MappingModel:
    """
    Least-squares W minimising ||W X^T - X'^T||_F (rank-deficient systems get the
    minimum-norm solution)

    Raises:
        ValueError: If X is all zeros or the shapes differ
    """
    x_seen = np.asarray(x_seen, dtype=np.float64)
    targets = np.asarray(x_seen_specialised, dtype=np.float64)
    if x_seen.shape != targets.shape or x_seen.ndim != 2:
        raise ValueError(ErrorMessages.LENGTH_MISMATCH.format(left=x_seen.shape, right=targets.shape))
    if not np.any(x_seen):
        raise ValueError(ErrorMessages.DEGENERATE_INPUT)
    solution, _, rank, _ = linalg.lstsq(x_seen, targets)
    if rank < x_seen.shape[1]:
        logger.warning(f"Least-squares system is rank deficient (rank {rank} < {x_seen.shape[1]})")
    return MappingModel.linear(solution.T)


def apply_mapping(model: MappingModel, space: EmbeddingSpace) -> EmbeddingSpace:
    """
    Map every row of space through the model; vocabulary and order are kept

    Raises:
        ValueError: If the space dimensionality differs from the model's
    """
    if space.dim != model.dim:
        raise ValueError(ErrorMessages.DIMENSION_MISMATCH.format(expected=model.dim, actual=space.dim))
    if len(space) == 0:
        return space
    return space.with_vectors(model.forward(space.vectors))
