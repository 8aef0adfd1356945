"""
ATTRACT-REPEL
Specialises the seen subspace with synonym (attract) and antonym (repel) constraints:
max-margin terms against in-batch negatives plus an L2 pull towards the original
vectors, optimised with Adagrad and renormalised after every epoch.
"""
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.base.base_post_processor import BasePostProcessor
from core.constants.error_messages import ErrorMessages
from core.enums.constraint_kind import ConstraintKind
from core.models.pojo.config_pojo import ARConfig
from core.models.pojo.constraint_pojo import ConstraintSet
from core.models.pojo.embedding_space_pojo import EmbeddingSpace
from core.models.pojo.report_pojo import ARReport
from core.optim.adagrad import Adagrad
from core.specialisation.constraints import filter_to_vocab
from core.specialisation.embedding_store import normalize_rows
from core.utils.random_utility import make_rng


def _relu(z: np.ndarray) -> np.ndarray:
    return np.maximum(z, 0.0)


def _rowdot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum('ij,ij->i', a, b)


# ==================== Negative Examples ====================

def select_negatives(left: np.ndarray, right: np.ndarray, kind: ConstraintKind,
                     left_ids: Optional[np.ndarray] = None,
                     right_ids: Optional[np.ndarray] = None) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Pick in-batch negative examples for every pair.

    Candidates are all vectors of the batch ordered pair by pair (left_0, right_0,
    left_1, ...). A vector never takes itself or its partner as a negative; with ids
    given, no candidate carrying either token is eligible, and zero vectors are never
    eligible. Attract picks the most similar candidate (by cosine), repel the least
    similar; ties go to the lowest candidate position.

    Args:
        left: b x dim left vectors
        right: b x dim right vectors
        kind: attract or repel
        left_ids, right_ids: Optional token ids of the pair members

    Returns:
        (negative position for each left, negative position for each right, valid mask)
        where positions index the interleaved candidate list
    """
    b = len(left)
    if left_ids is None:
        left_ids = np.arange(0, 2 * b, 2)
        right_ids = np.arange(1, 2 * b, 2)
    neg_left = np.zeros(b, dtype=np.int64)
    neg_right = np.zeros(b, dtype=np.int64)
    if b < 2:
        return neg_left, neg_right, np.zeros(b, dtype=bool)

    candidates = np.empty((2 * b, left.shape[1]))
    candidates[0::2] = left
    candidates[1::2] = right
    candidate_ids = np.empty(2 * b, dtype=np.asarray(left_ids).dtype)
    candidate_ids[0::2] = left_ids
    candidate_ids[1::2] = right_ids

    unit_candidates, zero = normalize_rows(candidates)
    own = (candidate_ids[None, :] == np.asarray(left_ids)[:, None]) | \
          (candidate_ids[None, :] == np.asarray(right_ids)[:, None])
    excluded = own | zero[None, :]

    fill = -np.inf if kind == ConstraintKind.ATTRACT else np.inf
    pick = np.argmax if kind == ConstraintKind.ATTRACT else np.argmin
    valid = np.ones(b, dtype=bool)
    for queries, out in ((left, neg_left), (right, neg_right)):
        sims = normalize_rows(queries)[0] @ unit_candidates.T
        sims[excluded] = fill
        chosen = pick(sims, axis=1)
        out[:] = chosen
        valid &= np.isfinite(sims[np.arange(b), chosen])
    return neg_left, neg_right, valid


@dataclass(frozen=True)
class MiniBatch:
    """
    Constraint pairs of one kind with their negative examples. All fields are row
    indices into the working matrix; valid marks pairs that have negatives.
    """
    kind: ConstraintKind
    left: np.ndarray
    right: np.ndarray
    neg_left: np.ndarray
    neg_right: np.ndarray
    valid: np.ndarray

    def __len__(self) -> int:
        return len(self.left)

    def word_rows(self) -> np.ndarray:
        """Unique rows of every word in the batch"""
        return np.unique(np.concatenate([self.left, self.right]))

    def gather(self, matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(x_l, x_r, t_l, t_r) for the valid pairs"""
        v = self.valid
        return (matrix[self.left[v]], matrix[self.right[v]],
                matrix[self.neg_left[v]], matrix[self.neg_right[v]])


def build_batch(matrix: np.ndarray, pairs: np.ndarray, kind: ConstraintKind) -> MiniBatch:
    """
    Assemble a MiniBatch from an (b x 2) array of row pairs, choosing negatives
    from the batch under the current vectors
    """
    left, right = pairs[:, 0], pairs[:, 1]
    pos_left, pos_right, valid = select_negatives(matrix[left], matrix[right], kind, left, right)
    candidate_rows = np.empty(2 * len(pairs), dtype=np.int64)
    candidate_rows[0::2] = left
    candidate_rows[1::2] = right
    return MiniBatch(kind=kind, left=left, right=right,
                     neg_left=candidate_rows[pos_left], neg_right=candidate_rows[pos_right],
                     valid=valid)


# ==================== Cost Terms ====================

def attract_cost(xl: np.ndarray, xr: np.ndarray, tl: np.ndarray, tr: np.ndarray, delta_att: float) -> float:
    """Sum of tau(delta + x_l.t_l - x_l.x_r) + tau(delta + x_r.t_r - x_l.x_r)"""
    pair = _rowdot(xl, xr)
    return float(np.sum(_relu(delta_att + _rowdot(xl, tl) - pair) + _relu(delta_att + _rowdot(xr, tr) - pair)))


def repel_cost(xl: np.ndarray, xr: np.ndarray, tl: np.ndarray, tr: np.ndarray, delta_rep: float) -> float:
    """Sum of tau(delta + x_l.x_r - x_l.t_l) + tau(delta + x_l.x_r - x_r.t_r)"""
    pair = _rowdot(xl, xr)
    return float(np.sum(_relu(delta_rep + pair - _rowdot(xl, tl)) + _relu(delta_rep + pair - _rowdot(xr, tr))))


def margin_cost_and_grad(xl: np.ndarray, xr: np.ndarray, tl: np.ndarray, tr: np.ndarray,
                         kind: ConstraintKind, delta: float):
    """
    Attract or repel cost with its gradients

    Returns:
        (cost, d/dx_l, d/dx_r, d/dt_l, d/dt_r)
    """
    pair = _rowdot(xl, xr)
    if kind == ConstraintKind.ATTRACT:
        z_left = delta + _rowdot(xl, tl) - pair
        z_right = delta + _rowdot(xr, tr) - pair
        sign = 1.0
    else:
        z_left = delta + pair - _rowdot(xl, tl)
        z_right = delta + pair - _rowdot(xr, tr)
        sign = -1.0
    cost = float(np.sum(_relu(z_left) + _relu(z_right)))

    a_left = (z_left > 0).astype(np.float64)[:, None]
    a_right = (z_right > 0).astype(np.float64)[:, None]
    # attract: d z/d t = +x, d z/d pair = -1; repel flips both signs
    g_xl = sign * (a_left * (tl - xr) - a_right * xr)
    g_xr = sign * (a_right * (tr - xl) - a_left * xl)
    g_tl = sign * a_left * xl
    g_tr = sign * a_right * xr
    return cost, g_xl, g_xr, g_tl, g_tr


def reg_cost_and_grad(current: np.ndarray, original: np.ndarray, lambda_reg: float):
    """lambda * sum of ||x_hat - x||_2 over rows, with its gradient (zero at zero displacement)"""
    diff = current - original
    norms = np.linalg.norm(diff, axis=1)
    cost = float(lambda_reg * norms.sum())
    safe = np.where(norms > 0, norms, 1.0)
    grad = lambda_reg * np.where(norms[:, None] > 0, diff / safe[:, None], 0.0)
    return cost, grad


def reg_cost(batch_words: Sequence[str], space: EmbeddingSpace, originals: EmbeddingSpace,
             lambda_reg: float) -> float:
    """Distributional regularisation over the given words: lambda * sum ||x_hat - x||_2"""
    words = sorted(set(batch_words))
    if not words:
        return 0.0
    return reg_cost_and_grad(space.rows(words), originals.rows(words), lambda_reg)[0]


def batch_cost_and_grad(matrix: np.ndarray, originals: np.ndarray, batch: MiniBatch,
                        cfg: ARConfig) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Full cost of one mini-batch (margin term for its kind plus regularisation of
    every batch word) and its gradient, negatives held fixed

    Returns:
        (cost, unique rows touched, gradient rows aligned with them)
    """
    rows = batch.word_rows()
    grad = np.zeros((len(rows), matrix.shape[1]))
    position = {int(r): i for i, r in enumerate(rows)}

    cost, reg_grad = reg_cost_and_grad(matrix[rows], originals[rows], cfg.lambda_reg)
    grad += reg_grad

    if batch.valid.any():
        delta = cfg.delta_att if batch.kind == ConstraintKind.ATTRACT else cfg.delta_rep
        margin, g_xl, g_xr, g_tl, g_tr = margin_cost_and_grad(*batch.gather(matrix), batch.kind, delta)
        cost += margin
        v = batch.valid
        for index_rows, g in ((batch.left[v], g_xl), (batch.right[v], g_xr),
                              (batch.neg_left[v], g_tl), (batch.neg_right[v], g_tr)):
            np.add.at(grad, [position[int(r)] for r in index_rows], g)
    return cost, rows, grad


# ==================== Training ====================

def _chunks(pairs: np.ndarray, size: int) -> List[np.ndarray]:
    return [pairs[i:i + size] for i in range(0, len(pairs), size)]


def interleave_batches(attract_batches: List[np.ndarray],
                       repel_batches: List[np.ndarray]) -> Iterator[Tuple[ConstraintKind, np.ndarray]]:
    """One attract batch then one repel batch, cycling the shorter list until the longer is exhausted"""
    if not attract_batches or not repel_batches:
        kind = ConstraintKind.ATTRACT if attract_batches else ConstraintKind.REPEL
        for pairs in attract_batches or repel_batches:
            yield kind, pairs
        return
    for i in range(max(len(attract_batches), len(repel_batches))):
        yield ConstraintKind.ATTRACT, attract_batches[i % len(attract_batches)]
        yield ConstraintKind.REPEL, repel_batches[i % len(repel_batches)]


def _pair_rows(pairs, row_of) -> np.ndarray:
    return np.array([[row_of[a], row_of[b]] for a, b in pairs], dtype=np.int64).reshape(-1, 2)


def ar_total_cost(space: EmbeddingSpace, originals: EmbeddingSpace, cs: ConstraintSet,
                  cfg: ARConfig) -> float:
    """
    Total ATTRACT-REPEL cost of cs under space, over deterministic (sorted, unshuffled)
    batches with negatives chosen from the current vectors
    """
    words = sorted(cs.words())
    if not words:
        return 0.0
    row_of = {w: i for i, w in enumerate(words)}
    matrix = space.rows(words)
    reference = originals.rows(words)
    total = 0.0
    for kind, pairs, size in ((ConstraintKind.ATTRACT, cs.sorted_attract(), cfg.batch_att),
                              (ConstraintKind.REPEL, cs.sorted_repel(), cfg.batch_rep)):
        for chunk in _chunks(_pair_rows(pairs, row_of), size):
            total += batch_cost_and_grad(matrix, reference, build_batch(matrix, chunk, kind), cfg)[0]
    return total


class AttractRepelSpecialiser(BasePostProcessor):
    """ATTRACT-REPEL post-processor"""

    name = "ar"

    def __init__(self, config: Optional[ARConfig] = None):
        super().__init__()
        self.config = config or ARConfig()
        self.report = ARReport()

    def specialise(self, space: EmbeddingSpace, constraints: ConstraintSet) -> EmbeddingSpace:
        """
        Specialise the seen words of space; unseen rows are returned untouched

        Seen vectors are unit-normalised before the first epoch so that dot products
        equal cosines, and after every epoch.
        """
        cfg = self.config
        if len(space) == 0:
            raise ValueError(ErrorMessages.EMPTY_SPACE)
        constraints = filter_to_vocab(constraints, space)
        if constraints.is_empty():
            self.logger.warning("No constraints to apply; returning the input space unchanged")
            self.report = ARReport()
            return space

        seen = sorted(constraints.words())
        row_of = {w: i for i, w in enumerate(seen)}
        matrix, _ = normalize_rows(space.rows(seen))
        originals = matrix.copy()
        attract = _pair_rows(constraints.sorted_attract(), row_of)
        repel = _pair_rows(constraints.sorted_repel(), row_of)

        rng = make_rng(cfg.seed)
        optimizer = Adagrad([matrix], learning_rate=cfg.adagrad_lr,
                            initial_accumulator=cfg.adagrad_initial_accumulator)
        report = ARReport(seen_words=len(seen), attract_pairs=len(attract), repel_pairs=len(repel))
        self.logger.info(
            f"ATTRACT-REPEL on {len(seen)} seen words: {len(attract)} attract, {len(repel)} repel pairs, "
            f"{cfg.epochs} epochs")

        for epoch in range(1, cfg.epochs + 1):
            attract_batches = _chunks(attract[rng.permutation(len(attract))], cfg.batch_att)
            repel_batches = _chunks(repel[rng.permutation(len(repel))], cfg.batch_rep)
            epoch_cost = 0.0
            for kind, pairs in interleave_batches(attract_batches, repel_batches):
                batch = build_batch(matrix, pairs, kind)
                if len(batch) < 2:
                    report.skipped_batches += 1
                cost, rows, grad = batch_cost_and_grad(matrix, originals, batch, cfg)
                optimizer.step_rows(rows, grad)
                epoch_cost += cost
                report.steps += 1
            matrix[...] = normalize_rows(matrix)[0]
            report.epoch_costs.append(epoch_cost)
            report.epochs = epoch
            self.logger.debug(f"Epoch {epoch}/{cfg.epochs}: cost {epoch_cost:.6f}")

        if report.skipped_batches:
            self.logger.warning(f"{report.skipped_batches} single-pair batches had no negatives (margin terms skipped)")
        self.logger.info(f"ATTRACT-REPEL finished: final epoch cost {report.epoch_costs[-1]:.6f}")
        self.report = report
        return space.with_rows(seen, matrix)


def ar_specialise(space: EmbeddingSpace, cs: ConstraintSet, cfg: Optional[ARConfig] = None) -> EmbeddingSpace:
    """Functional form of AttractRepelSpecialiser(cfg).specialise(space, cs)"""
    return AttractRepelSpecialiser(cfg).specialise(space, cs)
