"""
Property Checks: oracles and invariants over randomised inputs
"""
import allure
import numpy as np
import pytest

from core.base.base_test import BaseTest
from core.enums.model_kind import ModelKind
from core.enums.objective import Objective
from core.evaluation.word_similarity import spearman_rho
from core.mapping.losses import mm_loss_and_grad, mse_loss
from core.mapping.trainer import closed_form_linear_mse, train_mapping
from core.models.pojo.config_pojo import ARConfig, MapTrainConfig
from core.specialisation.attract_repel import ar_specialise, ar_total_cost
from core.specialisation.constraints import holdout_filter
from core.specialisation.embedding_store import cosine, unit_normalize
from tests.helpers.synthetic_factory import SyntheticFactory, constraint_set


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """1-based ranks with ties sharing the mean of their positions"""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = np.zeros(len(values))
    start = 0
    while start < len(order):
        end = start
        while end + 1 < len(order) and values[order[end + 1]] == values[order[start]]:
            end += 1
        for position in range(start, end + 1):
            ranks[order[position]] = (start + end) / 2.0 + 1.0
        start = end + 1
    return ranks


def _unit(vectors: np.ndarray) -> np.ndarray:
    return vectors / np.linalg.norm(vectors, axis=-1, keepdims=True)


def _pearson(a: np.ndarray, b: np.ndarray) -> float:
    a, b = a - a.mean(), b - b.mean()
    return float(np.sum(a * b) / np.sqrt(np.sum(a * a) * np.sum(b * b)))


@allure.feature("Properties")
@allure.story("Spearman oracle")
class TestSpearmanOracle(BaseTest):

    @allure.title("Rho agrees with an explicit average-rank computation")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.property
    def test_brute_force_oracle(self):
        rng = np.random.default_rng(0)
        compared = 0
        for _ in range(1000):
            n = int(rng.integers(3, 13))
            gold = rng.integers(0, 5, size=n).astype(float)
            pred = rng.integers(0, 6, size=n).astype(float)
            if np.all(gold == gold[0]) or np.all(pred == pred[0]):
                with pytest.raises(ValueError):
                    spearman_rho(gold, pred)
                continue
            expected = _pearson(_average_ranks(gold), _average_ranks(pred))
            assert abs(spearman_rho(gold, pred) - expected) <= 1e-12
            compared += 1
        self.assert_greater_than(compared, 900)

    @allure.title("Rho is symmetric and invariant to increasing transforms")
    @pytest.mark.property
    def test_invariances(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            gold = rng.normal(size=15)
            pred = rng.normal(size=15)
            rho = spearman_rho(gold, pred)
            assert abs(rho - spearman_rho(pred, gold)) <= 1e-12
            assert abs(rho - spearman_rho(gold, np.exp(pred))) <= 1e-12
            assert -1.0 <= rho <= 1.0
        self.log_test_step("200 random samples checked")


@allure.feature("Properties")
@allure.story("Linear oracle")
class TestLinearOracle(BaseTest):

    @allure.title("Closed form matches an independent normal-equation solve")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.property
    def test_normal_equations(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            inputs = rng.normal(size=(10, 3))
            targets = rng.normal(size=(10, 3))

            model = closed_form_linear_mse(inputs, targets)
            normal = np.linalg.solve(inputs.T @ inputs, inputs.T @ targets).T

            residual = np.linalg.norm(inputs @ model.weights[0].T - targets)
            expected = np.linalg.norm(inputs @ normal.T - targets)
            self.assert_close(residual, expected, 1e-8)

    @allure.title("Gradient-trained linear mse approaches the least-squares solution")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.property
    @pytest.mark.slow
    def test_trained_matches_closed_form(self):
        rng = np.random.default_rng(3)
        inputs = rng.normal(size=(200, 10))
        truth = rng.normal(scale=0.5, size=(10, 10))
        targets = inputs @ truth.T + rng.normal(scale=0.2, size=(200, 10))
        cfg = MapTrainConfig(objective=Objective.MSE, learning_rate=0.005, batch_size=16, epochs=400,
                             patience=400, seed=3)

        model, report = train_mapping(inputs, targets, ModelKind.LINEAR, cfg)
        closed = closed_form_linear_mse(inputs, targets)

        trained_mse = mse_loss(model.forward(inputs), targets)
        closed_mse = mse_loss(closed.forward(inputs), targets)
        self.attach_json_to_report({"trained": trained_mse, "closed_form": closed_mse,
                                    "best_epoch": report.best_epoch}, "Residuals")
        self.assert_less_than(trained_mse, 1.05 * closed_mse)


@allure.feature("Properties")
@allure.story("Objective invariants")
class TestObjectiveProperties(BaseTest):

    @allure.title("Losses are non-negative and mm is zero iff no margin is active")
    @pytest.mark.property
    def test_non_negative(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            pred = rng.normal(size=(4, 3))
            target = rng.normal(size=(4, 3))
            negatives = rng.normal(size=(4, 2, 3))
            delta = float(rng.uniform(0.0, 1.0))

            loss, _ = mm_loss_and_grad(pred, target, negatives, delta)
            assert mse_loss(pred, target) >= 0.0
            assert loss >= 0.0

            positive = np.sum(_unit(pred) * _unit(target), axis=-1)
            negative = np.einsum('nd,nkd->nk', _unit(pred), _unit(negatives))
            any_active = bool(np.any(delta - positive[:, None] + negative > 0))
            assert (loss > 0.0) == any_active
        self.log_test_step("200 random batches checked")


@allure.feature("Properties")
@allure.story("ATTRACT-REPEL invariants")
class TestAttractRepelProperties(BaseTest):

    @pytest.fixture(autouse=True)
    def setup_problem(self, setup_test):
        factory = SyntheticFactory(seed=5)
        self.space = factory.space(50, 10)
        words = list(self.space.words)
        pairs = factory.disjoint_pairs(words, 20)
        self.cs = constraint_set(attract=pairs[:10], repel=pairs[10:])
        self.seen = self.cs.words()
        self.cfg = ARConfig(batch_att=5, batch_rep=5, epochs=5, adagrad_lr=0.1, seed=5)
        yield

    @allure.title("Unseen words are preserved exactly and seen words have unit norm")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.property
    def test_preservation_and_norms(self):
        out = ar_specialise(self.space, self.cs, self.cfg)

        for word in self.space.words:
            if word in self.seen:
                self.assert_close(float(np.linalg.norm(out.vector(word))), 1.0, 1e-6)
            else:
                assert np.array_equal(out.vector(word), self.space.vector(word)), word

    @allure.title("Total cost drops over training")
    @pytest.mark.property
    def test_cost_decreases(self):
        start = unit_normalize(self.space)

        out = ar_specialise(self.space, self.cs, self.cfg)

        before = ar_total_cost(start, start, self.cs, self.cfg)
        after = ar_total_cost(out, start, self.cs, self.cfg)
        self.assert_less_than(after, before)

    @allure.title("Attract pairs get closer and repel pairs further apart on average")
    @pytest.mark.property
    def test_directions(self):
        out = ar_specialise(self.space, self.cs, self.cfg)

        def mean_cosine(space, pairs):
            return float(np.mean([cosine(space.vector(a), space.vector(b)) for a, b in pairs]))

        self.assert_greater_than(mean_cosine(out, self.cs.attract), mean_cosine(self.space, self.cs.attract))
        self.assert_less_than(mean_cosine(out, self.cs.repel), mean_cosine(self.space, self.cs.repel))

    @allure.title("The default hyperparameters also move attract and repel pairs the right way")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.property
    def test_directions_default_config(self):
        out = ar_specialise(self.space, self.cs, ARConfig(seed=5))

        def mean_cosine(space, pairs):
            return float(np.mean([cosine(space.vector(a), space.vector(b)) for a, b in pairs]))

        self.assert_greater_than(mean_cosine(out, self.cs.attract), mean_cosine(self.space, self.cs.attract))
        self.assert_less_than(mean_cosine(out, self.cs.repel), mean_cosine(self.space, self.cs.repel))
        for word in self.space.words:
            if word not in self.seen:
                assert np.array_equal(out.vector(word), self.space.vector(word)), word

    @allure.title("Identical seeds reproduce identical spaces")
    @pytest.mark.property
    def test_determinism(self):
        self.assert_equals(ar_specialise(self.space, self.cs, self.cfg), ar_specialise(self.space, self.cs, self.cfg))


@allure.feature("Properties")
@allure.story("Hold-out protocol")
class TestHoldoutProtocol(BaseTest):

    @allure.title("No surviving pair touches an evaluation word")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.property
    def test_holdout_disjoint(self):
        factory = SyntheticFactory(seed=6)
        words = factory.vocabulary(60)
        rng = np.random.default_rng(6)
        for _ in range(50):
            shuffled = [words[i] for i in rng.permutation(len(words))]
            cs = constraint_set(attract=factory.disjoint_pairs(shuffled[:20], 10),
                                repel=factory.disjoint_pairs(shuffled[20:40], 10))
            eval_words = frozenset(rng.choice(words, size=int(rng.integers(0, 30)), replace=False).tolist())

            filtered, removed = holdout_filter(cs, eval_words)

            assert not filtered.words() & eval_words
            assert removed + len(filtered) == len(cs)
            assert filtered.attract <= cs.attract and filtered.repel <= cs.repel
        self.log_test_step("50 random hold-out draws checked")
