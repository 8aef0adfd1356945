"""
Mapping Network Test Cases: activations, initialisers, forward pass, objectives, model files
"""
import json

import allure
import numpy as np
import pytest

from core.base.base_test import BaseTest
from core.enums.activation import Activation, InitScheme
from core.enums.model_kind import ModelKind
from core.mapping.activations import he_init, relu, swish, swish_grad, xavier_init
from core.mapping.losses import hinge_loss, mm_loss, mm_loss_and_grad, mse_loss
from core.mapping.mapping_net import MappingModel
from core.mapping.model_io import load_model, save_model


@allure.feature("Mapping Network")
@allure.story("Activations and initialisation")
class TestActivations(BaseTest):

    @allure.title("Swish values")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    @pytest.mark.unit
    def test_swish(self):
        values = swish(np.array([0.0, 1.0, -1.0]))

        self.assert_arrays_close(values, np.array([0.0, 0.731059, -0.268941]), 1e-6)

    @allure.title("Swish derivative at zero is one half")
    @pytest.mark.unit
    def test_swish_grad(self):
        self.assert_close(float(swish_grad(np.array(0.0))), 0.5, 1e-12)

    @allure.title("ReLU clips negatives")
    @pytest.mark.unit
    def test_relu(self):
        self.assert_arrays_close(relu(np.array([-2.0, 0.0, 3.0])), np.array([0.0, 0.0, 3.0]))

    @allure.title("He normal draw has mean 0 and variance 2/fan_in")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.unit
    def test_he_statistics(self):
        weights = he_init(512, 512, np.random.default_rng(0))

        self.assert_equals(weights.shape, (512, 512))
        self.assert_close(float(weights.mean()), 0.0, 0.01)
        self.assert_close(float(weights.var()), 2.0 / 512, 0.2 * 2.0 / 512)

    @allure.title("Same seed gives the same initial weights")
    @pytest.mark.unit
    def test_init_determinism(self):
        first = he_init(8, 4, np.random.default_rng(11))
        second = he_init(8, 4, np.random.default_rng(11))

        self.assert_true(np.array_equal(first, second))
        self.assert_equals(xavier_init(8, 4, np.random.default_rng(1)).shape, (4, 8))

    @allure.title("Layer sizes below one are rejected")
    @pytest.mark.unit
    def test_invalid_sizes(self):
        with pytest.raises(ValueError):
            he_init(0, 3, np.random.default_rng(0))


@allure.feature("Mapping Network")
@allure.story("Forward pass")
class TestMappingModel(BaseTest):

    @allure.title("Identity linear map returns its input")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    @pytest.mark.unit
    def test_identity_linear(self):
        model = MappingModel.build(ModelKind.LINEAR, 3)
        x = np.array([0.5, -1.0, 2.0])

        self.assert_arrays_close(model.forward(x), x)
        self.assert_equals(len(model.parameters()), 1)

    @allure.title("All-zero network outputs the output bias")
    @pytest.mark.unit
    def test_zero_network(self):
        bias = np.array([1.0, -2.0, 0.5])
        model = MappingModel(ModelKind.DFFN, [np.zeros((4, 3)), np.zeros((3, 4))], [np.zeros(4), bias])

        self.assert_arrays_close(model.forward(np.array([3.0, 1.0, -7.0])), bias)

    @allure.title("A network without hidden layers is an affine map")
    @pytest.mark.unit
    def test_zero_hidden_layers(self):
        model = MappingModel.build(ModelKind.DFFN, 3, hidden_layers=0, rng=np.random.default_rng(2))
        model.biases[0][:] = [0.1, 0.2, 0.3]
        x = np.array([1.0, 2.0, 3.0])

        self.assert_equals(model.hidden_layers, 0)
        self.assert_arrays_close(model.forward(x), model.weights[0] @ x + model.biases[0], 1e-12)

    @allure.title("Built networks have H hidden layers of the requested width")
    @pytest.mark.unit
    def test_build_shapes(self):
        model = MappingModel.build(ModelKind.DFFN, 6, hidden_layers=2, hidden_width=10,
                                   init=InitScheme.XAVIER, rng=np.random.default_rng(0))

        self.assert_equals([w.shape for w in model.weights], [(10, 6), (10, 10), (6, 10)])
        self.assert_true(all(not b.any() for b in model.biases), "biases start at zero")

    @allure.title("Dimension mismatch is rejected")
    @pytest.mark.unit
    def test_dimension_mismatch(self):
        model = MappingModel.build(ModelKind.LINEAR, 3)

        with pytest.raises(ValueError, match="Dimension mismatch"):
            model.forward(np.ones(4))

    @allure.title("Inconsistent layer definitions are rejected")
    @pytest.mark.unit
    def test_invalid_layers(self):
        with pytest.raises(ValueError):
            MappingModel(ModelKind.LINEAR, [np.eye(2)], [np.zeros(2)])
        with pytest.raises(ValueError):
            MappingModel(ModelKind.DFFN, [np.zeros((4, 3)), np.zeros((3, 5))], [np.zeros(4), np.zeros(3)])

    @allure.title("Copies do not share weights")
    @pytest.mark.unit
    def test_copy(self):
        model = MappingModel.build(ModelKind.DFFN, 3, hidden_layers=1, hidden_width=4,
                                   activation=Activation.RELU, rng=np.random.default_rng(0))
        clone = model.copy()
        clone.weights[0][0, 0] += 1.0

        self.assert_true(model.weights[0][0, 0] != clone.weights[0][0, 0])
        self.assert_equals(clone.activation, Activation.RELU)


@allure.feature("Mapping Network")
@allure.story("Objectives")
class TestLosses(BaseTest):

    @allure.title("MSE examples")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    @pytest.mark.unit
    def test_mse(self):
        target = np.array([[1.0, 1.0]])

        self.assert_close(mse_loss(target, target), 0.0)
        self.assert_close(mse_loss(np.array([[1.3, 1.4]]), target), 0.25, 1e-12)
        doubled = mse_loss(np.array([[1.3, 1.4], [1.3, 1.4]]), np.array([[1.0, 1.0], [1.0, 1.0]]))
        self.assert_close(doubled, 0.25, 1e-12, "mean reduction is invariant to duplication")
        self.assert_close(mse_loss(np.array([[1.3, 1.4]]), target, sum_reduction=True), 0.25, 1e-12)

    @allure.title("Max-margin examples")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.unit
    def test_mm(self):
        e1, e2 = np.array([[1.0, 0.0]]), np.array([[0.0, 1.0]])

        self.assert_close(mm_loss(e1, e1, e2[:, None, :], 0.6), 0.0)
        self.assert_close(mm_loss(e1, e2, e1[:, None, :], 0.6), 1.6, 1e-12)
        self.assert_close(mm_loss(np.array([[0.3, 0.9]]), e2, np.stack([e2, e2], axis=1), 0.0), 0.0, 1e-12)

    @allure.title("Zero-norm prediction contributes delta per negative")
    @pytest.mark.unit
    def test_mm_zero_vector(self):
        loss = mm_loss(np.zeros((1, 2)), np.array([[1.0, 0.0]]), np.array([[[0.0, 1.0], [1.0, 1.0]]]), 0.6)

        self.assert_close(loss, 1.2, 1e-12)

    @allure.title("Zero-norm target contributes delta per negative with no gradient")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.unit
    def test_mm_zero_target(self):
        pred, target = np.array([[1.0, 0.0]]), np.zeros((1, 2))

        loss, grad = mm_loss_and_grad(pred, target, np.array([[[1.0, 0.1]]]), 0.6)

        self.assert_close(loss, 0.6, 1e-12, "the similar negative must not lift the term above delta")
        self.assert_arrays_close(grad, np.zeros((1, 2)))
        self.assert_close(mm_loss(pred, target, np.array([[[-1.0, 0.0], [0.0, 1.0]]]), 0.6), 1.2, 1e-12)

    @allure.title("Hinge examples")
    @pytest.mark.unit
    def test_hinge(self):
        e1, e2 = np.array([[1.0, 0.0]]), np.array([[0.0, 1.0]])

        self.assert_close(hinge_loss(e1, e1, 1.0), 0.0)
        self.assert_close(hinge_loss(e1, e2, 1.0), 1.0)
        self.assert_close(hinge_loss(np.array([[1.0, 1.0]]), e1, 0.0), 0.0)

    @allure.title("Shape mismatch is rejected")
    @pytest.mark.unit
    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            mse_loss(np.zeros((2, 3)), np.zeros((2, 2)))
        with pytest.raises(ValueError):
            mm_loss(np.zeros((2, 3)), np.zeros((2, 3)), np.zeros((1, 4, 3)))


@allure.feature("Mapping Network")
@allure.story("Model files")
class TestModelFiles(BaseTest):

    @allure.title("Saved models reload with identical weights")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.unit
    def test_save_load(self, tmp_path):
        model = MappingModel.build(ModelKind.DFFN, 4, hidden_layers=2, hidden_width=5, rng=np.random.default_rng(3))

        loaded = load_model(save_model(model, tmp_path / "model.npz"))

        self.assert_equals(loaded.kind, ModelKind.DFFN)
        for expected, actual in zip(model.parameters(), loaded.parameters()):
            self.assert_true(np.array_equal(expected, actual))

    @allure.title("Linear models keep their bias-free form")
    @pytest.mark.unit
    def test_save_load_linear(self, tmp_path):
        model = MappingModel.linear(np.array([[2.0, 0.5], [0.0, 1.0]]))

        loaded = load_model(save_model(model, tmp_path / "linear.npz"))

        self.assert_equals(loaded.biases, [None])
        self.assert_true(np.array_equal(loaded.weights[0], model.weights[0]))

    @allure.title("Unknown format versions are rejected")
    @pytest.mark.unit
    def test_bad_version(self, tmp_path):
        path = tmp_path / "future.npz"
        meta = {"format_version": 99, "kind": "linear", "activation": "swish", "dim": 2,
                "layers": [{"weight": [2, 2], "bias": False}]}
        with open(path, "wb") as handle:
            np.savez(handle, meta=np.array(json.dumps(meta)), weight_0=np.eye(2))

        with pytest.raises(ValueError, match="version 99"):
            load_model(path)

    @allure.title("Missing model files raise FileNotFoundError")
    @pytest.mark.unit
    def test_missing(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_model(tmp_path / "absent.npz")
