"""
Model files: a numpy .npz container holding the layer arrays plus a JSON metadata
entry (format version, kind, activation, layer shapes). Writes are atomic.
"""
import json
import logging
from pathlib import Path
from typing import Union

import numpy as np

from core.constants.error_messages import ErrorMessages
from core.mapping.mapping_net import MappingModel
from core.utils.file_utility import FileUtility

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def save_model(model: MappingModel, path: Union[str, Path]) -> Path:
    """Write model to path; float64 arrays make the round trip exact"""
    meta = {
        "format_version": FORMAT_VERSION,
        "kind": model.kind.value,
        "activation": model.activation.value,
        "dim": model.dim,
        "layers": [
            {"weight": list(w.shape), "bias": b is not None}
            for w, b in zip(model.weights, model.biases)
        ],
    }
    arrays = {"meta": np.array(json.dumps(meta))}
    for i, (w, b) in enumerate(zip(model.weights, model.biases)):
        arrays[f"weight_{i}"] = w
        if b is not None:
            arrays[f"bias_{i}"] = b
    with FileUtility.atomic_open(path, 'wb') as handle:
        np.savez(handle, **arrays)
    logger.info(f"Saved {model!r} to {path}")
    return Path(path)


def load_model(path: Union[str, Path]) -> MappingModel:
    """
    Read a model written by save_model

    Raises:
        FileNotFoundError: If the file is missing
        ValueError: On an unknown format version or inconsistent shapes
    """
    path = FileUtility.require_file(path)
    with np.load(path, allow_pickle=False) as data:
        meta = json.loads(str(data["meta"]))
        version = meta.get("format_version")
        if version != FORMAT_VERSION:
            raise ValueError(ErrorMessages.UNSUPPORTED_MODEL_VERSION.format(version=version, file_path=path))
        weights, biases = [], []
        for i, layer in enumerate(meta["layers"]):
            weights.append(np.array(data[f"weight_{i}"]))
            biases.append(np.array(data[f"bias_{i}"]) if layer["bias"] else None)
    model = MappingModel(meta["kind"], weights, biases, meta["activation"])
    logger.info(f"Loaded {model!r} from {path}")
    return model
