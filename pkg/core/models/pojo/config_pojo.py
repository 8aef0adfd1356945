"""
Stage Configuration Models
"""
from pydantic import BaseModel, ConfigDict, Field

from core.enums.activation import Activation, InitScheme
from core.enums.model_kind import ModelKind
from core.enums.objective import Objective
from core.enums.post_processor import PostProcessorType


class ARConfig(BaseModel):
    """ATTRACT-REPEL hyperparameters"""
    model_config = ConfigDict(frozen=True)

    delta_att: float = Field(0.6, ge=0)
    delta_rep: float = Field(0.0, ge=0)
    lambda_reg: float = Field(1e-9, ge=0)
    batch_att: int = Field(50, ge=1)
    batch_rep: int = Field(50, ge=1)
    epochs: int = Field(5, ge=1)
    adagrad_lr: float = Field(0.05, gt=0)
    adagrad_initial_accumulator: float = Field(0.1, gt=0)
    seed: int = 42


class RetrofitConfig(BaseModel):
    """Retrofitting baseline settings"""
    model_config = ConfigDict(frozen=True)

    iterations: int = Field(10, ge=0)


class MapTrainConfig(BaseModel):
    """Architecture and training settings for the specialisation function f"""
    model_config = ConfigDict(frozen=True)

    objective: Objective = Objective.MM
    delta_mm: float = Field(0.6, ge=0)
    k_neg: int = Field(25, ge=1)
    epochs: int = Field(100, ge=1)
    validation_fraction: float = Field(0.1, gt=0, lt=1)
    patience: int = Field(10, ge=1)
    learning_rate: float = Field(1e-3, gt=0)
    beta1: float = Field(0.9, ge=0, lt=1)
    beta2: float = Field(0.999, ge=0, lt=1)
    adam_epsilon: float = Field(1e-8, gt=0)
    batch_size: int = Field(128, ge=1)
    hidden_layers: int = Field(5, ge=0)
    hidden_width: int = Field(512, ge=1)
    activation: Activation = Activation.SWISH
    init: InitScheme = InitScheme.HE
    sum_reduction: bool = False
    seed: int = 42


class PipelineConfig(BaseModel):
    """Composition of post-processor, mapping and final-space assembly"""
    model_config = ConfigDict(frozen=True)

    ar: ARConfig = Field(default_factory=ARConfig)
    retrofit: RetrofitConfig = Field(default_factory=RetrofitConfig)
    map: MapTrainConfig = Field(default_factory=MapTrainConfig)
    model_kind: ModelKind = ModelKind.DFFN
    post_processor: PostProcessorType = PostProcessorType.AR
    map_all: bool = False
    normalize_input: bool = True
