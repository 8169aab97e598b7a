import numpy as np
import pydantic as pyd

from typing import ClassVar, Optional


N_CLASSES = 4


class TrainConfig(pyd.BaseModel):
    learning_rate: pyd.confloat(gt=0.0) = 0.001
    l2: pyd.confloat(ge=0.0) = 1e-4
    dropout: pyd.confloat(ge=0.0, lt=1.0) = 0.2
    epochs: pyd.conint(ge=1) = 20
    batch_size: pyd.conint(ge=1) = 16
    seed: int = 42
    d_emb: pyd.conint(ge=1) = 64
    n_filters: pyd.conint(ge=1) = 128
    window: pyd.conint(ge=1) = 3
    d_hidden: pyd.conint(ge=1) = 64
    max_seq_len: pyd.conint(ge=1) = 5000
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8

    class Config:
        extra = "forbid"


class _Params(pyd.BaseModel):
    tensor_names: ClassVar[tuple[str, ...]] = ()
    loss_history: list[float] = pyd.Field(default_factory=list)

    class Config:
        arbitrary_types_allowed = True

    def arrays(self) -> dict[str, np.ndarray]:
        "Name -> tensor, in a fixed order"
        return {name: getattr(self, name) for name in self.tensor_names}

    @pyd.root_validator(skip_on_failure=True)
    def finite_entries(cls, values: dict) -> dict:
        for name in cls.tensor_names:
            if not np.all(np.isfinite(values[name])):
                raise ValueError(f"'{name}' holds non-finite entries")
        return values


class LRParams(_Params):
    tensor_names: ClassVar[tuple[str, ...]] = ("weights", "biases")
    weights: np.ndarray  # [4 x |V|]
    biases: np.ndarray  # [4]

    @classmethod
    def zeros(cls, vocab_size: int) -> "LRParams":
        return cls(weights=np.zeros((N_CLASSES, vocab_size)), biases=np.zeros(N_CLASSES))

    @property
    def vocab_size(self) -> int:
        return self.weights.shape[1]


class CNNParams(_Params):
    tensor_names: ClassVar[tuple[str, ...]] = (
        "embeddings",
        "conv_filters",
        "conv_biases",
        "hidden_weights",
        "hidden_biases",
        "output_weights",
        "output_biases",
    )
    embeddings: np.ndarray  # [|V| x d_emb]
    conv_filters: np.ndarray  # [n_filters x window x d_emb]
    conv_biases: np.ndarray  # [n_filters]
    hidden_weights: np.ndarray  # [d_hidden x n_filters]
    hidden_biases: np.ndarray  # [d_hidden]
    output_weights: np.ndarray  # [4 x d_hidden]
    output_biases: np.ndarray  # [4]

    @pyd.root_validator(skip_on_failure=True)
    def shapes_consistent(cls, values: dict) -> dict:
        n_filters, _, d_emb = values["conv_filters"].shape
        d_hidden = values["hidden_weights"].shape[0]
        if (
            values["embeddings"].shape[1] != d_emb
            or values["conv_biases"].shape != (n_filters,)
            or values["hidden_weights"].shape != (d_hidden, n_filters)
            or values["hidden_biases"].shape != (d_hidden,)
            or values["output_weights"].shape != (N_CLASSES, d_hidden)
            or values["output_biases"].shape != (N_CLASSES,)
        ):
            raise ValueError("CNN parameter shapes are inconsistent")
        return values

    @classmethod
    def zeros(
        cls, vocab_size: int, d_emb: int, n_filters: int, window: int, d_hidden: int
    ) -> "CNNParams":
        return cls(
            embeddings=np.zeros((vocab_size, d_emb)),
            conv_filters=np.zeros((n_filters, window, d_emb)),
            conv_biases=np.zeros(n_filters),
            hidden_weights=np.zeros((d_hidden, n_filters)),
            hidden_biases=np.zeros(d_hidden),
            output_weights=np.zeros((N_CLASSES, d_hidden)),
            output_biases=np.zeros(N_CLASSES),
        )

    @property
    def window(self) -> int:
        return self.conv_filters.shape[1]

    @property
    def vocab_size(self) -> int:
        return self.embeddings.shape[0]


class CheckpointMeta(pyd.BaseModel):
    format_version: int = 1
    model: str
    vocab_digest: str
    train_config: Optional[TrainConfig] = None
