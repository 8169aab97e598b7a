import json
import os
import numpy as np

from typing import Optional
from sociolect.exc import VocabularyMismatchError
from sociolect.schemas.constants.model_type import ModelType
from sociolect.schemas.models import CheckpointMeta, CNNParams, LRParams, TrainConfig


META_KEY = "__meta__"
HISTORY_KEY = "__loss_history__"
PARAM_CLASSES = {ModelType.LR: LRParams, ModelType.CNN: CNNParams}


def save_checkpoint(
    path: str,
    params: LRParams | CNNParams,
    vocab_digest: str,
    train_config: Optional[TrainConfig] = None,
) -> None:
    "Write tensors plus JSON metadata (format version, model, config, vocabulary digest)"
    model = ModelType.LR if isinstance(params, LRParams) else ModelType.CNN
    meta = CheckpointMeta(model=model.value, vocab_digest=vocab_digest, train_config=train_config)
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "wb") as handle:
        np.savez_compressed(
            handle,
            **{META_KEY: np.array(meta.json(sort_keys=True))},
            **{HISTORY_KEY: np.array(params.loss_history, dtype=float)},
            **params.arrays(),
        )


def load_checkpoint(
    path: str, vocab_digest: Optional[str] = None
) -> tuple[LRParams | CNNParams, CheckpointMeta]:
    "Load a checkpoint; refuses one built against a different vocabulary"
    with np.load(path, allow_pickle=False) as archive:
        meta = CheckpointMeta(**json.loads(str(archive[META_KEY])))
        if vocab_digest is not None and meta.vocab_digest != vocab_digest:
            raise VocabularyMismatchError(
                f"'{path}' was trained against vocabulary {meta.vocab_digest[:12]}, "
                f"not {vocab_digest[:12]}"
            )
        params_class = PARAM_CLASSES[ModelType(meta.model)]
        tensors = {name: archive[name] for name in params_class.tensor_names}
        history = archive[HISTORY_KEY].tolist()
    return params_class(**tensors, loss_history=history), meta
