"""
Sequence CNN: embedding -> 1-D convolution (valid positions, ReLU) -> sum pooling ->
inverted dropout -> hidden ReLU layer -> softmax over the four classes.
Forward and backward passes are written out in numpy so the gradient can be checked
against finite differences.
"""

import numpy as np

from numpy.lib.stride_tricks import sliding_window_view
from scipy.special import log_softmax
from typing import Optional
from sociolect.exc import ModelTrainingError, TrainingDivergedError
from sociolect.features.vocabulary import UNK_ID
from sociolect.logger import logger
from sociolect.models.adam import AdamOptimizer
from sociolect.models.logreg import class_indices
from sociolect.schemas.features import FeatureDoc
from sociolect.schemas.models import N_CLASSES, CNNParams, TrainConfig
from sociolect.utils.decorators import log_elapsed_time


# L2 applies to weight matrices only; row UNK_ID of the embeddings is exempt
L2_PARAMS = ("embeddings", "conv_filters", "hidden_weights", "output_weights")
DEFAULT_DROPOUT = TrainConfig.__fields__["dropout"].default

Sequence = list[int]


def _ids(seq) -> np.ndarray:
    return np.asarray(seq.sequence if isinstance(seq, FeatureDoc) else seq, dtype=np.int64)


def glorot_uniform(
    rng: np.random.Generator, shape: tuple[int, ...], fan_in: int, fan_out: int
) -> np.ndarray:
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape)


def init_cnn_params(vocab_size: int, config: TrainConfig) -> CNNParams:
    "Glorot-uniform weights and zero biases, drawn from `config.seed`"
    rng = np.random.default_rng(config.seed)
    d_emb, n_filters, window, d_hidden = (
        config.d_emb,
        config.n_filters,
        config.window,
        config.d_hidden,
    )
    return CNNParams(
        # embedding rows are scaled by their own width, not by the vocabulary size
        embeddings=glorot_uniform(rng, (vocab_size, d_emb), d_emb, d_emb),
        conv_filters=glorot_uniform(rng, (n_filters, window, d_emb), window * d_emb, n_filters),
        conv_biases=np.zeros(n_filters),
        hidden_weights=glorot_uniform(rng, (d_hidden, n_filters), n_filters, d_hidden),
        hidden_biases=np.zeros(d_hidden),
        output_weights=glorot_uniform(rng, (N_CLASSES, d_hidden), d_hidden, N_CLASSES),
        output_biases=np.zeros(N_CLASSES),
    )


def cnn_forward(
    params: CNNParams | dict[str, np.ndarray],
    seq: Sequence | FeatureDoc,
    train_mode: bool = False,
    rng: Optional[np.random.Generator] = None,
    dropout: float = DEFAULT_DROPOUT,
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    "Class probabilities and the intermediates the backward pass needs; dropout is train-mode only"
    p = params.arrays() if isinstance(params, CNNParams) else params
    ids = _ids(seq)
    if ids.size == 0:
        raise ValueError("cnn_forward needs a non-empty sequence")

    n_filters, window, d_emb = p["conv_filters"].shape
    if ids.size < window:
        ids = np.concatenate([ids, np.full(window - ids.size, UNK_ID, dtype=np.int64)])

    embedded = p["embeddings"][ids]  # [L x d_emb]
    # [P x d_emb x window] -> [P x window*d_emb], window-major like conv_filters
    windows = sliding_window_view(embedded, window, axis=0).transpose(0, 2, 1)
    windows = windows.reshape(-1, window * d_emb)
    filters = p["conv_filters"].reshape(n_filters, window * d_emb)

    conv_pre = windows @ filters.T + p["conv_biases"]  # [P x n_filters]
    pooled = np.maximum(conv_pre, 0.0).sum(axis=0)

    mask = np.ones(n_filters)
    if train_mode and dropout > 0.0:
        if rng is None:
            raise ValueError("train-mode dropout needs a random generator")
        keep = 1.0 - dropout
        mask = (rng.random(n_filters) < keep) / keep
    dropped = pooled * mask

    hidden_pre = p["hidden_weights"] @ dropped + p["hidden_biases"]
    hidden = np.maximum(hidden_pre, 0.0)
    logits = p["output_weights"] @ hidden + p["output_biases"]
    log_probs = log_softmax(logits)

    cache = dict(
        ids=ids,
        windows=windows,
        conv_pre=conv_pre,
        pooled=pooled,
        mask=mask,
        dropped=dropped,
        hidden_pre=hidden_pre,
        hidden=hidden,
        log_probs=log_probs,
    )
    return np.exp(log_probs), cache


def cnn_backward(
    params: dict[str, np.ndarray],
    cache: dict[str, np.ndarray],
    label_index: int,
    grads: dict[str, np.ndarray],
) -> None:
    "Accumulate the cross-entropy gradient of one example into `grads`"
    n_filters, window, d_emb = params["conv_filters"].shape

    d_logits = np.exp(cache["log_probs"])
    d_logits[label_index] -= 1.0
    grads["output_weights"] += np.outer(d_logits, cache["hidden"])
    grads["output_biases"] += d_logits

    d_hidden_pre = (params["output_weights"].T @ d_logits) * (cache["hidden_pre"] > 0)
    grads["hidden_weights"] += np.outer(d_hidden_pre, cache["dropped"])
    grads["hidden_biases"] += d_hidden_pre

    d_pooled = (params["hidden_weights"].T @ d_hidden_pre) * cache["mask"]
    d_conv_pre = (cache["conv_pre"] > 0) * d_pooled  # sum pooling broadcasts to positions
    grads["conv_filters"] += (d_conv_pre.T @ cache["windows"]).reshape(n_filters, window, d_emb)
    grads["conv_biases"] += d_conv_pre.sum(axis=0)

    d_windows = (d_conv_pre @ params["conv_filters"].reshape(n_filters, -1)).reshape(
        -1, window, d_emb
    )
    positions = d_windows.shape[0]
    d_embedded = np.zeros((cache["ids"].size, d_emb))
    for offset in range(window):
        d_embedded[offset : offset + positions] += d_windows[:, offset, :]
    np.add.at(grads["embeddings"], cache["ids"], d_embedded)


def l2_penalty(params: dict[str, np.ndarray], l2: float, grads: Optional[dict] = None) -> float:
    "(l2/2)·Σ‖W‖² over weight matrices; adds l2·W to `grads` when given"
    penalty = 0.0
    for name in L2_PARAMS:
        weights = params[name]
        if name == "embeddings":
            penalty += float(np.sum(weights[UNK_ID + 1 :] ** 2))
            if grads is not None:
                grads[name][UNK_ID + 1 :] += l2 * weights[UNK_ID + 1 :]
        else:
            penalty += float(np.sum(weights**2))
            if grads is not None:
                grads[name] += l2 * weights
    return 0.5 * l2 * penalty


def cnn_objective(
    params: dict[str, np.ndarray],
    batch: list[tuple[Sequence, int]],
    l2: float,
    dropout: float = 0.0,
    rng: Optional[np.random.Generator] = None,
) -> tuple[float, dict[str, np.ndarray]]:
    "Mean cross-entropy over `batch` + L2, with its gradient"
    grads = {name: np.zeros_like(value) for name, value in params.items()}
    loss = 0.0
    for seq, label in batch:
        label_index = int(class_indices([label])[0])
        _, cache = cnn_forward(params, seq, train_mode=dropout > 0, rng=rng, dropout=dropout)
        loss -= float(cache["log_probs"][label_index])
        cnn_backward(params, cache, label_index, grads)
    for grad in grads.values():
        grad /= len(batch)
    loss = loss / len(batch) + l2_penalty(params, l2, grads)
    return loss, grads


@log_elapsed_time
def cnn_train(
    train: list[tuple[Sequence | FeatureDoc, int]],
    config: TrainConfig,
    vocab_size: Optional[int] = None,
) -> CNNParams:
    """
    Mini-batch Adam over the sequence CNN. Examples in a batch are accumulated in a fixed
    order and all randomness derives from `config.seed`, so reruns are bitwise identical.
    """
    if not train:
        raise ModelTrainingError("Cannot train on an empty training set")
    sequences = [_ids(seq)[: config.max_seq_len] for seq, _ in train]
    labels = [label for _, label in train]
    if len(set(labels)) < 2:
        raise ModelTrainingError("Training labels must span at least two classes")
    if any(seq.size == 0 for seq in sequences):
        raise ModelTrainingError("Training sequences must be non-empty")
    if vocab_size is None:
        vocab_size = 1 + max(int(seq.max()) for seq in sequences)

    params = init_cnn_params(vocab_size, config)
    arrays = params.arrays()
    optimizer = AdamOptimizer(
        arrays, config.learning_rate, config.beta1, config.beta2, config.epsilon
    )
    rng = np.random.default_rng([config.seed, 1])
    log = logger.bind(model="cnn")

    for epoch in range(config.epochs):
        order = rng.permutation(len(sequences))
        epoch_loss = 0.0
        for batch, start in enumerate(range(0, len(order), config.batch_size)):
            rows = order[start : start + config.batch_size]
            loss, grads = cnn_objective(
                arrays,
                [(sequences[row], labels[row]) for row in rows],
                config.l2,
                dropout=config.dropout,
                rng=rng,
            )
            if not np.isfinite(loss) or not all(np.all(np.isfinite(g)) for g in grads.values()):
                raise TrainingDivergedError("Non-finite CNN loss", epoch=epoch, batch=batch)
            optimizer.step(arrays, grads)
            epoch_loss += loss * len(rows)
        params.loss_history.append(epoch_loss / len(sequences))
        log.debug(f"epoch {epoch + 1}/{config.epochs} loss {params.loss_history[-1]:.6f}")

    return params


def cnn_predict(params: CNNParams, seq: Sequence | FeatureDoc) -> np.ndarray:
    probs, _ = cnn_forward(params, seq)
    return probs


def cnn_predict_classes(params: CNNParams, seqs: list[Sequence | FeatureDoc]) -> list[int]:
    return [int(np.argmax(cnn_predict(params, seq))) + 1 for seq in seqs]
