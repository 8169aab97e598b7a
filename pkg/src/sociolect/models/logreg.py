import numpy as np

from scipy import sparse
from scipy.special import log_softmax, softmax
from typing import Optional
from sociolect.exc import ModelTrainingError, TrainingDivergedError
from sociolect.logger import logger
from sociolect.models.adam import AdamOptimizer
from sociolect.schemas.features import FeatureDoc
from sociolect.schemas.models import LRParams, TrainConfig
from sociolect.utils.decorators import log_elapsed_time


SparseCounts = dict[int, int]


def to_csr(docs: list[SparseCounts], vocab_size: int) -> sparse.csr_matrix:
    "Rows of raw counts; ids outside the vocabulary are an error"
    indptr, indices, data = [0], [], []
    for counts in docs:
        for idx, count in sorted(counts.items()):
            if not 0 <= idx < vocab_size:
                raise ValueError(f"feature id {idx} outside vocabulary of size {vocab_size}")
            indices.append(idx)
            data.append(float(count))
        indptr.append(len(indices))
    return sparse.csr_matrix(
        (np.array(data, dtype=float), np.array(indices, dtype=np.int64), np.array(indptr)),
        shape=(len(docs), vocab_size),
    )


def class_indices(labels: list[int]) -> np.ndarray:
    "Class ids 1..4 -> row indices 0..3"
    return np.asarray(labels, dtype=np.int64) - 1


def lr_objective(
    params: dict[str, np.ndarray], X: sparse.csr_matrix, y: np.ndarray, l2: float
) -> tuple[float, dict[str, np.ndarray]]:
    "Mean softmax cross-entropy + (l2/2)·‖W‖² and its gradient"
    weights, biases = params["weights"], params["biases"]
    n_docs = X.shape[0]
    logits = np.asarray(X @ weights.T) + biases
    log_probs = log_softmax(logits, axis=1)
    loss = -log_probs[np.arange(n_docs), y].mean() + 0.5 * l2 * float(np.sum(weights**2))

    d_logits = np.exp(log_probs)
    d_logits[np.arange(n_docs), y] -= 1.0
    d_logits /= n_docs
    grads = {
        "weights": np.asarray(X.T @ d_logits).T + l2 * weights,
        "biases": d_logits.sum(axis=0),
    }
    return float(loss), grads


def _sparse_input(doc) -> SparseCounts:
    return doc.sparse_counts if isinstance(doc, FeatureDoc) else doc


@log_elapsed_time
def lr_train(
    train: list[tuple[FeatureDoc | SparseCounts, int]],
    config: TrainConfig,
    vocab_size: Optional[int] = None,
) -> LRParams:
    """
    Multinomial logistic regression by mini-batch Adam from zero weights. Shuffling is seeded,
    so the result is a pure function of (data, config).
    """
    if not train:
        raise ModelTrainingError("Cannot train on an empty training set")
    docs = [_sparse_input(doc) for doc, _ in train]
    labels = [label for _, label in train]
    if len(set(labels)) < 2:
        raise ModelTrainingError("Training labels must span at least two classes")
    if vocab_size is None:
        vocab_size = 1 + max((max(doc, default=0) for doc in docs), default=0)

    X = to_csr(docs, vocab_size)
    y = class_indices(labels)
    params = LRParams.zeros(vocab_size)
    arrays = params.arrays()
    optimizer = AdamOptimizer(
        arrays, config.learning_rate, config.beta1, config.beta2, config.epsilon
    )
    rng = np.random.default_rng(config.seed)
    log = logger.bind(model="lr")

    for epoch in range(config.epochs):
        order = rng.permutation(len(docs))
        epoch_loss = 0.0
        for batch, start in enumerate(range(0, len(order), config.batch_size)):
            rows = order[start : start + config.batch_size]
            loss, grads = lr_objective(arrays, X[rows], y[rows], config.l2)
            if not np.isfinite(loss):
                raise TrainingDivergedError("Non-finite LR loss", epoch=epoch, batch=batch)
            optimizer.step(arrays, grads)
            epoch_loss += loss * len(rows)
        params.loss_history.append(epoch_loss / len(docs))
        log.debug(f"epoch {epoch + 1}/{config.epochs} loss {params.loss_history[-1]:.6f}")

    return params


def lr_predict(params: LRParams, doc: FeatureDoc | SparseCounts) -> np.ndarray:
    "softmax(Wx + b) over the four classes"
    logits = params.biases.copy()
    for idx, count in _sparse_input(doc).items():
        logits += params.weights[:, idx] * count
    return softmax(logits)


def lr_predict_classes(params: LRParams, docs: list[FeatureDoc | SparseCounts]) -> list[int]:
    X = to_csr([_sparse_input(doc) for doc in docs], params.vocab_size)
    logits = np.asarray(X @ params.weights.T) + params.biases
    return (np.argmax(logits, axis=1) + 1).tolist()


