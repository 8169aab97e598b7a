import numpy as np
import pytest

from collections import Counter
from sociolect.evaluation import evaluate
from sociolect.exc import ModelTrainingError, TrainingDivergedError, VocabularyMismatchError
from sociolect.models import (
    cnn_forward,
    cnn_predict,
    cnn_predict_classes,
    cnn_train,
    gradient_check,
    load_checkpoint,
    lr_predict,
    lr_predict_classes,
    lr_train,
    save_checkpoint,
)
from sociolect.models.adam import AdamOptimizer
from sociolect.models.cnn import cnn_objective, init_cnn_params, l2_penalty
from sociolect.models.logreg import lr_objective, to_csr
from sociolect.schemas.models import CNNParams, LRParams, TrainConfig


VOCAB_SIZE = 40
BACKGROUND = (5, VOCAB_SIZE)


def marker_corpus(n_docs: int, seed: int, length: int = 12):
    "Random background ids plus one marker id (1-4) naming the class"
    rng = np.random.default_rng(seed)
    docs = []
    for i in range(n_docs):
        label = i % 4 + 1
        sequence = rng.integers(*BACKGROUND, size=length).tolist()
        sequence.insert(int(rng.integers(0, length + 1)), label)
        docs.append((sequence, label))
    return docs


def sparse(docs):
    return [(dict(Counter(sequence)), label) for sequence, label in docs]


def small_cnn_config(**overrides) -> TrainConfig:
    settings = dict(
        learning_rate=0.01,
        l2=1e-4,
        dropout=0.0,
        epochs=20,
        batch_size=4,
        seed=0,
        d_emb=16,
        n_filters=16,
        window=2,
        d_hidden=16,
    )
    settings.update(overrides)
    return TrainConfig(**settings)


def test_train_config_rejects_unknown_and_invalid_values():
    with pytest.raises(ValueError):
        TrainConfig(dropout=1.0)
    with pytest.raises(ValueError):
        TrainConfig(hidden_size=3)


def test_adam_first_step_moves_by_learning_rate():
    params = {"w": np.array([1.0, -2.0, 0.5])}
    optimizer = AdamOptimizer(params, learning_rate=0.1)
    optimizer.step(params, {"w": np.array([3.0, -0.01, 0.2])})
    np.testing.assert_allclose(params["w"], [0.9, -1.9, 0.4], atol=1e-6)
    assert optimizer.state.t == 1


def test_lr_gradient_check():
    rng = np.random.default_rng(0)
    vocab_size, n_docs = 12, 8
    counts = [
        {int(i): int(c) for i, c in enumerate(rng.integers(0, 3, size=vocab_size)) if c}
        for _ in range(n_docs)
    ]
    X = to_csr(counts, vocab_size)
    y = rng.integers(0, 4, size=n_docs)
    params = {
        "weights": rng.normal(0.0, 0.1, size=(4, vocab_size)),
        "biases": rng.normal(0.0, 0.1, size=4),
    }
    error = gradient_check(lambda p: lr_objective(p, X, y, l2=0.01), params, floor=1e-6)
    assert error < 1e-4


def clear_of_relu_kinks(params: dict, batch, margin: float = 1e-3) -> bool:
    for sequence, _ in batch:
        _, cache = cnn_forward(params, sequence)
        if np.min(np.abs(cache["conv_pre"])) < margin:
            return False
        if np.min(np.abs(cache["hidden_pre"])) < margin:
            return False
    return True


def test_cnn_gradient_check():
    batch = [([1, 2, 3, 4], 1), ([5, 1, 1], 3), ([2, 5, 4, 3, 0], 4)]
    for seed in range(200):
        config = TrainConfig(d_emb=3, n_filters=4, window=2, d_hidden=3, seed=seed)
        params = init_cnn_params(6, config).arrays()
        if clear_of_relu_kinks(params, batch):
            break
    else:
        pytest.fail("no initialisation clear of ReLU kinks")

    error = gradient_check(lambda p: cnn_objective(p, batch, l2=0.01), params, floor=1e-6)
    assert error < 1e-4


def test_cnn_l2_skips_unk_embedding_row():
    params = init_cnn_params(5, TrainConfig(d_emb=2, n_filters=2, window=2, d_hidden=2)).arrays()
    grads = {name: np.zeros_like(value) for name, value in params.items()}
    l2_penalty(params, 0.5, grads)
    assert np.all(grads["embeddings"][0] == 0.0)
    np.testing.assert_allclose(grads["embeddings"][1:], 0.5 * params["embeddings"][1:])
    assert np.all(grads["conv_biases"] == 0.0)


def test_zero_models_predict_uniformly():
    lr = LRParams.zeros(VOCAB_SIZE)
    np.testing.assert_allclose(lr_predict(lr, {1: 3, 7: 1}), [0.25] * 4)

    cnn = CNNParams.zeros(VOCAB_SIZE, d_emb=4, n_filters=3, window=2, d_hidden=5)
    np.testing.assert_allclose(cnn_predict(cnn, [1, 2, 3]), [0.25] * 4)


def test_cnn_pads_short_sequences_and_rejects_empty_ones():
    params = init_cnn_params(VOCAB_SIZE, TrainConfig(d_emb=4, n_filters=3, window=3, d_hidden=5))
    probs, cache = cnn_forward(params, [7])
    assert cache["ids"].tolist() == [7, 0, 0]
    assert probs.sum() == pytest.approx(1.0)
    with pytest.raises(ValueError):
        cnn_forward(params, [])


def test_cnn_sum_pooling_counts_repeated_content():
    params = init_cnn_params(VOCAB_SIZE, TrainConfig(d_emb=4, n_filters=6, window=1, d_hidden=5))
    _, once = cnn_forward(params, [3, 8, 9])
    _, twice = cnn_forward(params, [3, 8, 9, 3, 8, 9])
    np.testing.assert_allclose(twice["pooled"], 2.0 * once["pooled"])


def test_cnn_sum_pooling_doubles_across_an_inactive_seam():
    params = init_cnn_params(VOCAB_SIZE, TrainConfig(d_emb=4, n_filters=6, window=3, d_hidden=5))
    params = params.arrays()
    params["embeddings"][0] = 0.0
    pad = [0, 0]
    sequence = pad + [3, 8, 9, 4] + pad
    _, once = cnn_forward(params, sequence)
    _, twice = cnn_forward(params, sequence + sequence)
    np.testing.assert_allclose(twice["pooled"], 2.0 * once["pooled"])


def test_cnn_train_mode_without_dropout_matches_eval_mode():
    params = init_cnn_params(VOCAB_SIZE, TrainConfig(d_emb=4, n_filters=6, window=2, d_hidden=5))
    sequence = [3, 8, 9, 4, 11]
    eval_probs, _ = cnn_forward(params, sequence)
    train_probs, cache = cnn_forward(
        params, sequence, train_mode=True, rng=np.random.default_rng(0), dropout=0.0
    )
    np.testing.assert_array_equal(train_probs, eval_probs)
    assert np.all(cache["mask"] == 1.0)


def test_cnn_train_mode_applies_inverted_dropout():
    params = init_cnn_params(VOCAB_SIZE, TrainConfig(d_emb=4, n_filters=6, window=2, d_hidden=5))
    sequence = [3, 8, 9, 4, 11]
    _, eval_cache = cnn_forward(params, sequence)
    assert np.any(eval_cache["pooled"] > 0.0)

    _, cache = cnn_forward(params, sequence, train_mode=True, rng=np.random.default_rng(0))
    keep = 1.0 - TrainConfig().dropout
    assert np.all(np.isin(cache["mask"], [0.0, 1.0 / keep]))
    np.testing.assert_allclose(cache["dropped"], cache["pooled"] * cache["mask"])
    assert not np.allclose(cache["dropped"], eval_cache["pooled"])
    with pytest.raises(ValueError):
        cnn_forward(params, sequence, train_mode=True)


def test_lr_predict_hand_computed():
    params = LRParams(
        weights=np.array([[1.0, 0.0], [0.0, 1.0], [2.0, -1.0], [0.0, 0.0]]),
        biases=np.array([0.0, 0.5, 0.0, -1.0]),
    )
    logits = [1.0, 2.5, 0.0, -1.0]  # x = (1, 2)
    expected = np.exp(logits) / np.sum(np.exp(logits))

    probs = lr_predict(params, {0: 1, 1: 2})
    np.testing.assert_allclose(probs, expected, rtol=0.0, atol=1e-9)
    assert probs.sum() == pytest.approx(1.0, abs=1e-9)


def test_lr_predict_is_shift_invariant():
    rng = np.random.default_rng(3)
    weights, biases = rng.normal(size=(4, 6)), rng.normal(size=4)
    doc = {0: 2, 3: 1, 5: 4}
    probs = lr_predict(LRParams(weights=weights, biases=biases), doc)

    shifted = LRParams(weights=weights + 3.7, biases=biases - 1.25)
    np.testing.assert_allclose(lr_predict(shifted, doc), probs, atol=1e-12)


def test_lr_reaches_marker_accuracy():
    train, test = sparse(marker_corpus(200, seed=1)), sparse(marker_corpus(200, seed=2))
    config = TrainConfig(learning_rate=0.1, epochs=20, batch_size=16, seed=0)
    params = lr_train(train, config, vocab_size=VOCAB_SIZE)

    preds = lr_predict_classes(params, [doc for doc, _ in test])
    report = evaluate(preds, [label for _, label in test])
    assert report.weighted_f1 >= 0.95
    assert len(params.loss_history) == config.epochs
    assert params.loss_history[-1] < params.loss_history[0]


def test_cnn_reaches_marker_accuracy():
    train, test = marker_corpus(200, seed=1), marker_corpus(200, seed=2)
    params = cnn_train(train, small_cnn_config(), vocab_size=VOCAB_SIZE)

    preds = cnn_predict_classes(params, [sequence for sequence, _ in test])
    report = evaluate(preds, [label for _, label in test])
    assert report.weighted_f1 >= 0.95


def test_cnn_training_is_deterministic():
    train = marker_corpus(24, seed=3)
    config = small_cnn_config(epochs=2, dropout=0.2)
    first = cnn_train(train, config, vocab_size=VOCAB_SIZE)
    second = cnn_train(train, config, vocab_size=VOCAB_SIZE)
    for name, values in first.arrays().items():
        np.testing.assert_array_equal(values, second.arrays()[name])
    assert first.loss_history == second.loss_history


def test_larger_l2_shrinks_lr_weights():
    train = sparse(marker_corpus(40, seed=4))

    def weight_norm(l2: float) -> float:
        config = TrainConfig(learning_rate=0.05, l2=l2, epochs=100, batch_size=8, seed=0)
        return float(np.linalg.norm(lr_train(train, config, vocab_size=VOCAB_SIZE).weights))

    assert weight_norm(0.1) < weight_norm(0.0)


def test_training_needs_two_classes():
    with pytest.raises(ModelTrainingError):
        lr_train([({1: 1}, 2), ({2: 1}, 2)], TrainConfig())
    with pytest.raises(ModelTrainingError):
        cnn_train([], TrainConfig())


def test_lr_divergence_is_reported(mocker):
    mocker.patch(
        "sociolect.models.logreg.lr_objective",
        return_value=(float("nan"), {"weights": np.zeros((4, 3)), "biases": np.zeros(4)}),
    )
    with pytest.raises(TrainingDivergedError) as e:
        lr_train([({1: 1}, 1), ({2: 1}, 2)], TrainConfig(), vocab_size=3)
    assert (e.value.epoch, e.value.batch) == (0, 0)


def test_checkpoint_restores_parameters(tmp_path):
    train = sparse(marker_corpus(16, seed=5))
    config = TrainConfig(epochs=2, seed=9)
    params = lr_train(train, config, vocab_size=VOCAB_SIZE)
    path = str(tmp_path / "models" / "lr.npz")
    save_checkpoint(path, params, vocab_digest="abc", train_config=config)

    loaded, meta = load_checkpoint(path, vocab_digest="abc")
    assert isinstance(loaded, LRParams)
    np.testing.assert_array_equal(loaded.weights, params.weights)
    assert loaded.loss_history == params.loss_history
    assert (meta.model, meta.format_version, meta.train_config) == ("lr", 1, config)

    with pytest.raises(VocabularyMismatchError):
        load_checkpoint(path, vocab_digest="def")


def test_cnn_checkpoint_predicts_the_same(tmp_path):
    params = init_cnn_params(VOCAB_SIZE, TrainConfig(d_emb=4, n_filters=3, window=2, d_hidden=5))
    path = str(tmp_path / "cnn.npz")
    save_checkpoint(path, params, vocab_digest="abc")
    loaded, meta = load_checkpoint(path)
    assert meta.model == "cnn"
    np.testing.assert_array_equal(cnn_predict(loaded, [1, 2, 3]), cnn_predict(params, [1, 2, 3]))
