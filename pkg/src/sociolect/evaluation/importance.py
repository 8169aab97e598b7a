import numpy as np

from sociolect.features.ngrams import is_word_unigram
from sociolect.features.vocabulary import UNK_ID, Vocabulary
from sociolect.logger import logger
from sociolect.schemas.evaluation import CLASS_IDS
from sociolect.schemas.models import LRParams


def top_features(
    params: LRParams,
    vocab: Vocabulary,
    k: int,
    word_unigrams_only: bool = False,
    by_magnitude: bool = False,
) -> dict[int, list[str]]:
    """
    Per class, the k symbols with the largest weight (or largest |weight| with
    `by_magnitude`); ties go to the smaller symbol.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if params.vocab_size != len(vocab):
        raise ValueError(
            f"LR weights cover {params.vocab_size} features, vocabulary has {len(vocab)}"
        )

    candidates = [
        idx
        for idx in range(len(vocab))
        if idx != UNK_ID and (not word_unigrams_only or is_word_unigram(vocab.symbol_of(idx)))
    ]
    if k > len(candidates):
        logger.warning(f"Requested top {k} features, only {len(candidates)} available")

    ranked = {}
    for row, class_id in enumerate(CLASS_IDS):
        weights = params.weights[row]
        scores = np.abs(weights) if by_magnitude else weights
        order = sorted(candidates, key=lambda idx: (-scores[idx], vocab.symbol_of(idx)))
        ranked[class_id] = [vocab.symbol_of(idx) for idx in order[:k]]
    return ranked


def write_top_features_tsv(path: str, cells: dict[str, dict[int, list[str]]]) -> None:
    "cell, class, rank, symbol"
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("cell\tclass\trank\tsymbol\n")
        for cell in sorted(cells):
            for class_id, symbols in sorted(cells[cell].items()):
                for rank, symbol in enumerate(symbols, start=1):
                    handle.write(f"{cell}\t{'$' * class_id}\t{rank}\t{symbol}\n")
