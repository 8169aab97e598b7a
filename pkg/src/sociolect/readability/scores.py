import numpy as np

from collections import defaultdict
from typing import Optional
from sociolect.exc import UndefinedScoreError
from sociolect.logger import logger
from sociolect.readability.stats import text_stats
from sociolect.schemas.evaluation import CLASS_IDS
from sociolect.schemas.labeling import LabeledDocument
from sociolect.schemas.readability import METRICS, ReadabilityScores, TextStats


DALE_CHALL_ADJUSTMENT = 3.6365
DALE_CHALL_DIFFICULT_PCT = 5.0
LINSEAR_CUTOFF = 20.0


def compute_readability(stats: TextStats) -> ReadabilityScores:
    """
    The eight readability indices. Linsear Write is computed over the whole text rather than
    a 100-word sample.
    """
    if stats.words == 0 or stats.sentences == 0:
        raise UndefinedScoreError(
            f"Readability is undefined for {stats.words} words in {stats.sentences} sentences"
        )
    words_per_sentence = stats.words / stats.sentences
    syllables_per_word = stats.syllables / stats.words
    letters_per_100 = 100.0 * stats.letters / stats.words
    sentences_per_100 = 100.0 * stats.sentences / stats.words
    complex_pct = 100.0 * stats.complex_words / stats.words
    difficult_pct = 100.0 * stats.difficult_words / stats.words

    dale_chall = 0.1579 * difficult_pct + 0.0496 * words_per_sentence
    if difficult_pct > DALE_CHALL_DIFFICULT_PCT:
        dale_chall += DALE_CHALL_ADJUSTMENT

    linsear_raw = (stats.easy_words + 3.0 * stats.complex_words) / stats.sentences
    linsear = linsear_raw / 2.0 if linsear_raw > LINSEAR_CUTOFF else (linsear_raw - 2.0) / 2.0

    return ReadabilityScores(
        ari=4.71 * (stats.characters / stats.words) + 0.5 * words_per_sentence - 21.43,
        coleman_liau=0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8,
        dale_chall=dale_chall,
        flesch_kincaid=0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59,
        flesch_reading=206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word,
        gunning_fog=0.4 * (words_per_sentence + complex_pct),
        linsear=linsear,
        lix=words_per_sentence + 100.0 * stats.long_words / stats.words,
    )


def score_documents(
    docs: list[LabeledDocument], easy_words: Optional[frozenset[str]] = None
) -> dict[int, list[ReadabilityScores]]:
    "Per-class lists of document scores; unscoreable documents are skipped"
    scored: dict[int, list[ReadabilityScores]] = defaultdict(list)
    for doc in docs:
        try:
            scored[doc.class_id].append(compute_readability(text_stats(doc.text, easy_words)))
        except UndefinedScoreError as e:
            logger.bind(stage="readability", user_id=doc.user_id).warning(e.message)
    return dict(scored)


def mean_scores(scores: list[ReadabilityScores]) -> ReadabilityScores:
    table = np.array([[getattr(score, metric) for metric in METRICS] for score in scores])
    return ReadabilityScores(**dict(zip(METRICS, table.mean(axis=0).tolist())))


def readability_by_class(
    docs: list[LabeledDocument], easy_words: Optional[frozenset[str]] = None
) -> tuple[dict[int, ReadabilityScores], list[int]]:
    "Mean scores per class, and the classes with no scoreable document"
    scored = score_documents(docs, easy_words)
    means = {class_id: mean_scores(scored[class_id]) for class_id in sorted(scored)}
    missing = [class_id for class_id in CLASS_IDS if class_id not in means]
    return means, missing
