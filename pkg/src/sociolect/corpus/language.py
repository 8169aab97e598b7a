"""
Character-trigram language identification.
Profiles are ranked trigram lists derived from the bundled sample texts (one `<code>.txt` per
language); documents are classified by the rank-order out-of-place distance to each profile.
"""

import os
import re

from cachetools import LRUCache, cached
from collections import Counter
from typing import Iterable, Iterator, Optional
from sociolect.config import config as conf
from sociolect.logger import logger
from sociolect.schemas.corpus import IngestReport, Review


UNDETERMINED = "und"
ENGLISH = "en"

_NON_LETTERS = re.compile(r"[\W\d_]+")

Profile = dict[str, int]  # trigram -> rank


def trigram_counts(text: str) -> Counter:
    "Trigrams of space-padded lowercase words, letters only"
    counts: Counter = Counter()
    for word in _NON_LETTERS.sub(" ", text.lower()).split():
        padded = f" {word} "
        counts.update(padded[i : i + 3] for i in range(len(padded) - 2))
    return counts


def rank_profile(counts: Counter, size: int) -> Profile:
    top = sorted(counts.items(), key=lambda item: (-item[1], item[0]))[:size]
    return {gram: rank for rank, (gram, _) in enumerate(top)}


@cached(cache=LRUCache(maxsize=8))
def load_profiles(folder: str, size: int) -> dict[str, Profile]:
    "Derive one ranked profile per `<language>.txt` sample in `folder`"
    profiles = {}
    for filename in sorted(os.listdir(folder)):
        language, ext = os.path.splitext(filename)
        if ext != ".txt":
            continue
        with open(os.path.join(folder, filename), "r", encoding="utf-8") as handle:
            profiles[language] = rank_profile(trigram_counts(handle.read()), size)
    logger.debug(f"Loaded {len(profiles)} language profiles from '{folder}'")
    return profiles


def out_of_place_similarity(document: Profile, profile: Profile) -> float:
    "1 - normalised out-of-place distance; 1.0 is an identical ranking"
    max_penalty = len(profile)
    if not document or not max_penalty:
        return 0.0
    distance = sum(
        min(abs(rank - profile[gram]), max_penalty) if gram in profile else max_penalty
        for gram, rank in document.items()
    )
    return 1.0 - distance / (len(document) * max_penalty)


def detect_language(
    text: str, profiles: Optional[dict[str, Profile]] = None
) -> tuple[str, float]:
    "Return (language code, similarity score in [0, 1]); short texts are ('und', 0.0)"
    stripped = text.strip()
    if len(stripped) < conf.language_min_chars:
        return UNDETERMINED, 0.0

    if profiles is None:
        profiles = load_profiles(conf.language_profiles_folder, conf.language_profile_size)
    document = rank_profile(trigram_counts(stripped), conf.language_profile_size)
    if not document or not profiles:
        return UNDETERMINED, 0.0

    best_language, best_score = UNDETERMINED, 0.0
    for language in sorted(profiles):
        score = out_of_place_similarity(document, profiles[language])
        if score > best_score:
            best_language, best_score = language, score
    return best_language, best_score


def filter_language(
    reviews: Iterable[Review],
    report: Optional[IngestReport] = None,
    trust_field: bool = conf.trust_language_field,
    keep_undetermined: bool = conf.keep_undetermined,
    language: str = ENGLISH,
) -> Iterator[Review]:
    "Drop reviews not written in `language`"
    report = report if report is not None else IngestReport()
    for review in reviews:
        if trust_field and review.language:
            detected = review.language.split("-")[0].lower()
        else:
            detected, _ = detect_language(review.text)

        if detected == UNDETERMINED:
            report.undetermined_language += 1
            if keep_undetermined:
                yield review
            continue
        if detected != language:
            report.non_english += 1
            continue
        yield review
