import math

from collections import Counter
from typing import Iterable


VOWELS = frozenset("aeiou")
FIELD_SEPARATOR = "_"


def _shape(token: str) -> str:
    return "".join(
        ("X" if char.isupper() else "x") if char.isalpha() else char for char in token
    )


def _consonant_vowel(token: str) -> str:
    return "".join(
        ("V" if char.lower() in VOWELS else "C") if char.isalpha() else char for char in token
    )


def frequency_bucket(freq: int) -> int:
    "0 for unseen tokens, otherwise 1 + floor(log10(freq))"
    return 0 if freq <= 0 else int(math.floor(math.log10(freq))) + 1


def bleach_token(token: str, freq: int, buckets: bool = False) -> str:
    """
    Render a token as shape_length_alnum_cv_frequency, e.g. "I" seen 2117 times becomes
    "X_01_True_V_2117". With `buckets` the frequency field is its log10 bucket.
    """
    if not token:
        raise ValueError("Cannot bleach an empty token")
    frequency = frequency_bucket(freq) if buckets else max(freq, 0)
    return FIELD_SEPARATOR.join(
        (
            _shape(token),
            f"{len(token):02d}",
            str(token.isalnum()),
            _consonant_vowel(token),
            str(frequency),
        )
    )


def token_frequencies(token_lists: Iterable[list[str]]) -> Counter:
    "Raw token counts over the training split"
    counts: Counter = Counter()
    for tokens in token_lists:
        counts.update(tokens)
    return counts


def bleach_tokens(tokens: list[str], frequencies: Counter, buckets: bool = False) -> list[str]:
    return [bleach_token(token, frequencies.get(token, 0), buckets) for token in tokens]
