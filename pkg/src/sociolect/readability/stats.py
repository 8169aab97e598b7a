import re

from cachetools import LRUCache, cached
from typing import Optional
from sociolect.config import config as conf
from sociolect.exc import ConfigurationError
from sociolect.schemas.readability import TextStats


_SENTENCE_END = re.compile(r"[.!?]+(?=\s|$)")
_WORD = re.compile(r"[^\W_]+(?:['’\-][^\W_]+)*")
_VOWEL_GROUP = re.compile(r"[aeiouy]+")

COMPLEX_SYLLABLES = 3
LONG_WORD_LETTERS = 7


@cached(cache=LRUCache(maxsize=4))
def load_easy_words(path: str) -> frozenset[str]:
    "One word per line, matched case-insensitively"
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return frozenset(line.strip().lower() for line in handle if line.strip())
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigurationError(f"Unable to read easy-word list '{path}': {e}")


@cached(cache=LRUCache(maxsize=65536))
def count_syllables(word: str) -> int:
    "Vowel groups, minus a silent final 'e' (but not consonant+'le'), at least one"
    lowered = word.lower()
    syllables = len(_VOWEL_GROUP.findall(lowered))
    if lowered.endswith("e") and not (
        lowered.endswith("le") and len(lowered) > 2 and lowered[-3] not in "aeiouy"
    ):
        syllables -= 1
    return max(syllables, 1)


def count_sentences(text: str) -> int:
    return sum(1 for segment in _SENTENCE_END.split(text) if _WORD.search(segment))


def text_stats(text: str, easy_words: Optional[frozenset[str]] = None) -> TextStats:
    words = _WORD.findall(text)
    if not words:
        return TextStats()
    easy_words = load_easy_words(conf.dale_chall_list) if easy_words is None else easy_words

    stats = TextStats(words=len(words), sentences=max(count_sentences(text), 1))
    for word in words:
        syllables = count_syllables(word)
        letters = sum(char.isalpha() for char in word)
        stats.characters += sum(char.isalnum() for char in word)
        stats.letters += letters
        stats.syllables += syllables
        if syllables >= COMPLEX_SYLLABLES:
            stats.complex_words += 1
        else:
            stats.easy_words += 1
        if letters >= LONG_WORD_LETTERS:
            stats.long_words += 1
        if word.lower() not in easy_words:
            stats.difficult_words += 1
    return stats
