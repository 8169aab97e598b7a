from collections import Counter
from typing import Iterable, Optional


WORD_PREFIX = "w:"
CHAR_PREFIX = "c:"


def extract_ngrams(
    tokens: list[str],
    word_ns: Iterable[int] = (),
    char_ns: Iterable[int] = (),
    text: Optional[str] = None,
) -> Counter:
    """
    Word n-grams ("w:" + space-joined tokens) and character n-grams ("c:" + raw substring,
    spaces included) as one multiset. Character n-grams run over `text`, or over the
    space-joined tokens when no raw text is given.
    """
    grams: Counter = Counter()
    for n in sorted(set(word_ns)):
        grams.update(
            WORD_PREFIX + " ".join(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
        )
    char_ns = sorted(set(char_ns))
    if char_ns:
        raw = text if text is not None else " ".join(tokens)
        for n in char_ns:
            grams.update(CHAR_PREFIX + raw[i : i + n] for i in range(len(raw) - n + 1))
    return grams


def is_word_unigram(symbol: str) -> bool:
    return symbol.startswith(WORD_PREFIX) and " " not in symbol[len(WORD_PREFIX) :]
