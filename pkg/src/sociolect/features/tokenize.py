import re


# numbers keep their separators; words keep inner hyphens, apostrophes, dots and slashes;
# anything else at the edge of a chunk stands alone
_TOKEN = re.compile(r"\d+(?:[.,:]\d+)+|[^\W_]+(?:[-'’_./][^\W_]+)*|\S")


def tokenize(text: str) -> list[str]:
    "Whitespace tokenisation with peripheral punctuation split off; case is preserved"
    return [token for chunk in text.split() for token in _TOKEN.findall(chunk)]
