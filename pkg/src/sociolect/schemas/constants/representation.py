from enum import Enum


class Representation(Enum):
    LEXICAL = "lexical"
    BLEACH = "bleach"
    POS = "pos"
    DEPTRIPLE = "deptriple"

    @property
    def needs_parse(self) -> bool:
        return self in (Representation.POS, Representation.DEPTRIPLE)
