import pydantic as pyd

from sociolect.schemas.constants.significance import SignificanceTier


class TextStats(pyd.BaseModel):
    sentences: int = 0
    words: int = 0
    characters: int = 0
    letters: int = 0
    syllables: int = 0
    complex_words: int = 0
    easy_words: int = 0
    long_words: int = 0
    difficult_words: int = 0


class ReadabilityScores(pyd.BaseModel):
    ari: float
    coleman_liau: float
    dale_chall: float
    flesch_kincaid: float
    flesch_reading: float
    gunning_fog: float
    linsear: float
    lix: float


METRICS: tuple[str, ...] = tuple(ReadabilityScores.__fields__)


class KruskalResult(pyd.BaseModel):
    H: pyd.confloat(ge=0.0)
    df: int
    significant_at: SignificanceTier

    class Config:
        use_enum_values = True


class ReadabilityReport(pyd.BaseModel):
    classes: dict[int, ReadabilityScores]
    documents: dict[int, int]
    missing: list[int]
    tests: dict[str, KruskalResult]
    increasing: dict[str, bool]
