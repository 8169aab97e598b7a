import pydantic as pyd

from typing import Optional
from sociolect.config import config as conf
from sociolect.schemas.constants.model_type import ModelType
from sociolect.schemas.constants.representation import Representation
from sociolect.schemas.models import TrainConfig


def parse_ngram_orders(spec: str) -> list[int]:
    "'1,3-6' -> [1, 3, 4, 5, 6]; '' -> []"
    orders: set[int] = set()
    for part in filter(None, (piece.strip() for piece in spec.split(","))):
        low, _, high = part.partition("-")
        start, end = int(low), int(high or low)
        if start < 1 or end < start:
            raise ValueError(f"Invalid n-gram range '{part}'")
        orders.update(range(start, end + 1))
    return sorted(orders)


class PipelineConfig(pyd.BaseModel):
    reviews: Optional[str] = None
    businesses: Optional[str] = None
    conllu: Optional[str] = None
    workdir: str = conf.workdir
    dale_chall_list: str = conf.dale_chall_list
    seed: int = conf.seed
    min_reviews: pyd.conint(ge=2) = conf.min_reviews
    train_fraction: float = conf.train_fraction
    representations: Optional[list[Representation]] = None
    models: list[ModelType] = pyd.Field(default_factory=lambda: [ModelType.LR, ModelType.CNN])
    runs: pyd.conint(ge=1) = conf.runs
    word_ngrams: list[int] = pyd.Field(
        default_factory=lambda: parse_ngram_orders(conf.word_ngrams)
    )
    char_ngrams: list[int] = pyd.Field(
        default_factory=lambda: parse_ngram_orders(conf.char_ngrams)
    )
    freq_buckets: bool = False
    language_filter: bool = conf.language_filter
    trust_language_field: bool = conf.trust_language_field
    unigram_top_features: bool = True
    top_k: pyd.conint(ge=1) = 10
    train: TrainConfig = pyd.Field(default_factory=TrainConfig)

    class Config:
        extra = "forbid"

    @pyd.validator("word_ngrams", "char_ngrams", pre=True)
    def ngram_spec(cls, value):
        if isinstance(value, str):
            return parse_ngram_orders(value)
        return value

    @pyd.validator("representations", always=True)
    def default_representations(cls, value, values):
        "Every view when parses are available, otherwise the surface ones"
        if value is None:
            if values.get("conllu"):
                return list(Representation)
            return [Representation.LEXICAL, Representation.BLEACH]
        if not value:
            raise ValueError("at least one representation is required")
        return list(dict.fromkeys(value))

    @pyd.validator("train_fraction")
    def fraction_in_open_interval(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            raise ValueError("train_fraction must lie in (0, 1)")
        return value

    @pyd.validator("models")
    def no_random_model(cls, value: list[ModelType]) -> list[ModelType]:
        if ModelType.RANDOM in value:
            raise ValueError("the random baseline is always reported and cannot be trained")
        return value

    @pyd.root_validator(skip_on_failure=True)
    def parse_required(cls, values: dict) -> dict:
        needs_parse = [r.value for r in values["representations"] if r.needs_parse]
        if needs_parse and not values.get("conllu"):
            raise ValueError(f"representations {needs_parse} require a CoNLL-U path")
        return values

    def hashed_view(self) -> dict:
        "Config echo without machine-specific paths"
        echo = self.dict(exclude={"reviews", "businesses", "conllu", "workdir", "dale_chall_list"})
        echo["representations"] = [r.value for r in self.representations]
        echo["models"] = [m.value for m in self.models]
        return echo


class FeatureRecord(pyd.BaseModel):
    doc_id: str
    label: int
    split: str  # "train" / "test"
    sparse_counts: Optional[dict[int, int]] = None
    sequence: Optional[list[int]] = None


class StageEntry(pyd.BaseModel):
    status: str  # "ok" / "failed"
    inputs: dict[str, str] = pyd.Field(default_factory=dict)
    outputs: dict[str, str] = pyd.Field(default_factory=dict)
    config: dict = pyd.Field(default_factory=dict)
    seed: Optional[int] = None
    error: Optional[str] = None


class Manifest(pyd.BaseModel):
    version: int = 1
    stages: dict[str, StageEntry] = pyd.Field(default_factory=dict)
    failed_stage: Optional[str] = None
