import pydantic as pyd

from typing import Optional
from sociolect.schemas.constants.representation import Representation
from sociolect.schemas.constants.ud import UNIVERSAL_POS_TAGS


class ParsedToken(pyd.BaseModel):
    form: str
    upos: str
    head: pyd.conint(ge=0)
    deprel: str

    @pyd.validator("upos")
    def upos_in_tagset(cls, value: str) -> str:
        if value not in UNIVERSAL_POS_TAGS:
            raise ValueError(f"'{value}' is not a universal POS tag")
        return value


class ParsedSentence(pyd.BaseModel):
    doc_id: str
    tokens: list[ParsedToken]

    def __len__(self) -> int:
        return len(self.tokens)


class FeatureDoc(pyd.BaseModel):
    doc_id: str = ""
    label: Optional[int] = None
    representation: Representation
    sparse_counts: Optional[dict[int, pyd.conint(ge=1)]] = None
    sequence: Optional[list[pyd.conint(ge=0)]] = None

    @pyd.root_validator(skip_on_failure=True)
    def exactly_one_view(cls, values: dict) -> dict:
        if (values.get("sparse_counts") is None) == (values.get("sequence") is None):
            raise ValueError("a FeatureDoc holds either sparse counts or a sequence")
        return values

    @property
    def is_sparse(self) -> bool:
        return self.sparse_counts is not None
