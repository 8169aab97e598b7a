import math
import pydantic as pyd


class SilverLabel(pyd.BaseModel):
    class_id: pyd.conint(ge=1, le=4)

    def __str__(self) -> str:
        return "$" * self.class_id

    class Config:
        allow_mutation = False
        frozen = True


class LabeledAuthor(pyd.BaseModel):
    user_id: str
    label: SilverLabel
    entropy_nats: pyd.confloat(ge=0.0, le=math.log(4) + 1e-9)
    review_count: pyd.conint(ge=2)

    @property
    def class_id(self) -> int:
        return self.label.class_id


class LabeledDocument(pyd.BaseModel):
    user_id: str
    label: SilverLabel
    text: pyd.constr(min_length=1)

    @property
    def class_id(self) -> int:
        return self.label.class_id


class ClassOverview(pyd.BaseModel):
    authors: int = 0
    tokens: int = 0
