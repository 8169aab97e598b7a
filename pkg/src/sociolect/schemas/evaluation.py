import pydantic as pyd

from typing import Optional


CLASS_IDS: tuple[int, ...] = (1, 2, 3, 4)


class ClassScores(pyd.BaseModel):
    precision: pyd.confloat(ge=0.0, le=1.0)
    recall: pyd.confloat(ge=0.0, le=1.0)
    f1: pyd.confloat(ge=0.0, le=1.0)
    support: int


class EvalReport(pyd.BaseModel):
    model: str = ""
    representation: str = ""
    per_class: dict[int, ClassScores]
    accuracy: pyd.confloat(ge=0.0, le=1.0)
    weighted_precision: pyd.confloat(ge=0.0, le=1.0)
    weighted_recall: pyd.confloat(ge=0.0, le=1.0)
    weighted_f1: pyd.confloat(ge=0.0, le=1.0)
    macro_f1: pyd.confloat(ge=0.0, le=1.0)
    confusion: list[list[int]]  # rows = gold, columns = predicted
    seeds: list[int] = pyd.Field(default_factory=list)
    split_digest: Optional[str] = None

    @pyd.validator("confusion")
    def confusion_is_4x4(cls, value: list[list[int]]) -> list[list[int]]:
        if len(value) != len(CLASS_IDS) or any(len(row) != len(CLASS_IDS) for row in value):
            raise ValueError("confusion matrix must be 4x4")
        if any(cell < 0 for row in value for cell in row):
            raise ValueError("confusion matrix entries must be non-negative")
        return value

    @property
    def cell(self) -> str:
        return f"{self.model}/{self.representation}"
