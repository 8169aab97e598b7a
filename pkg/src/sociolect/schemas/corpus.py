import pydantic as pyd

from typing import Optional


class Review(pyd.BaseModel):
    review_id: pyd.constr(strip_whitespace=True, min_length=1)
    user_id: pyd.constr(strip_whitespace=True, min_length=1)
    business_id: pyd.constr(strip_whitespace=True, min_length=1)
    text: str
    order_key: str
    language: Optional[str] = None

    @pyd.validator("text")
    def text_not_blank(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("review text is empty")
        return value

    class Config:
        allow_mutation = False


class Business(pyd.BaseModel):
    business_id: pyd.constr(strip_whitespace=True, min_length=1)
    price_range: pyd.conint(ge=1, le=4)


class AuthorProfile(pyd.BaseModel):
    user_id: str
    reviews: list[Review]
    label_counts: dict[int, int]

    @pyd.root_validator(skip_on_failure=True)
    def counts_match_reviews(cls, values: dict) -> dict:
        if sum(values["label_counts"].values()) != len(values["reviews"]):
            raise ValueError("label_counts must tally one price per review")
        return values

    @property
    def review_count(self) -> int:
        return len(self.reviews)


class IngestReport(pyd.BaseModel):
    reviews_read: int = 0
    skipped_reviews: int = 0
    non_english: int = 0
    undetermined_language: int = 0
    businesses_read: int = 0
    excluded_businesses: int = 0
    price_conflicts: int = 0
    unpriced_reviews: int = 0
    authors: int = 0
