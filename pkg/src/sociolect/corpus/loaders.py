import json
import pydantic as pyd

from typing import Iterator, Optional
from sociolect.logger import logger
from sociolect.schemas.corpus import Business, IngestReport, Review
from sociolect.utils.io import iter_json_lines


REVIEW_KEYS = ("review_id", "user_id", "business_id", "text")
PRICE_ATTRIBUTE = "RestaurantsPriceRange2"


def load_reviews(path: str, report: Optional[IngestReport] = None) -> Iterator[Review]:
    """
    Stream reviews from a Yelp-schema JSON Lines file.
    Malformed lines and lines missing a required key are skipped and counted in `report`.
    """
    report = report if report is not None else IngestReport()
    for line_number, line in iter_json_lines(path):
        try:
            row = json.loads(line)
            if not isinstance(row, dict) or any(key not in row for key in REVIEW_KEYS):
                raise ValueError("missing required keys")
            review = Review(
                review_id=row["review_id"],
                user_id=row["user_id"],
                business_id=row["business_id"],
                text=row["text"],
                order_key=f"{line_number:012d}",
                language=row.get("language") or row.get("lang"),
            )
        except (ValueError, TypeError, pyd.ValidationError) as e:
            report.skipped_reviews += 1
            logger.bind(path=path).debug(f"Skipping review on line {line_number}: {e}")
            continue
        report.reviews_read += 1
        yield review


def _price_of(row: dict) -> Optional[int]:
    attributes = row.get("attributes") or {}
    raw = attributes.get(PRICE_ATTRIBUTE) if isinstance(attributes, dict) else None
    try:
        price = int(str(raw).strip().strip("'\""))
    except (TypeError, ValueError):
        return None
    return price if 1 <= price <= 4 else None


def load_businesses(path: str, report: Optional[IngestReport] = None) -> dict[str, int]:
    "Map business_id -> price range (1-4); the first price seen for a business wins"
    report = report if report is not None else IngestReport()
    prices: dict[str, int] = {}
    for line_number, line in iter_json_lines(path):
        try:
            row = json.loads(line)
        except json.JSONDecodeError:
            report.excluded_businesses += 1
            continue
        if not isinstance(row, dict) or not row.get("business_id"):
            report.excluded_businesses += 1
            continue
        price = _price_of(row)
        if price is None:
            report.excluded_businesses += 1
            continue
        business = Business(business_id=row["business_id"], price_range=price)
        report.businesses_read += 1
        known = prices.get(business.business_id)
        if known is None:
            prices[business.business_id] = business.price_range
        elif known != business.price_range:
            report.price_conflicts += 1
            logger.bind(path=path).warning(
                f"Conflicting price for '{business.business_id}' on line {line_number}, "
                f"keeping {known}"
            )
    return prices
