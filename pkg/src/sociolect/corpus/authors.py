from collections import Counter, defaultdict
from typing import Iterable, Optional
from sociolect.logger import logger
from sociolect.schemas.corpus import AuthorProfile, IngestReport, Review


MIN_AUTHOR_REVIEWS = 2


def review_sort_key(review: Review) -> tuple[str, str]:
    return review.order_key, review.review_id


def group_by_author(
    reviews: Iterable[Review],
    prices: dict[str, int],
    report: Optional[IngestReport] = None,
) -> list[AuthorProfile]:
    """
    Group priced reviews per author. Reviews of businesses without a price range are
    dropped and counted; authors left with fewer than two reviews are not emitted.
    """
    report = report if report is not None else IngestReport()
    by_author: dict[str, list[Review]] = defaultdict(list)
    for review in reviews:
        if review.business_id not in prices:
            report.unpriced_reviews += 1
            continue
        by_author[review.user_id].append(review)

    profiles = []
    for user_id in sorted(by_author):
        authored = sorted(by_author[user_id], key=review_sort_key)
        if len(authored) < MIN_AUTHOR_REVIEWS:
            continue
        counts = Counter(prices[review.business_id] for review in authored)
        profiles.append(
            AuthorProfile(
                user_id=user_id,
                reviews=authored,
                label_counts={price: counts[price] for price in sorted(counts)},
            )
        )

    report.authors = len(profiles)
    logger.bind(stage="ingest").info(
        f"Grouped {sum(len(v) for v in by_author.values())} priced reviews into "
        f"{len(profiles)} author profiles"
    )
    return profiles
