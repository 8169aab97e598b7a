import numpy as np
import pydantic as pyd

from collections import Counter
from scipy.stats import entropy
from sociolect.exc import BalanceError, TieError
from sociolect.logger import logger
from sociolect.schemas.corpus import AuthorProfile
from sociolect.schemas.evaluation import CLASS_IDS
from sociolect.schemas.labeling import LabeledAuthor, SilverLabel


@pyd.validate_arguments
def assign_label(counts: dict[int, int]) -> SilverLabel:
    "Mode of the price-range histogram; a tied maximum raises TieError"
    if not counts or sum(counts.values()) < 2:
        raise ValueError("assign_label needs at least two counted reviews")
    top = max(counts.values())
    modes = sorted(class_id for class_id, count in counts.items() if count == top)
    if len(modes) > 1:
        raise TieError(f"Tied mode between classes {modes}", classes=modes)
    return SilverLabel(class_id=modes[0])


@pyd.validate_arguments
def label_entropy(counts: dict[int, int]) -> float:
    "Shannon entropy (nats) of the price-range histogram"
    if not counts:
        raise ValueError("label_entropy needs a non-empty histogram")
    observed = [count for _, count in sorted(counts.items()) if count > 0]
    if len(observed) <= 1:
        return 0.0
    return float(entropy(observed))


def label_authors(profiles: list[AuthorProfile]) -> tuple[list[LabeledAuthor], int]:
    "Mode label + entropy per profile; authors with a tied mode are dropped and counted"
    authors, ties = [], 0
    for profile in profiles:
        try:
            label = assign_label(profile.label_counts)
        except TieError as e:
            ties += 1
            logger.bind(stage="label", user_id=profile.user_id).debug(e.message)
            continue
        authors.append(
            LabeledAuthor(
                user_id=profile.user_id,
                label=label,
                entropy_nats=label_entropy(profile.label_counts),
                review_count=profile.review_count,
            )
        )
    return authors, ties


def class_distribution(authors: list[LabeledAuthor]) -> dict[int, int]:
    counts = Counter(author.class_id for author in authors)
    return {class_id: counts.get(class_id, 0) for class_id in CLASS_IDS}


def entropy_threshold(authors: list[LabeledAuthor]) -> float:
    return float(np.mean([author.entropy_nats for author in authors]))


def filter_authors(authors: list[LabeledAuthor], min_reviews: int = 9) -> list[LabeledAuthor]:
    """
    Keep authors whose label entropy is at most the pool mean and who wrote at least
    `min_reviews` reviews. The mean is taken over the whole input pool, before the review floor.
    """
    if not authors:
        return []
    threshold = entropy_threshold(authors)
    kept = [
        author
        for author in authors
        if author.entropy_nats <= threshold and author.review_count >= min_reviews
    ]
    logger.bind(stage="label").info(
        f"Entropy threshold {threshold:.4f} nats, min reviews {min_reviews}: "
        f"kept {len(kept)}/{len(authors)} authors"
    )
    return kept


def balance_downsample(authors: list[LabeledAuthor], seed: int) -> list[LabeledAuthor]:
    "Downsample every class to the size of the smallest one; input order is preserved"
    by_class: dict[int, list[LabeledAuthor]] = {class_id: [] for class_id in CLASS_IDS}
    for author in authors:
        by_class[author.class_id].append(author)
    for class_id, members in by_class.items():
        if not members:
            raise BalanceError(f"Class {class_id} has no authors", class_id=class_id)

    size = min(len(members) for members in by_class.values())
    rng = np.random.default_rng(seed)
    selected: set[str] = set()
    for class_id in CLASS_IDS:
        members = sorted(by_class[class_id], key=lambda author: author.user_id)
        picks = rng.choice(len(members), size=size, replace=False)
        selected.update(members[index].user_id for index in picks)

    logger.bind(stage="label").info(f"Balanced classes to {size} authors each")
    return [author for author in authors if author.user_id in selected]
