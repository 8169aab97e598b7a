import numpy as np

from scipy.stats import chi2, rankdata
from sociolect.exc import InsufficientGroupsError
from sociolect.schemas.constants.significance import SIGNIFICANCE_LEVELS, SignificanceTier
from sociolect.schemas.readability import METRICS, KruskalResult, ReadabilityScores


def significance_tier(statistic: float, df: int) -> SignificanceTier:
    "Strictest tier whose chi-square critical value the statistic exceeds"
    for alpha, tier in SIGNIFICANCE_LEVELS:
        if statistic > chi2.isf(alpha, df):
            return tier
    return SignificanceTier.NONE


def kruskal_wallis(groups: list[list[float]]) -> KruskalResult:
    "Kruskal-Wallis H over mid-ranks with tie correction"
    if len(groups) < 2:
        raise InsufficientGroupsError(f"Kruskal-Wallis needs at least 2 groups, got {len(groups)}")
    if any(len(group) == 0 for group in groups):
        raise InsufficientGroupsError("Kruskal-Wallis groups must be non-empty")

    values = np.concatenate([np.asarray(group, dtype=float) for group in groups])
    sizes = np.array([len(group) for group in groups])
    n = values.size
    df = len(groups) - 1

    _, ties = np.unique(values, return_counts=True)
    tie_correction = 1.0 - float(np.sum(ties**3 - ties)) / (n**3 - n) if n > 1 else 0.0
    if tie_correction <= 0.0:
        # every value equal
        return KruskalResult(H=0.0, df=df, significant_at=SignificanceTier.NONE)

    ranks = rankdata(values)
    bounds = np.cumsum(sizes)[:-1]
    rank_sums = np.array([chunk.sum() for chunk in np.split(ranks, bounds)])
    h = 12.0 / (n * (n + 1)) * float(np.sum(rank_sums**2 / sizes)) - 3.0 * (n + 1)
    h = max(h / tie_correction, 0.0)
    return KruskalResult(H=h, df=df, significant_at=significance_tier(h, df))


def kruskal_by_metric(scored: dict[int, list[ReadabilityScores]]) -> dict[str, KruskalResult]:
    "One test per readability metric across the scored classes"
    classes = sorted(scored)
    return {
        metric: kruskal_wallis(
            [[getattr(score, metric) for score in scored[class_id]] for class_id in classes]
        )
        for metric in METRICS
    }


def increases_with_class(means: dict[int, ReadabilityScores]) -> dict[str, bool]:
    "Whether each metric's class mean grows strictly from the cheapest class to the dearest"
    classes = sorted(means)
    return {
        metric: all(
            getattr(means[low], metric) < getattr(means[high], metric)
            for low, high in zip(classes, classes[1:])
        )
        for metric in METRICS
    }
