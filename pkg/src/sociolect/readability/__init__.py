from sociolect.readability.kruskal import kruskal_by_metric, kruskal_wallis
from sociolect.readability.scores import compute_readability, readability_by_class
from sociolect.readability.stats import text_stats

__all__ = [
    "compute_readability",
    "kruskal_by_metric",
    "kruskal_wallis",
    "readability_by_class",
    "text_stats",
]
