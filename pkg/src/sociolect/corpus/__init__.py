from sociolect.corpus.authors import group_by_author
from sociolect.corpus.language import detect_language, filter_language
from sociolect.corpus.loaders import load_businesses, load_reviews

__all__ = [
    "detect_language",
    "filter_language",
    "group_by_author",
    "load_businesses",
    "load_reviews",
]
