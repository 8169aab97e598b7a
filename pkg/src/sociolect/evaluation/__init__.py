from sociolect.evaluation.importance import top_features
from sociolect.evaluation.metrics import average_runs, evaluate, random_baseline
from sociolect.evaluation.plots import render_confusion_svg
from sociolect.evaluation.split import split_digest, stratified_split

__all__ = [
    "average_runs",
    "evaluate",
    "random_baseline",
    "render_confusion_svg",
    "split_digest",
    "stratified_split",
    "top_features",
]
