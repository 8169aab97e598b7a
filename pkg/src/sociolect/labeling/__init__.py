from sociolect.labeling.documents import build_documents, dataset_overview
from sociolect.labeling.silver import (
    assign_label,
    balance_downsample,
    class_distribution,
    filter_authors,
    label_authors,
    label_entropy,
)

__all__ = [
    "assign_label",
    "balance_downsample",
    "build_documents",
    "class_distribution",
    "dataset_overview",
    "filter_authors",
    "label_authors",
    "label_entropy",
]
