import math
import numpy as np

from collections import defaultdict
from sociolect.exc import SplitError
from sociolect.schemas.labeling import LabeledDocument
from sociolect.utils.io import sha256_text


def stratified_split(
    docs: list[LabeledDocument], train_fraction: float, seed: int
) -> tuple[list[LabeledDocument], list[LabeledDocument]]:
    "Per class: seeded shuffle, floor(fraction·n) to train, the rest to test"
    if not 0.0 < train_fraction < 1.0:
        raise SplitError(f"train_fraction must lie in (0, 1), got {train_fraction}")

    by_class: dict[int, list[LabeledDocument]] = defaultdict(list)
    for doc in docs:
        by_class[doc.class_id].append(doc)

    rng = np.random.default_rng(seed)
    train, test = [], []
    for class_id in sorted(by_class):
        members = sorted(by_class[class_id], key=lambda doc: doc.user_id)
        n_train = math.floor(train_fraction * len(members))
        if len(members) < 2 or n_train == 0 or n_train == len(members):
            raise SplitError(
                f"Class {class_id} has {len(members)} documents, too few to split "
                f"at {train_fraction}"
            )
        order = rng.permutation(len(members))
        train.extend(members[i] for i in order[:n_train])
        test.extend(members[i] for i in order[n_train:])
    return train, test


def split_digest(test_docs: list[LabeledDocument]) -> str:
    "Fingerprint of the test split, compared across every evaluated cell"
    return sha256_text("\n".join(sorted(doc.user_id for doc in test_docs)))
