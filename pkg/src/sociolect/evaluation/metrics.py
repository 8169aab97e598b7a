import numpy as np

from sklearn.metrics import confusion_matrix, precision_recall_fscore_support
from sociolect.exc import EvaluationError
from sociolect.schemas.evaluation import CLASS_IDS, ClassScores, EvalReport


def evaluate(
    preds: list[int], gold: list[int], model: str = "", representation: str = ""
) -> EvalReport:
    """
    Confusion matrix and per-class precision/recall/F1 (0 when a denominator is 0).
    The weighted F1 averages per-class F1 by gold support; the macro F1 averages over the
    classes that occur in either gold or predictions.
    """
    if len(preds) != len(gold):
        raise EvaluationError(f"{len(preds)} predictions for {len(gold)} gold labels")
    if not gold:
        raise EvaluationError("Nothing to evaluate")

    labels = list(CLASS_IDS)
    precision, recall, f1, support = precision_recall_fscore_support(
        gold, preds, labels=labels, average=None, zero_division=0
    )
    total = float(np.sum(support))
    seen = [i for i, class_id in enumerate(labels) if class_id in set(gold) | set(preds)]
    confusion = confusion_matrix(gold, preds, labels=labels)

    return EvalReport(
        model=model,
        representation=representation,
        per_class={
            class_id: ClassScores(
                precision=float(precision[i]),
                recall=float(recall[i]),
                f1=float(f1[i]),
                support=int(support[i]),
            )
            for i, class_id in enumerate(labels)
        },
        accuracy=float(np.trace(confusion)) / total,
        weighted_precision=float(np.dot(precision, support)) / total,
        weighted_recall=float(np.dot(recall, support)) / total,
        weighted_f1=float(np.dot(f1, support)) / total,
        macro_f1=float(np.mean(f1[seen])),
        confusion=confusion.tolist(),
    )


def average_runs(reports: list[EvalReport]) -> EvalReport:
    "Mean of every score, summed confusion matrices, seeds of all runs"
    if not reports:
        raise EvaluationError("No runs to average")
    tags = {(report.model, report.representation) for report in reports}
    if len(tags) > 1:
        raise EvaluationError(f"Cannot average runs of different cells: {sorted(tags)}")

    def mean(values) -> float:
        return float(np.mean(list(values)))

    first = reports[0]
    return EvalReport(
        model=first.model,
        representation=first.representation,
        per_class={
            class_id: ClassScores(
                precision=mean(r.per_class[class_id].precision for r in reports),
                recall=mean(r.per_class[class_id].recall for r in reports),
                f1=mean(r.per_class[class_id].f1 for r in reports),
                support=int(round(mean(r.per_class[class_id].support for r in reports))),
            )
            for class_id in first.per_class
        },
        accuracy=mean(r.accuracy for r in reports),
        weighted_precision=mean(r.weighted_precision for r in reports),
        weighted_recall=mean(r.weighted_recall for r in reports),
        weighted_f1=mean(r.weighted_f1 for r in reports),
        macro_f1=mean(r.macro_f1 for r in reports),
        confusion=np.sum([r.confusion for r in reports], axis=0).tolist(),
        seeds=[seed for r in reports for seed in r.seeds],
        split_digest=first.split_digest,
    )


def random_baseline(gold: list[int], seed: int) -> list[int]:
    "Uniform-random class predictions"
    rng = np.random.default_rng(seed)
    return rng.integers(CLASS_IDS[0], CLASS_IDS[-1] + 1, size=len(gold)).tolist()
