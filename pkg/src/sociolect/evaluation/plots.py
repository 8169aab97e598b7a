import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from sociolect.schemas.evaluation import CLASS_IDS, EvalReport  # noqa: E402


def render_confusion_svg(report: EvalReport, path: str) -> None:
    "Heatmap of the confusion matrix with the counts written in each cell"
    matrix = np.asarray(report.confusion)
    labels = [r"\$" * class_id for class_id in CLASS_IDS]  # escaped, or mathtext parses them
    fig, ax = plt.subplots(figsize=(4.5, 4))
    try:
        ax.imshow(matrix, cmap="Blues")
        ax.set_xticks(range(len(labels)), labels=labels)
        ax.set_yticks(range(len(labels)), labels=labels)
        ax.set_xlabel("predicted")
        ax.set_ylabel("gold")
        ax.set_title(f"{report.model} / {report.representation}")
        threshold = matrix.max() / 2 if matrix.size else 0
        for row, col in np.ndindex(matrix.shape):
            ax.text(
                col,
                row,
                str(matrix[row, col]),
                ha="center",
                va="center",
                color="white" if matrix[row, col] > threshold else "black",
            )
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
