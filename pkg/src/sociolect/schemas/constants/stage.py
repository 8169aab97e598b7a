from enum import Enum


class Stage(Enum):
    INGEST = "ingest"
    LABEL = "label"
    READABILITY = "readability"
    FEATURIZE = "featurize"
    TRAIN = "train"
    EVALUATE = "evaluate"
    REPORT = "report"


# stage -> stages whose artifacts it consumes
STAGE_DEPENDENCIES: dict[Stage, list[Stage]] = {
    Stage.INGEST: [],
    Stage.LABEL: [Stage.INGEST],
    Stage.READABILITY: [Stage.LABEL],
    Stage.FEATURIZE: [Stage.LABEL],
    Stage.TRAIN: [Stage.FEATURIZE],
    Stage.EVALUATE: [Stage.TRAIN],
    Stage.REPORT: [Stage.EVALUATE, Stage.READABILITY],
}
