class SociolectError(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# corpus
class CorpusReadError(SociolectError):
    pass


# labeling
class TieError(SociolectError):
    def __init__(self, message: str, classes: list[int] | None = None):
        super().__init__(message)
        self.classes = classes or []


class BalanceError(SociolectError):
    def __init__(self, message: str, class_id: int | None = None):
        super().__init__(message)
        self.class_id = class_id


class ConsistencyError(SociolectError):
    pass


# readability
class UndefinedScoreError(SociolectError):
    pass


class InsufficientGroupsError(SociolectError):
    pass


# features
class ConllUFormatError(SociolectError):
    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message if line_number is None else f"line {line_number}: {message}")
        self.line_number = line_number


class UnknownDocumentError(SociolectError):
    pass


class HeadIndexError(SociolectError):
    pass


# models
class ModelTrainingError(SociolectError):
    pass


class TrainingDivergedError(ModelTrainingError):
    def __init__(self, message: str, epoch: int, batch: int):
        super().__init__(f"{message} (epoch={epoch}, batch={batch})")
        self.epoch = epoch
        self.batch = batch


class VocabularyMismatchError(SociolectError):
    pass


# evaluation
class SplitError(SociolectError):
    pass


class EvaluationError(SociolectError):
    pass


# cli
class ConfigurationError(SociolectError):
    pass


class MissingArtifactError(SociolectError):
    def __init__(self, message: str, required_stage: str):
        super().__init__(message)
        self.required_stage = required_stage


class StaleArtifactError(SociolectError):
    def __init__(self, message: str, required_stage: str):
        super().__init__(message)
        self.required_stage = required_stage


class StageFailedError(SociolectError):
    def __init__(self, message: str, stage: str):
        super().__init__(message)
        self.stage = stage
