from enum import Enum


class ModelType(Enum):
    LR = "lr"
    CNN = "cnn"
    RANDOM = "random"
