from enum import Enum


class SignificanceTier(Enum):
    NONE = "none"
    P05 = "0.05"
    P01 = "0.01"
    P001 = "0.001"


# tested from the strictest tier down
SIGNIFICANCE_LEVELS: list[tuple[float, SignificanceTier]] = [
    (0.001, SignificanceTier.P001),
    (0.01, SignificanceTier.P01),
    (0.05, SignificanceTier.P05),
]
