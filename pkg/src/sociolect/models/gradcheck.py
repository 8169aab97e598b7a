import numpy as np

from typing import Callable


Objective = Callable[[dict[str, np.ndarray]], tuple[float, dict[str, np.ndarray]]]


def relative_error(analytic: float, numeric: float, floor: float = 1e-8) -> float:
    return abs(analytic - numeric) / max(abs(analytic), abs(numeric), floor)


def gradient_check(
    objective: Objective,
    params: dict[str, np.ndarray],
    epsilon: float = 1e-5,
    floor: float = 1e-8,
) -> float:
    """
    Max relative error between the backprop gradient and central differences
    (f(θ+ε) - f(θ-ε)) / 2ε over every coordinate. Parameters are perturbed in place
    and restored. Dropout must be off inside `objective`. Errors are divided by at
    least `floor`, so vanishing gradients are not held to a relative bound.
    """
    _, analytic = objective(params)
    worst = 0.0
    for name, values in params.items():
        grad = analytic[name]
        for index in np.ndindex(values.shape):
            original = values[index]
            values[index] = original + epsilon
            loss_plus, _ = objective(params)
            values[index] = original - epsilon
            loss_minus, _ = objective(params)
            values[index] = original
            numeric = (loss_plus - loss_minus) / (2.0 * epsilon)
            worst = max(worst, relative_error(float(grad[index]), numeric, floor))
    return worst
