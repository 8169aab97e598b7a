import numpy as np
import pydantic as pyd


class AdamState(pyd.BaseModel):
    first_moments: dict[str, np.ndarray]
    second_moments: dict[str, np.ndarray]
    t: pyd.conint(ge=0) = 0

    class Config:
        arbitrary_types_allowed = True


class AdamOptimizer:
    "Bias-corrected Adam over a name -> array parameter mapping, updated in place"

    def __init__(
        self,
        params: dict[str, np.ndarray],
        learning_rate: float = 0.001,
        beta1: float = 0.9,
        beta2: float = 0.999,
        epsilon: float = 1e-8,
    ) -> None:
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.state = AdamState(
            first_moments={name: np.zeros_like(value) for name, value in params.items()},
            second_moments={name: np.zeros_like(value) for name, value in params.items()},
        )

    def step(self, params: dict[str, np.ndarray], grads: dict[str, np.ndarray]) -> None:
        self.state.t += 1
        t = self.state.t
        for name, grad in grads.items():
            m = self.state.first_moments[name]
            v = self.state.second_moments[name]
            m *= self.beta1
            m += (1.0 - self.beta1) * grad
            v *= self.beta2
            v += (1.0 - self.beta2) * grad**2
            m_hat = m / (1.0 - self.beta1**t)
            v_hat = v / (1.0 - self.beta2**t)
            params[name] -= self.learning_rate * m_hat / (np.sqrt(v_hat) + self.epsilon)
