import math
from dataclasses import replace

from .base import MemristorModel
from .params import DeviceState


def sigmoid(x):
    """Logistic function, evaluated without overflow for large |x|"""
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


class IdealBilevelModel(MemristorModel):
    """
    Charge-controlled memristor with a logistic memristance profile

    M(q) = r_on + (r_off - r_on) * sigmoid(q / q0) is monotone in q and
    saturates at r_on for q -> -inf and at r_off for q -> +inf.
    """

    def memristance(self, state):
        p = self.params
        return p.r_on + (p.r_off - p.r_on) * sigmoid(state.q / p.q0)

    def step(self, state, current, voltage, dt):
        return replace(state, q=state.q + state.polarity * current * dt)

    def state_change(self, current, voltage, dt):
        return current * dt

    def max_state_change(self):
        return self.params.q0

    def initial_state(self, polarity=1):
        return DeviceState(q=0.0, polarity=polarity)

    def drive_rate(self, drive):
        # Constant current: dq/dt is the current itself
        return drive

    def condition_star_horizon(self, drive):
        return 10.0 * self.params.q0 / drive

    @property
    def rail_step(self):
        return 0.1 * self.params.q0
