import math
from dataclasses import replace

from core.errors import DeviceError
from .base import MemristorModel
from .params import DeviceState


class ExponentialSwitchingModel(MemristorModel):
    """
    Voltage-driven memristor whose switching speed grows exponentially with drive

    The normalized state w moves at dw/dt = k * sinh(v / v0) and is clamped
    to [0, 1]. Memristance is r_off at w = 0 and r_on at w = 1.
    """

    def memristance(self, state):
        p = self.params
        return p.r_off + (p.r_on - p.r_off) * state.w

    def _rate(self, voltage):
        try:
            return self.params.k * math.sinh(voltage / self.params.v0)
        except OverflowError:
            raise DeviceError(f"Switching rate overflows at {voltage} V (v0={self.params.v0} V)") from None

    def step(self, state, current, voltage, dt):
        w = state.w + state.polarity * self._rate(voltage) * dt
        return replace(state, w=min(1.0, max(0.0, w)))

    def state_change(self, current, voltage, dt):
        return self._rate(voltage) * dt

    def max_state_change(self):
        # a full rail-to-rail jump in one step
        return 1.0

    def max_stable_dt(self, max_voltage):
        return self.max_state_change() / self._rate(abs(max_voltage))

    def initial_state(self, polarity=1):
        return DeviceState(w=0.5, polarity=polarity)

    def drive_rate(self, drive):
        return self._rate(drive)

    def condition_star_horizon(self, drive):
        return 2.0 / self._rate(drive)

    @property
    def rail_step(self):
        return 0.01

    def switching_slowdown(self, voltage):
        """
        How many times slower the device switches at half the given voltage

        Parameters:
        voltage (float): Full drive voltage in volt (must be nonzero)

        Returns:
        float: rate(v) / rate(v / 2)
        """
        return self._rate(voltage) / self._rate(voltage / 2.0)
