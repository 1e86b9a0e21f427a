import math
from abc import ABC, abstractmethod


class MemristorModel(ABC):
    """Abstract base class for memristance profiles"""

    def __init__(self, params):
        """
        Parameters:
        params (DeviceParams): Device parameters the profile is evaluated with
        """
        self.params = params

    @abstractmethod
    def memristance(self, state):
        """
        Memristance of a device in the given state

        Parameters:
        state (DeviceState): Device state

        Returns:
        float: Resistance in ohm, within [r_on, r_off]
        """
        pass

    @abstractmethod
    def step(self, state, current, voltage, dt):
        """
        Advance a device by one forward-Euler step

        Parameters:
        state (DeviceState): Current state
        current (float): Current through the device in ampere
        voltage (float): Voltage across the device in volt
        dt (float): Step length in seconds

        Returns:
        DeviceState: The advanced state
        """
        pass

    @abstractmethod
    def state_change(self, current, voltage, dt):
        """Signed change of the internal variable for a +1 device, before any clamping"""
        pass

    @abstractmethod
    def max_state_change(self):
        """Largest |state_change| a single step may produce before it counts as unstable"""
        pass

    def max_stable_dt(self, max_voltage):
        """
        Largest step that stays within max_state_change for any drive up to max_voltage

        Profiles driven by current return inf: their step limit depends on the
        load and is enforced while the transient runs.
        """
        return math.inf

    @abstractmethod
    def initial_state(self, polarity=1):
        """Midpoint state with the given orientation"""
        pass

    @abstractmethod
    def drive_rate(self, drive):
        """Rate of change of the internal variable under a constant positive drive"""
        pass

    @abstractmethod
    def condition_star_horizon(self, drive):
        """Time after which a constant drive of this magnitude must have reached a rail"""
        pass

    @property
    @abstractmethod
    def rail_step(self):
        """Largest internal-variable change taken per step when probing condition (*)"""
        pass
