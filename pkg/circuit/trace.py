from dataclasses import dataclass, field

import pandas as pd

from core.errors import CircuitError


@dataclass
class Trace:
    """
    Time series recorded by a transient gate simulation

    Parameters:
    times (list): Step end times in seconds, strictly increasing
    z (list): Output voltage after each step
    m1 (list): Memristance of the first device after each step
    m2 (list): Memristance of the second device after each step
    """
    times: list = field(default_factory=list)
    z: list = field(default_factory=list)
    m1: list = field(default_factory=list)
    m2: list = field(default_factory=list)

    def __post_init__(self):
        lengths = {len(self.times), len(self.z), len(self.m1), len(self.m2)}
        if len(lengths) != 1:
            raise CircuitError(f"Trace columns differ in length: {sorted(lengths)}")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise CircuitError("Trace times must be strictly increasing")

    def __len__(self):
        return len(self.times)

    @property
    def final_z(self):
        return self.z[-1] if self.z else None

    def to_frame(self):
        return pd.DataFrame({'t': self.times, 'z': self.z, 'm1': self.m1, 'm2': self.m2})

    def to_csv(self, path_or_buffer):
        """
        Write the trace as CSV with header t,z,m1,m2 at full double precision

        Parameters:
        path_or_buffer (str or file): Destination
        """
        self.to_frame().to_csv(path_or_buffer, index=False, float_format='%.17g', lineterminator='\n')

    def settling_time(self, tolerance, initial_z=None):
        """
        Earliest time after which z stays within tolerance of its final value

        Parameters:
        tolerance (float): Absolute band around the final output voltage
        initial_z (float): Output at t = 0, before the first step (optional)

        Returns:
        float: Settling time in seconds; 0.0 if the output never left the band
        """
        if not self.z:
            return 0.0
        final = self.z[-1]
        settled_from = len(self.z) - 1
        for index in range(len(self.z) - 1, -1, -1):
            if abs(self.z[index] - final) > tolerance:
                return self.times[settled_from]
            settled_from = index
        if initial_z is not None and abs(initial_z - final) <= tolerance:
            return 0.0
        return self.times[0]
