from .params import DeviceModel, DeviceParams, DeviceState, MEfficiency
from .base import MemristorModel
from .ideal_bilevel import IdealBilevelModel, sigmoid
from .exponential_switching import ExponentialSwitchingModel
from .operations import (
    model_for,
    memristance,
    step_device,
    near_rail,
    condition_star_horizon,
    satisfies_condition_star,
    switching_slowdown,
    max_stable_dt,
)

__all__ = ['DeviceModel', 'DeviceParams', 'DeviceState', 'MEfficiency', 'MemristorModel',
           'IdealBilevelModel', 'ExponentialSwitchingModel', 'sigmoid', 'model_for',
           'memristance', 'step_device', 'near_rail', 'condition_star_horizon',
           'satisfies_condition_star', 'switching_slowdown', 'max_stable_dt']
