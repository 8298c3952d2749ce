from enum import Enum

import numpy as np


class VerifyLevel(str, Enum):
    FAST = 'fast'
    FULL = 'full'

    @classmethod
    def includes(cls, level, required):
        return level == VerifyLevel.FULL or required == VerifyLevel.FAST


KAPPA_GRID = np.linspace(0.05, 5, 20)
VELOCITY_GRID = np.linspace(0.05, 0.99, 20)

FIM_LAMBDAS = (0.0, 0.3, -0.3, 0.7, -0.7, 0.99, -0.99)
FIM_POINTS = tuple((k, v) for k in (0.1, 1.0, 3.0) for v in (0.2, 0.8, 1.0))

ORACLE_POINTS = ((0.5, 0.3), (1.0, 0.5), (2.0, 0.9))
ORACLE_LAMBDAS = (0.0, 0.3, 0.7)

RELATIVISTIC_KAPPAS = (0.1, 0.5, 1.0, 2.0, 5.0)
