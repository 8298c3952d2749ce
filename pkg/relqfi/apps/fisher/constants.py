from enum import Enum


class MatrixUnit(str, Enum):
    FISHER = '1/length^2'
    INVERSE = 'length^2'
