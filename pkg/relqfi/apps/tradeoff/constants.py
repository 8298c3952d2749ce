from enum import Enum


class RegionClass(str, Enum):
    ALLOWED_BY_BOTH = 'allowed-by-both'
    EXCLUDED_BY_SLD = 'excluded-by-sld'
    EXCLUDED_BY_LAMBDA_ONLY = 'excluded-by-lambda-only'

    @classmethod
    def is_allowed(cls, region):
        return region == RegionClass.ALLOWED_BY_BOTH


LAMBDA_GRID_POINTS = 100
DENOMINATOR_FLOOR = 1e-14
PEAK_SCAN_POINTS = 256
