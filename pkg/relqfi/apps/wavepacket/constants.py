import math

# Gaussian e^{-kappa^2 p^2 / 2} decays on the scale sqrt(2) / kappa
MOMENTUM_CUTOFF = 9.0
DECAY_SCALE_IN_KAPPA = math.sqrt(2)

DIRECT_RADIAL_NODES = 384
DIRECT_ANGULAR_NODES = 256

PEAK_SCAN_POINTS = 256
PEAK_SCAN_RANGE_IN_KAPPA = 10.0
FINITE_DIFFERENCE_STEP_IN_KAPPA = 1e-4

# |direct 2D amplitude|^2 / |radial amplitude|^2
DIRECT_TO_RADIAL_DENSITY = 4 * math.pi**2
