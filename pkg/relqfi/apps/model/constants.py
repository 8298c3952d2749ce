import math

SQRT2 = math.sqrt(2)
SQRT_PI = math.sqrt(math.pi)

# below this distance from V = 1 the boost factors overflow and the
# relativistic closed forms are used instead of quadrature
NEAR_LIGHT_SPEED_BAND = 1e-9

ZETA_REL_AT_REST_MASS = math.sqrt(2 * math.pi) / 4
