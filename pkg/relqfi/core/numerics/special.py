"""Special functions used by the model integrals and the wave packet."""

import math

import numpy as np

from relqfi.core.exceptions import InvalidDomain

SQRT_PI = math.sqrt(math.pi)

SERIES_LIMIT = 2.5
MAX_FRACTION_TERMS = 10_000
FRACTION_TOLERANCE = 1e-16

BESSEL_SERIES_LIMIT = 8.0
BESSEL_ASYMPTOTIC_LIMIT = 25.0
BESSEL_MILLER_START = 70


def _scalar_or_array(values, like):
    if np.ndim(like) == 0:
        return float(values)
    return values


def _erf_series(x: float) -> float:
    # erf(x) = 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (2n+1)!!, all terms positive
    term = x
    total = x
    square = x * x
    n = 0
    while abs(term) > 1e-17 * abs(total):
        n += 1
        term *= 2 * square / (2 * n + 1)
        total += term
    return 2 / SQRT_PI * math.exp(-square) * total


def _erfcx_fraction(x: float) -> float:
    # modified Lentz on x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...)))
    tiny = 1e-300
    value = x
    c = x
    d = 0.0
    for n in range(1, MAX_FRACTION_TERMS + 1):
        a = n / 2
        d = x + a * d
        d = tiny if d == 0 else d
        d = 1 / d
        c = x + a / c
        c = tiny if c == 0 else c
        delta = c * d
        value *= delta
        if abs(delta - 1) < FRACTION_TOLERANCE:
            break
    return 1 / (SQRT_PI * value)


def _erfcx_scalar(x: float) -> float:
    if math.isnan(x):
        return math.nan
    if x < SERIES_LIMIT:
        if x < -26.0:
            return math.inf
        square = x * x
        return math.exp(square) * (1 - _erf_series(x))
    return _erfcx_fraction(x)


def _erfc_scalar(x: float) -> float:
    if math.isnan(x):
        return math.nan
    if x < 0:
        return 2 - _erfc_scalar(-x)
    if x < SERIES_LIMIT:
        return 1 - _erf_series(x)
    if x > 27.3:
        return 0.0
    return math.exp(-x * x) * _erfcx_fraction(x)


def erfc(x):
    """Complementary error function, accurate to about 1e-16 absolute."""
    values = np.vectorize(_erfc_scalar, otypes=[float])(x)
    return _scalar_or_array(values, x)


def erfcx(x):
    """Scaled complementary error function e^{x^2} erfc(x)."""
    values = np.vectorize(_erfcx_scalar, otypes=[float])(x)
    return _scalar_or_array(values, x)


def _j1_series(x: np.ndarray) -> np.ndarray:
    half = x / 2
    square = -half * half
    term = half.copy()
    total = half.copy()
    for k in range(1, 40):
        term = term * square / (k * (k + 1))
        total = total + term
    return total


def _j1_miller(x: np.ndarray) -> np.ndarray:
    start = BESSEL_MILLER_START
    upper = np.zeros_like(x)
    current = np.full_like(x, 1e-30)
    norm = np.zeros_like(x)
    order_one = np.zeros_like(x)

    for k in range(start, 0, -1):
        lower = 2 * k / x * current - upper
        upper, current = current, lower
        order = k - 1
        if order == 1:
            order_one = current.copy()
        if order > 0 and order % 2 == 0:
            norm = norm + 2 * current
        big = np.abs(current) > 1e250
        if big.any():
            scale = np.where(big, 1e-250, 1.0)
            upper, current = upper * scale, current * scale
            norm, order_one = norm * scale, order_one * scale

    norm = norm + current
    return order_one / norm


def _j1_asymptotic(x: np.ndarray) -> np.ndarray:
    mu = 4.0
    eight_x = 8 * x
    p = np.ones_like(x)
    q = np.zeros_like(x)
    term = np.ones_like(x)
    for k in range(1, 30):
        term = term * (mu - (2 * k - 1) ** 2) / (k * eight_x)
        sign = (-1) ** (k // 2)
        if k % 2:
            q = q + sign * term
        else:
            p = p + sign * term
        if np.all(np.abs(term) < 1e-17):
            break
    omega = x - 0.75 * math.pi
    return np.sqrt(2 / (math.pi * x)) * (p * np.cos(omega) - q * np.sin(omega))


def bessel_j1(x):
    """Bessel function of the first kind of order one for x >= 0.

    Power series below 8, Miller backward recurrence normalized by
    J0 + 2 sum J_2k = 1 up to 25, Hankel asymptotic expansion above.
    """
    values = np.asarray(x, dtype=float)
    if np.any(values < 0) or np.any(~np.isfinite(values)):
        raise InvalidDomain('bessel_j1 requires finite x >= 0.')

    flat = values.ravel()
    result = np.zeros_like(flat)

    small = flat < BESSEL_SERIES_LIMIT
    middle = (flat >= BESSEL_SERIES_LIMIT) & (flat < BESSEL_ASYMPTOTIC_LIMIT)
    large = flat >= BESSEL_ASYMPTOTIC_LIMIT

    if small.any():
        result[small] = _j1_series(flat[small])
    if middle.any():
        result[middle] = _j1_miller(flat[middle])
    if large.any():
        result[large] = _j1_asymptotic(flat[large])

    return _scalar_or_array(result.reshape(values.shape), x)
