import logging
import math
from collections.abc import Callable

from relqfi.core.exceptions import NoSignChange, NonConvergence

logger = logging.getLogger(__name__)

EPS = 2.220446049250313e-16
INVERSE_GOLDEN = (math.sqrt(5) - 1) / 2
MAX_ITERATIONS = 500


def _extrapolate(fcur, fpre, fblk, dpre, dblk):
    return -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))


def find_root_bracketed(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> float:
    """Brent's method on a sign-changing bracket.

    Inverse quadratic interpolation or secant steps are taken when they stay
    inside the bracket and shrink fast enough; otherwise the bracket is
    bisected, so convergence is guaranteed.
    """
    xpre, xcur = float(lo), float(hi)
    fpre, fcur = f(xpre), f(xcur)

    if not fpre * fcur < 0:
        raise NoSignChange(lo=lo, hi=hi, f_lo=fpre, f_hi=fcur)

    xblk, fblk, spre, scur = 0.0, 0.0, 0.0, 0.0
    for iteration in range(MAX_ITERATIONS):
        if fpre * fcur < 0:
            xblk, fblk = xpre, fpre
            spre = scur = xcur - xpre

        if abs(fblk) < abs(fcur):
            xpre, xcur, xblk = xcur, xblk, xcur
            fpre, fcur, fblk = fcur, fblk, fcur

        delta = (tol + 2 * EPS * abs(xcur)) / 2
        sbis = (xblk - xcur) / 2
        if fcur == 0 or abs(sbis) < delta:
            logger.debug('root %.17g after %d iterations', xcur, iteration)
            return xcur

        if abs(spre) > delta and abs(fcur) < abs(fpre):
            if xpre == xblk:
                stry = -fcur * (xcur - xpre) / (fcur - fpre)
            else:
                dpre = (fpre - fcur) / (xpre - xcur)
                dblk = (fblk - fcur) / (xblk - xcur)
                stry = _extrapolate(fcur, fpre, fblk, dpre, dblk)

            if 2 * abs(stry) < min(abs(spre), 3 * abs(sbis) - delta):
                spre, scur = scur, stry
            else:
                spre = scur = sbis
        else:
            spre = scur = sbis

        xpre, fpre = xcur, fcur
        if abs(scur) > delta:
            xcur += scur
        else:
            xcur += delta if sbis > 0 else -delta
        fcur = f(xcur)

    raise NonConvergence('root finder exhausted its iterations.', lo=lo, hi=hi)


def maximize_unimodal(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10
) -> tuple[float, float]:
    """Golden-section search for the maximum of a unimodal function."""
    a, b = float(lo), float(hi)
    c = b - INVERSE_GOLDEN * (b - a)
    d = a + INVERSE_GOLDEN * (b - a)
    fc, fd = f(c), f(d)

    while abs(b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INVERSE_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVERSE_GOLDEN * (b - a)
            fd = f(d)

    argmax = (a + b) / 2
    return argmax, f(argmax)
