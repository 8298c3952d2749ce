EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class RelqfiError(Exception):
    exit_code: int = EXIT_NUMERICAL
    default_detail: str = 'numerical failure.'

    def __init__(self, detail: str | None = None, **context):
        self.detail = detail or self.default_detail
        self.context = context
        super().__init__(self.detail)

    def __str__(self):
        if not self.context:
            return self.detail
        context = ', '.join(f'{key}={value!r}' for key, value in self.context.items())
        return f'{self.detail} ({context})'


class ParameterError(RelqfiError):
    exit_code = EXIT_USAGE
    default_detail = 'invalid parameter.'


class InvalidDomain(ParameterError):
    default_detail = 'argument outside of the function domain.'


class LambdaOutOfRange(ParameterError):
    default_detail = 'lambda must satisfy |lambda| < 1 for a rank-deficient model.'


class RldUndefined(ParameterError):
    default_detail = 'right logarithmic derivative does not exist for a rank-deficient state.'


class DivisionByZero(ParameterError):
    default_detail = 'expression undefined at V = 0.'


class NumericalError(RelqfiError):
    exit_code = EXIT_NUMERICAL


class NonConvergence(NumericalError):
    default_detail = 'quadrature did not reach the requested tolerance.'


class NoSignChange(NumericalError):
    default_detail = 'function does not change sign on the bracket.'


class DegenerateInput(NumericalError):
    default_detail = 'all input vectors are numerically zero.'


class EigenFailure(NumericalError):
    default_detail = 'matrix is not hermitian.'


class GridTooCoarse(NumericalError):
    default_detail = 'grid does not resolve the state normalization.'


class InvariantViolation(NumericalError):
    default_detail = 'computed value breaks a proven model inequality.'


class RadicandNegative(NumericalError):
    default_detail = 'negative radicand in the threshold formula.'


class DegenerateDenominator(NumericalError):
    default_detail = 'indicator denominator is numerically zero.'


class ZeroDenominator(NumericalError):
    default_detail = 'sld and lambda bounds coincide on a diagonal entry.'


class NoPeak(NumericalError):
    default_detail = 'density is monotone on the scan range.'


class NearLightSpeedWarning(UserWarning):
    pass
