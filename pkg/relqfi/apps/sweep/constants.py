from enum import Enum


class SweepQuantity(str, Enum):
    PEAK_RADIUS = 'peak_radius'
    OMEGA_VS_LAMBDA = 'omega_vs_lambda'
    LAMBDA_STAR_VS_V = 'lambda_star_vs_V'
    OMEGA0_VS_KAPPA = 'omega0_vs_kappa'

    @classmethod
    def needs_lambda(cls, quantity):
        return quantity == SweepQuantity.OMEGA_VS_LAMBDA


class OutputFormat(str, Enum):
    CSV = 'csv'
    JSON = 'json'
    SVG = 'svg'


UNITS = {
    'kappa_prime': '1',
    'velocity': 'c',
    'lambda': '1',
    'peak_radius': 'length',
    'omega': 'length^2',
    'lambda_star': '1',
    'omega_limit0': 'length^2',
}

# output columns, abscissa, ordinate and the columns that label one series
LAYOUTS = {
    SweepQuantity.PEAK_RADIUS: (
        ('kappa_prime', 'velocity', 'peak_radius'),
        'velocity',
        'peak_radius',
        ('kappa_prime',),
    ),
    SweepQuantity.OMEGA_VS_LAMBDA: (
        ('kappa_prime', 'velocity', 'lambda', 'omega'),
        'lambda',
        'omega',
        ('kappa_prime', 'velocity'),
    ),
    SweepQuantity.LAMBDA_STAR_VS_V: (
        ('kappa_prime', 'velocity', 'lambda_star'),
        'velocity',
        'lambda_star',
        ('kappa_prime',),
    ),
    SweepQuantity.OMEGA0_VS_KAPPA: (
        ('velocity', 'kappa_prime', 'omega_limit0'),
        'kappa_prime',
        'omega_limit0',
        ('velocity',),
    ),
}
