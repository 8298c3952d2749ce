import numpy as np

from relqfi.apps.fisher.schema import FiniteModel

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)


def qubit_rotation_model(population: float) -> FiniteModel:
    """rho = diag(population, 1 - population) rotated by exp(-i theta sigma_x / 2)."""
    rho = np.diag([population, 1 - population]).astype(complex)
    generator = PAULI_X / 2
    drho = -1j * (generator @ rho - rho @ generator)
    return FiniteModel(rho=rho, drho=(drho,))


def rld_fim_direct(model: FiniteModel) -> np.ndarray:
    inverse = np.linalg.inv(model.rho)
    return np.array(
        [[np.trace(dn @ dm @ inverse) for dn in model.drho] for dm in model.drho]
    )
