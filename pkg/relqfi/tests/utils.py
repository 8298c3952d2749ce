import numpy as np


def relative_frobenius(actual, expected) -> float:
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    return float(np.linalg.norm(actual - expected) / np.linalg.norm(expected))


def assert_hermitian_psd(matrix, tolerance=1e-10):
    matrix = np.asarray(matrix)
    scale = max(np.abs(matrix).max(), 1.0)
    assert np.abs(matrix - matrix.conj().T).max() < tolerance * scale
    assert np.linalg.eigvalsh(matrix).min() > -tolerance * scale


def assert_strictly_decreasing(values):
    assert np.all(np.diff(np.asarray(values)) < 0)
