import numpy as np
import pytest

from laserhydrogen import LaserField, assemble, diagonalize, enumerate_basis


@pytest.fixture(scope="session")
def basis5():
    return enumerate_basis(5)


@pytest.fixture(scope="session")
def decomp5(basis5):
    """Strong-field decomposition on a small basis, shared across tests."""
    laser = LaserField(0.4, 0.018)
    return diagonalize(assemble(basis5, laser)), laser


def w_matrix(decomp) -> np.ndarray:
    """Full time-averaged transition matrix W(a, b) = sum_i C_a^2 C_b^2."""
    c2 = decomp.coefficients**2
    return c2 @ c2.T
