"""Assembly of the rotating-frame pseudo-Hamiltonian matrix.

In the i^l-phased truncated bound basis the matrix is real symmetric:

    diagonal:      E_n + mu*omega + A^2/2
    off-diagonal:  A * <a|p_x|b>   (only for |dl| = 1 and |dmu| = 1)

All quantities in atomic units.  The dipole (k*a0 << 1) coupling is used;
the A^2/2 ponderomotive-type constant is kept on the diagonal by default
because it drives the intensity dependence of the pseudo-energies, and can
be dropped for sensitivity studies.
"""

import struct
from dataclasses import dataclass, replace

import numpy as np

from .basis import (
    BasisSet,
    QuantumNumbers,
    angular_x,
    bound_energy,
    radial_length_integral,
)
from .errors import ConfigurationError
from .units import CONSTANTS


@dataclass(frozen=True)
class LaserField:
    """Circularly polarized laser: amplitude A, frequency omega, wavenumber k.

    All in atomic units; k defaults to omega/c = omega*alpha.
    """

    amplitude_A: float
    omega: float
    k: float = None

    def __post_init__(self):
        if self.amplitude_A < 0:
            raise ConfigurationError("amplitude_A must be >= 0")
        if self.omega <= 0:
            raise ConfigurationError("omega must be > 0")
        if self.k is None:
            object.__setattr__(
                self, "k", self.omega * CONSTANTS.fine_structure_alpha
            )


@dataclass(frozen=True)
class PseudoHamiltonianMatrix:
    dimension: int
    entries: np.ndarray
    basis: BasisSet
    laser: LaserField

    def dump(self, path):
        """Binary dump: int64 LE dimension, then the row-major lower
        triangle (diagonal included) as little-endian float64."""
        lower = self.entries[np.tril_indices(self.dimension)]
        with open(path, "wb") as fh:
            fh.write(struct.pack("<q", self.dimension))
            fh.write(lower.astype("<f8").tobytes())


def load_matrix_entries(path) -> np.ndarray:
    """Read back a matrix written by PseudoHamiltonianMatrix.dump."""
    with open(path, "rb") as fh:
        (dim,) = struct.unpack("<q", fh.read(8))
        lower = np.frombuffer(fh.read(), dtype="<f8")
    out = np.zeros((dim, dim))
    out[np.tril_indices(dim)] = lower
    return out + np.tril(out, -1).T


def assemble(
    basis: BasisSet, laser: LaserField, include_a2: bool = True
) -> PseudoHamiltonianMatrix:
    """Build the real symmetric pseudo-Hamiltonian in the given basis."""
    if len(basis) == 0:
        raise ConfigurationError("basis must be nonempty")
    dim = len(basis)
    h = np.zeros((dim, dim))
    a2_shift = 0.5 * laser.amplitude_A**2 if include_a2 else 0.0
    for i, s in enumerate(basis.states):
        h[i, i] = bound_energy(s.n) + s.mu * laser.omega + a2_shift
    if laser.amplitude_A != 0.0:
        _fill_coupling(h, basis, laser.amplitude_A)
    return PseudoHamiltonianMatrix(
        dimension=dim, entries=h, basis=basis, laser=laser
    )


def _fill_coupling(h: np.ndarray, basis: BasisSet, amplitude: float) -> None:
    # Walk (n1,l1) x (n2,l2=l1+1) blocks so each radial integral is
    # computed once and reused across all mu pairs of the block.
    n0 = basis.n0
    for n1 in range(1, n0 + 1):
        for l1 in range(n1):
            e1 = bound_energy(n1)
            for n2 in range(1, n0 + 1):
                l2 = l1 + 1
                if l2 > n2 - 1 or n1 == n2:
                    continue
                e2 = bound_energy(n2)
                radial = radial_length_integral(n1, l1, n2, l2)
                for mu1 in range(-l1, l1 + 1):
                    i = basis.index[QuantumNumbers(n1, l1, mu1)]
                    for mu2 in (mu1 - 1, mu1 + 1):
                        if abs(mu2) > l2:
                            continue
                        j = basis.index[QuantumNumbers(n2, l2, mu2)]
                        # px(a,b) = (E_b - E_a) * X(a,b); here a=(n1,l1,mu1)
                        # has the lower l, so X = angular * radial.
                        x_ab = angular_x(l1, mu1, l2, mu2) * radial
                        val = amplitude * (e2 - e1) * x_ab
                        h[i, j] = val
                        h[j, i] = val


def diagonal_shift(
    matrix: PseudoHamiltonianMatrix, delta: float
) -> PseudoHamiltonianMatrix:
    """Shift all diagonal entries by delta (eigenvalues shift by delta)."""
    entries = matrix.entries.copy()
    entries[np.diag_indices(matrix.dimension)] += delta
    return replace(matrix, entries=entries)
