"""Dense symmetric eigendecomposition of the pseudo-Hamiltonian.

Produces the pseudo-energies E_i (ascending) and the real coefficient
matrix C, column i holding the expansion of the dressed state phi_i over
the bound basis.  Output is made deterministic by fixing each column's
sign so its largest-magnitude component is positive.
"""

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .basis import BasisSet, QuantumNumbers
from .errors import ConfigurationError, ConvergenceError
from .hamiltonian import PseudoHamiltonianMatrix

DEGENERACY_GAP = 1e-10


@dataclass(frozen=True)
class EigenDecomposition:
    """Pseudo-energies and real dressed-state coefficients.

    coefficients[j, i] = C of basis state j in dressed state i; columns are
    orthonormal and rows are orthonormal (C is orthogonal).
    """

    energies: np.ndarray
    coefficients: np.ndarray
    basis: BasisSet

    @property
    def dimension(self) -> int:
        return len(self.energies)

    def near_degenerate_pairs(self, gap: float = DEGENERACY_GAP):
        """Indices i with energies[i+1] - energies[i] < gap."""
        return np.nonzero(np.diff(self.energies) < gap)[0]


@dataclass(frozen=True)
class TrackedState:
    """Dressed state continuously connected to a bare basis state."""

    index: int
    overlap: float  # squared coefficient of the target bare state
    ambiguous: bool  # True when the bare state is strongly mixed


def diagonalize(matrix: PseudoHamiltonianMatrix) -> EigenDecomposition:
    """Full spectrum of the real symmetric pseudo-Hamiltonian."""
    h = matrix.entries
    if not np.array_equal(h, h.T):
        raise ConfigurationError("pseudo-Hamiltonian matrix must be symmetric")
    try:
        energies, vectors = scipy.linalg.eigh(h)
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    # Sign fix: largest-magnitude component of each column positive.
    pivot = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivot, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    vectors = vectors * signs
    return EigenDecomposition(
        energies=energies, coefficients=vectors, basis=matrix.basis
    )


def track_state(
    decomp: EigenDecomposition, target: QuantumNumbers
) -> TrackedState:
    """Dressed state with maximal overlap on the bare target state.

    Ties are broken toward lower pseudo-energy.  Overlap below 0.5 marks
    the assignment as ambiguous (state strongly mixed).
    """
    if target not in decomp.basis:
        raise ConfigurationError(f"{target} not in basis (n0={decomp.basis.n0})")
    row = decomp.coefficients[decomp.basis.position(target), :] ** 2
    best = int(np.argmax(row))  # argmax returns the first (lowest-energy) max
    overlap = float(row[best])
    ambiguous = overlap < 0.5
    if ambiguous:
        warnings.warn(
            f"state {target} is strongly mixed (max overlap {overlap:.3f})",
            stacklevel=2,
        )
    return TrackedState(index=best, overlap=overlap, ambiguous=ambiguous)
