"""Non-perturbative transitions of hydrogen in a circularly polarized laser.

The rotating-frame pseudo-Hamiltonian of the atom-plus-field system is
assembled on a truncated bound basis, diagonalized exactly, and the
resulting dressed states yield time-averaged bound-bound transition
probabilities and above-threshold photoionization observables with, in
general, a non-integer effective photon number.
"""

__version__ = "0.1.0"

from .basis import (
    BasisSet,
    QuantumNumbers,
    angular_x,
    bound_energy,
    enumerate_basis,
    overlap,
    px_matrix_element,
    radial_length_integral,
    radial_wavefunction,
    x_matrix_element,
)
from .eigensolver import (
    DEGENERACY_GAP,
    EigenDecomposition,
    TrackedState,
    diagonalize,
    track_state,
)
from .errors import ConfigurationError, ConvergenceError, DomainError
from .hamiltonian import (
    LaserField,
    PseudoHamiltonianMatrix,
    assemble,
    diagonal_shift,
    load_matrix_entries,
)
from .ionization import (
    ContinuumState,
    IonizationRecord,
    bound_free_element,
    cross_section,
    eta_index,
    ionization_intensity_scan,
    ionization_rate,
    ionization_records,
    photoelectron_energy,
)
from .specfun import (
    AppellF2Params,
    KummerParams,
    appell_f2,
    coulomb_radial,
    gamma_fn,
    kummer_1f1,
    laplace_1f1_product,
)
from .transitions import (
    ScanPoint,
    ScanResult,
    TransitionTable,
    averaged_probability,
    intensity_scan,
    spectrum_scan,
    time_resolved_probability,
    transition_table,
)
from .units import (
    BINDING_ENERGY_AU,
    CONSTANTS,
    PhysicalConstants,
    UnitSystem,
    convert_energy,
    convert_vector_potential,
)

__all__ = [
    "__version__",
    "BasisSet",
    "QuantumNumbers",
    "angular_x",
    "bound_energy",
    "enumerate_basis",
    "overlap",
    "px_matrix_element",
    "radial_length_integral",
    "radial_wavefunction",
    "x_matrix_element",
    "DEGENERACY_GAP",
    "EigenDecomposition",
    "TrackedState",
    "diagonalize",
    "track_state",
    "ConfigurationError",
    "ConvergenceError",
    "DomainError",
    "LaserField",
    "PseudoHamiltonianMatrix",
    "assemble",
    "diagonal_shift",
    "load_matrix_entries",
    "ContinuumState",
    "IonizationRecord",
    "bound_free_element",
    "cross_section",
    "eta_index",
    "ionization_intensity_scan",
    "ionization_rate",
    "ionization_records",
    "photoelectron_energy",
    "AppellF2Params",
    "KummerParams",
    "appell_f2",
    "coulomb_radial",
    "gamma_fn",
    "kummer_1f1",
    "laplace_1f1_product",
    "ScanPoint",
    "ScanResult",
    "TransitionTable",
    "averaged_probability",
    "intensity_scan",
    "spectrum_scan",
    "time_resolved_probability",
    "transition_table",
    "BINDING_ENERGY_AU",
    "CONSTANTS",
    "PhysicalConstants",
    "UnitSystem",
    "convert_energy",
    "convert_vector_potential",
]
