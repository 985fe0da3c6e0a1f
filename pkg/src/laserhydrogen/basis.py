"""Truncated hydrogen bound-state basis and one-electron matrix elements.

States are labelled by (n, l, mu) and carry the i^l phase convention
(Condon-Shortley spherical harmonics), which makes every matrix element of
the rotating-frame Hamiltonian real.  In that convention the momentum
operator p_x has a real symmetric representation while x has the form
i * X with X real and antisymmetric; `x_matrix_element` returns X, so the
exact commutator relation

    px_matrix_element(a, b) == (E_b - E_a) * x_matrix_element(a, b)

holds in atomic units.  Radial integrals are evaluated in closed form
through the Laplace transform of a product of two terminating Kummer
series, in exact rational arithmetic; quadrature on `RadialGrid` is kept
for validation.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConfigurationError
from .specfun import KummerParams, laplace_1f1_product

N0_CAP = 30


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    """Bound-state label (n, l, mu)."""

    n: int
    l: int
    mu: int

    def __post_init__(self):
        if self.n < 1:
            raise ConfigurationError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise ConfigurationError(f"l={self.l} outside [0, {self.n - 1}]")
        if abs(self.mu) > self.l:
            raise ConfigurationError(f"|mu|={abs(self.mu)} exceeds l={self.l}")


@dataclass(frozen=True)
class BasisSet:
    """All (n, l, mu) with n <= n0, in ascending (n, l, mu) order."""

    n0: int
    states: tuple
    index: dict = field(repr=False)

    def __len__(self):
        return len(self.states)

    def position(self, state: QuantumNumbers) -> int:
        return self.index[state]

    def __contains__(self, state):
        return state in self.index


def enumerate_basis(n0: int) -> BasisSet:
    if not 1 <= n0 <= N0_CAP:
        raise ConfigurationError(f"n0 must be in [1, {N0_CAP}], got {n0}")
    states = tuple(
        QuantumNumbers(n, l, mu)
        for n in range(1, n0 + 1)
        for l in range(n)
        for mu in range(-l, l + 1)
    )
    index = {s: i for i, s in enumerate(states)}
    return BasisSet(n0=n0, states=states, index=index)


def bound_energy(n: int, mass_factor: float = 1.0) -> float:
    """Hydrogen bound-state energy -1/(2 n^2) hartree."""
    if n < 1:
        raise ConfigurationError(f"n must be >= 1, got {n}")
    return -mass_factor / (2.0 * n * n)


# --- radial wavefunctions and quadrature --------------------------------

@lru_cache(maxsize=1024)
def _radial_poly_coeffs(n: int, l: int):
    """Coefficients of the terminating Kummer F(l+1-n, 2l+2, t) in t."""
    a, c = l + 1 - n, 2 * l + 2
    coeffs = [1.0]
    for j in range(n - l - 1):
        coeffs.append(coeffs[-1] * (a + j) / ((c + j) * (j + 1)))
    return tuple(coeffs)


@lru_cache(maxsize=1024)
def _radial_norm(n: int, l: int) -> float:
    norm_sq = (
        Fraction(2, n) ** (2 * l + 3)
        * Fraction(math.factorial(n + l), 2 * n * math.factorial(n - l - 1))
        / math.factorial(2 * l + 1) ** 2
    )
    return math.sqrt(norm_sq)


def radial_wavefunction(n: int, l: int, r):
    """Normalized radial function R_nl(r), int R^2 r^2 dr = 1."""
    r = np.asarray(r, dtype=float)
    t = 2.0 * r / n
    poly = np.zeros_like(t)
    for c in reversed(_radial_poly_coeffs(n, l)):
        poly = poly * t + c
    out = _radial_norm(n, l) * r ** l * np.exp(-r / n) * poly
    return out if out.shape else float(out)


@dataclass(frozen=True)
class RadialGrid:
    """Gauss-Laguerre nodes/weights for integrals over [0, inf)."""

    nodes: np.ndarray
    weights: np.ndarray
    scale: float

    def integrate(self, values) -> float:
        return float(np.dot(self.weights, values))


def make_radial_grid(order: int, scale: float = 1.0) -> RadialGrid:
    """Grid exact for e^{-scale*r} times polynomials of degree <= 2*order-1."""
    x, w = np.polynomial.laguerre.laggauss(order)
    return RadialGrid(nodes=x / scale, weights=w * np.exp(x) / scale, scale=scale)


def _pair_grid(n1: int, n2: int, extra_degree: int = 0) -> RadialGrid:
    order = 4 * max(n1, n2) + 20 + extra_degree
    return make_radial_grid(order, scale=1.0 / n1 + 1.0 / n2)


def overlap(a: QuantumNumbers, b: QuantumNumbers) -> float:
    """Quadrature overlap <a|b>; angular part handled exactly."""
    if (a.l, a.mu) != (b.l, b.mu):
        return 0.0
    grid = _pair_grid(a.n, b.n)
    r = grid.nodes
    vals = radial_wavefunction(a.n, a.l, r) * radial_wavefunction(b.n, b.l, r) * r**2
    return grid.integrate(vals)


# --- angular factors of x ------------------------------------------------

def _raise_up(l, mu):
    # coefficient of Y_{l+1,mu+1} in sin(theta) e^{i phi} Y_{l,mu}
    return -math.sqrt((l + mu + 1) * (l + mu + 2) / ((2 * l + 1) * (2 * l + 3)))


def _raise_down(l, mu):
    # coefficient of Y_{l-1,mu+1} in sin(theta) e^{i phi} Y_{l,mu}
    return math.sqrt((l - mu) * (l - mu - 1) / ((2 * l - 1) * (2 * l + 1)))


def angular_x(l_bra: int, mu_bra: int, l_ket: int, mu_ket: int) -> float:
    """<Y_{l' mu'}| sin(theta) cos(phi) |Y_{l mu}> (Condon-Shortley)."""
    dl, dmu = l_bra - l_ket, mu_bra - mu_ket
    if abs(dl) != 1 or abs(dmu) != 1:
        return 0.0
    l, mu = l_ket, mu_ket
    if dmu == 1:
        return 0.5 * (_raise_up(l, mu) if dl == 1 else _raise_down(l, mu))
    # sin(theta) e^{-i phi} coefficients follow by mu -> -mu symmetry
    return 0.5 * (-_raise_up(l, -mu) if dl == 1 else -_raise_down(l, -mu))


# --- radial integrals, closed form ---------------------------------------

@lru_cache(maxsize=None)
def radial_length_integral(n1: int, l1: int, n2: int, l2: int) -> float:
    """int_0^inf R_{n1 l1}(r) r R_{n2 l2}(r) r^2 dr, exact closed form.

    Both Kummer series terminate, so the Appell F2 in the Laplace identity
    is a finite double polynomial; it is summed in exact rational
    arithmetic to avoid the cancellation that plagues large-n hydrogen
    integrals in floating point.
    """
    u = l1 + l2 + 4
    s = Fraction(n1 + n2, 2 * n1)
    q = Fraction(n2, n1)
    k1 = KummerParams(l2 + 1 - n2, 2 * l2 + 2)
    k2 = KummerParams(l1 + 1 - n1, 2 * l1 + 2)
    core = Fraction(n2, 2) ** u * laplace_1f1_product(s, u, k1, k2, q)
    norm_sq = (
        Fraction(2, n1) ** (2 * l1 + 3)
        * Fraction(math.factorial(n1 + l1), 2 * n1 * math.factorial(n1 - l1 - 1))
        / math.factorial(2 * l1 + 1) ** 2
        * Fraction(2, n2) ** (2 * l2 + 3)
        * Fraction(math.factorial(n2 + l2), 2 * n2 * math.factorial(n2 - l2 - 1))
        / math.factorial(2 * l2 + 1) ** 2
    )
    return math.sqrt(norm_sq) * float(core)


def x_matrix_element(a: QuantumNumbers, b: QuantumNumbers) -> float:
    """Real representative X of <a|x|b> in the i^l convention.

    The phased matrix element is i*X; X is antisymmetric under a <-> b
    (the operator itself stays Hermitian).
    """
    if abs(a.l - b.l) != 1 or abs(a.mu - b.mu) != 1:
        return 0.0
    radial = radial_length_integral(a.n, a.l, b.n, b.l)
    u = angular_x(a.l, a.mu, b.l, b.mu) * radial
    return -u if a.l == b.l + 1 else u


def px_matrix_element(a: QuantumNumbers, b: QuantumNumbers) -> float:
    """Real matrix element <a|p_x|b> in the i^l convention (symmetric).

    Evaluated through the exact commutator route p_x = i[H0, x] between
    bound Coulomb eigenstates; vanishes identically for degenerate pairs.
    """
    if abs(a.l - b.l) != 1 or abs(a.mu - b.mu) != 1:
        return 0.0
    if a.n == b.n:
        return 0.0
    return (bound_energy(b.n) - bound_energy(a.n)) * x_matrix_element(a, b)
