"""Fourier transforms of Hadamard matrices and systems over the dual group Z^d.

A matrix is viewed as the d-element subset of T^d formed by its columns.
``matrix_fourier`` evaluates the transform of that subset at a character
gamma; ``system_fourier`` sums over all matrices of a system.  Two kinds of
energy appear throughout:

* incoherent: the sum of per-matrix squared moduli (each matrix on its own),
* coherent:   the squared modulus of the full system sum (matrices
  interfering with each other).

Orthogonality of rows and unbiasedness between matrices turn into linear
identities relating shifted values of these energies; the ``check_*``
functions verify those identities, exactly on exact inputs.
"""
from __future__ import annotations

import itertools
import math
import threading

import mpmath

from .cyclo import CyclotomicInteger
from .exponents import pi, shift
from .hadamard import EXACT, DEFAULT_TOL, HadamardMatrix, MuhSystem
from .phases import DEFAULT_DPS

PLAIN = "plain"
CONJECTURE = "conjecture"

# sorted nonzero patterns whose characters kill every complete system transform
_PLAIN_PATTERNS = (
    (-1, 1),
    (-2, 2),
    (-1, -1, 2),
    (-2, 1, 1),
    (-1, -1, 1, 1),
)
_CONJECTURE_PATTERN = (-1, -1, -1, 1, 1, 1)


def matrix_fourier(matrix: HadamardMatrix, gamma):
    """sum_k c_k^gamma over the d columns; CyclotomicInteger in exact mode."""
    d = matrix.dim
    if len(gamma) != d:
        raise ValueError("dimension mismatch")
    if matrix.mode == EXACT:
        q = matrix.root_order
        E = matrix.exponents
        counts = [0] * q
        for k in range(d):
            counts[sum(gamma[r] * E[r][k] for r in range(d)) % q] += 1
        return CyclotomicInteger(q, counts)
    with mpmath.workdps(DEFAULT_DPS):
        T = matrix.turns
        return mpmath.fsum(
            mpmath.expjpi(2 * mpmath.fsum(gamma[r] * T[r][k] for r in range(d)))
            for k in range(d)
        )


def system_fourier(system: MuhSystem, gamma):
    """Transform of the whole system: the sum of the per-matrix transforms."""
    values = [matrix_fourier(m, gamma) for m in system.matrices]
    if all(isinstance(v, CyclotomicInteger) for v in values):
        q = math.lcm(*(v.order for v in values))
        total = CyclotomicInteger.zero(q)
        for v in values:
            total = total + v.lift(q)
        return total
    with mpmath.workdps(DEFAULT_DPS):
        return mpmath.fsum(
            v.to_mpc(DEFAULT_DPS) if isinstance(v, CyclotomicInteger) else v for v in values
        )


def matrix_energy(matrix: HadamardMatrix, gamma):
    """Squared modulus of the matrix transform; exact ring element when possible."""
    g = matrix_fourier(matrix, gamma)
    if isinstance(g, CyclotomicInteger):
        return g.norm_squared()
    return abs(g) ** 2


def incoherent_energy(source, gamma):
    """Sum of matrix energies over a system (d^3 at gamma = 0 when complete)."""
    if isinstance(source, HadamardMatrix):
        return matrix_energy(source, gamma)
    values = [matrix_energy(m, gamma) for m in source.matrices]
    if all(isinstance(v, CyclotomicInteger) for v in values):
        q = math.lcm(*(v.order for v in values))
        total = CyclotomicInteger.zero(q)
        for v in values:
            total = total + v.lift(q)
        return total
    return mpmath.fsum(
        v.to_mpc(DEFAULT_DPS).real if isinstance(v, CyclotomicInteger) else v for v in values
    )


def coherent_energy(system: MuhSystem, gamma):
    """Squared modulus of the system transform (d^4 at gamma = 0 when complete)."""
    f = system_fourier(system, gamma)
    if isinstance(f, CyclotomicInteger):
        return f.norm_squared()
    return abs(f) ** 2


def _equals(value, target: int, tol) -> bool:
    if isinstance(value, CyclotomicInteger):
        return value == target
    return abs(value - target) <= tol


def check_row_orthogonality_vanishing(matrix: HadamardMatrix, tol: float = DEFAULT_TOL) -> bool:
    """The transform vanishes at every permutation of (1, -1, 0, ..., 0)."""
    d = matrix.dim
    base = (1, -1) + (0,) * (d - 2)
    for rho in set(itertools.permutations(base)):
        g = matrix_fourier(matrix, rho)
        if isinstance(g, CyclotomicInteger):
            if not g.is_zero():
                return False
        elif abs(g) > tol:
            return False
    return True


def check_matrix_shift_identity(matrix: HadamardMatrix, gamma, tol: float = DEFAULT_TOL) -> bool:
    """sum_r energy(gamma + pi_r) == d^2, the Fourier image of row orthogonality."""
    d = matrix.dim
    total = _accumulate(matrix_energy(matrix, shift(gamma, r)) for r in range(d))
    return _equals(total, d * d, tol)


def check_system_shift_identity(system: MuhSystem, gamma, tol: float = DEFAULT_TOL) -> bool:
    """sum_r incoherent(gamma + pi_r) == d^3 for a complete system."""
    d = system.dim
    total = _accumulate(incoherent_energy(system, shift(gamma, r)) for r in range(d))
    return _equals(total, d ** 3, tol)


def check_completeness_identity(system: MuhSystem, gamma, tol: float = DEFAULT_TOL) -> bool:
    """d*incoherent(gamma) + sum_{r != t} coherent(gamma + pi_r - pi_t) == d^4.

    Valid for complete systems only: the derivation consumes unbiasedness of
    every matrix pair plus the count of pairs, so incomplete systems are
    rejected rather than silently tested.
    """
    d = system.dim
    if not system.complete:
        raise ValueError("identity requires a complete system")
    g0 = incoherent_energy(system, gamma)
    terms = [coherent_energy(system, shift(shift(gamma, r), t, -1))
             for r in range(d) for t in range(d) if r != t]
    if isinstance(g0, CyclotomicInteger) and all(isinstance(t, CyclotomicInteger) for t in terms):
        total = _accumulate([g0 * d] + terms)
    else:
        total = mpmath.fsum([d * _as_real(g0)] + [_as_real(t) for t in terms])
    return _equals(total, d ** 4, tol)


def check_mean_square_bound(system: MuhSystem, gamma, tol: float = DEFAULT_TOL) -> bool:
    """coherent(gamma) <= d * incoherent(gamma) (arithmetic vs quadratic mean)."""
    d = system.dim
    F = coherent_energy(system, gamma)
    G = incoherent_energy(system, gamma)
    if isinstance(F, CyclotomicInteger) and isinstance(G, CyclotomicInteger):
        return (G * d - F).real_sign() >= 0
    return _as_real(F) <= d * _as_real(G) + tol


def _accumulate(values):
    values = list(values)
    if all(isinstance(v, CyclotomicInteger) for v in values):
        q = math.lcm(*(v.order for v in values))
        total = CyclotomicInteger.zero(q)
        for v in values:
            total = total + v.lift(q)
        return total
    return mpmath.fsum(_as_real(v) for v in values)


def _as_real(v):
    if isinstance(v, CyclotomicInteger):
        return v.to_mpc(DEFAULT_DPS).real
    if isinstance(v, mpmath.mpc):
        return v.real
    return v


# -- the vanishing set ---------------------------------------------------------


def in_vanishing_set(rho, mode: str = PLAIN) -> bool:
    """Membership of the patterns that force the system transform to vanish.

    Plain mode holds the five permutation types of total weight at most 4
    that every complete system kills; conjecture mode adds, in dimension 6
    only, the balanced type (1, 1, 1, -1, -1, -1).
    """
    nz = tuple(sorted(x for x in rho if x != 0))
    if not nz:
        return False
    if nz in _PLAIN_PATTERNS and len(nz) <= len(rho):
        return True
    if mode == CONJECTURE:
        return len(rho) == 6 and nz == _CONJECTURE_PATTERN
    if mode != PLAIN:
        raise ValueError(f"unknown mode {mode!r}")
    return False


def enumerate_vanishing_set(d: int, mode: str = PLAIN) -> list[tuple[int, ...]]:
    """All members of the set in dimension d, duplicate-free."""
    patterns = [p for p in _PLAIN_PATTERNS if len(p) <= d]
    if mode == CONJECTURE:
        if d == 6:
            patterns.append(_CONJECTURE_PATTERN)
    elif mode != PLAIN:
        raise ValueError(f"unknown mode {mode!r}")
    out = set()
    for p in patterns:
        full = p + (0,) * (d - len(p))
        out.update(itertools.permutations(full))
    return sorted(out)


# -- cached profile ------------------------------------------------------------


class FourierProfile:
    """Caching evaluator of the transforms of one source (matrix or system).

    Values inside the declared window are cached under a lock (safe for
    concurrent readers); values outside are recomputed on the fly.
    """

    def __init__(self, source, radius: int | None = None):
        self.source = source
        self.radius = radius
        self.dim = source.dim
        self._cache: dict = {}
        self._lock = threading.Lock()

    def _memoized(self, kind, gamma, compute):
        gamma = tuple(gamma)
        if self.radius is not None and any(abs(x) > self.radius for x in gamma):
            return compute(gamma)
        key = (kind, gamma)
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute(gamma)
        with self._lock:
            self._cache[key] = value
        return value

    def fourier(self, gamma):
        if isinstance(self.source, HadamardMatrix):
            return self._memoized("g", gamma, lambda g: matrix_fourier(self.source, g))
        return self._memoized("f", gamma, lambda g: system_fourier(self.source, g))

    def coherent(self, gamma):
        return self._memoized("F", gamma, lambda g: coherent_energy(self.source, g))

    def incoherent(self, gamma):
        return self._memoized("G", gamma, lambda g: incoherent_energy(self.source, g))
