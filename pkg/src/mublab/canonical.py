"""Equivalence of exact Hadamard matrices via canonical forms.

Two Hadamard matrices are equivalent when one maps to the other by row and
column permutations together with unimodular row and column rescalings.
For matrices with q-th root entries every such transform can be realised
with q-th root rescalings (dephasing both sides pins the free global
phases), so equivalence is decided inside the finite group

    (row perms x column perms) ⋉ (row phases x column phases, order q).

The canonical form is the lexicographically least exponent table reachable
through the group, read row-major.  It is computed by anchoring each
(row, column) pair as the dephasing origin and then ordering the remaining
rows greedily with backtracking over ties; ordered column groups carry the
still-unresolved column ties downwards.
"""
from __future__ import annotations

import itertools
import math

from .exponents import permute
from .hadamard import EXACT, HadamardMatrix
from .fourier import matrix_energy
from . import kernels


def _reduced_exponents(matrix: HadamardMatrix) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Exponent table over the smallest root order that carries the matrix."""
    if matrix.mode != EXACT:
        raise ValueError("canonical forms are defined for exact matrices only")
    q = matrix.root_order
    g = math.gcd(q, *(e for row in matrix.exponents for e in row))
    if g == 0:
        g = q
    return q // g, tuple(tuple(e // g for e in row) for row in matrix.exponents)


def canonical_form(matrix: HadamardMatrix) -> tuple:
    """Canonical key (root order, flattened exponent table) of the class."""
    q, exps = _reduced_exponents(matrix)
    if q == 1:
        return (1, (0,) * (matrix.dim ** 2))
    return (q, kernels.canonical_exponent_table(exps, q))


def equivalent(h1: HadamardMatrix, h2: HadamardMatrix) -> bool:
    """Decide h1 = D1 P1 h2 P2 D2 by canonical-form comparison (exact only)."""
    if h1.mode != EXACT or h2.mode != EXACT:
        raise ValueError("equivalence over numeric (continuous) matrices is not decided")
    if h1.dim != h2.dim:
        return False
    return canonical_form(h1) == canonical_form(h2)


def invariant_profile(matrix: HadamardMatrix, patterns=((1, -1), (2, -1, -1), (1, 1, -1, -1))):
    """An equivalence invariant: sorted multisets of |transform|^2 values.

    For a zero-sum pattern rho the squared modulus of the transform is
    unchanged by rescalings, and running over all coordinate permutations
    absorbs row order, so the sorted value lists match on equivalent
    matrices.  Distinct profiles certify inequivalence independently of the
    canonical-form search.
    """
    d = matrix.dim
    out = []
    for pat in patterns:
        if len(pat) > d:
            continue
        base = tuple(pat) + (0,) * (d - len(pat))
        values = []
        for rho in set(itertools.permutations(base)):
            e = matrix_energy(matrix, rho)
            values.append(tuple(e.reduced()) if hasattr(e, "reduced") else e)
        out.append((tuple(pat), tuple(sorted(values))))
    return tuple(out)
