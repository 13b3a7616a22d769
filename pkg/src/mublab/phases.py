"""Unimodular scalars and vectors, exact or high-precision numeric.

A phase is stored as its angle measured in turns (full revolutions).  An
exact phase keeps the angle as a ``Fraction`` e/q, i.e. a q-th root of
unity; a numeric phase keeps an ``mpmath.mpf``.  Multiplication is angle
addition mod 1, so products of exact phases stay exact and the modulus is
1 by construction in both modes.
"""
from __future__ import annotations

import math
from fractions import Fraction

import mpmath

DEFAULT_DPS = 40


def _wrap_turn(turn):
    if isinstance(turn, Fraction):
        return turn % 1
    if isinstance(turn, int):
        return Fraction(0)
    t = mpmath.mpf(turn)
    t = t - mpmath.floor(t)
    if t >= 1:
        t -= 1
    return t


class PhaseScalar:
    """A complex number of modulus exactly 1."""

    __slots__ = ("turn",)

    def __init__(self, turn):
        object.__setattr__(self, "turn", _wrap_turn(turn))

    def __setattr__(self, *a):
        raise AttributeError("PhaseScalar is immutable")

    @classmethod
    def one(cls) -> "PhaseScalar":
        return cls(Fraction(0))

    @classmethod
    def root_of_unity(cls, order: int, exponent: int) -> "PhaseScalar":
        if order < 1:
            raise ValueError("order must be positive")
        return cls(Fraction(exponent % order, order))

    @classmethod
    def from_angle_turns(cls, turn) -> "PhaseScalar":
        return cls(turn)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.turn, Fraction)

    @property
    def order(self) -> int:
        """Smallest q with self^q == 1 (exact phases only)."""
        if not self.is_exact:
            raise ValueError("numeric phase has no root-of-unity order")
        return self.turn.denominator

    @property
    def exponent(self) -> int:
        if not self.is_exact:
            raise ValueError("numeric phase has no root-of-unity exponent")
        return self.turn.numerator

    def __mul__(self, other):
        if not isinstance(other, PhaseScalar):
            return NotImplemented
        return PhaseScalar(self.turn + other.turn)

    def __truediv__(self, other):
        if not isinstance(other, PhaseScalar):
            return NotImplemented
        return PhaseScalar(self.turn - other.turn)

    def __pow__(self, n: int):
        return PhaseScalar(self.turn * n)

    def conjugate(self) -> "PhaseScalar":
        """For unimodular numbers conjugation is the reciprocal."""
        return PhaseScalar(-self.turn)

    inverse = conjugate

    def value(self, dps: int = DEFAULT_DPS) -> mpmath.mpc:
        with mpmath.workdps(dps):
            if self.is_exact:
                return mpmath.expjpi(2 * mpmath.mpf(self.turn.numerator) / self.turn.denominator)
            return mpmath.expjpi(2 * mpmath.mpf(self.turn))

    def __eq__(self, other):
        if isinstance(other, PhaseScalar):
            if self.is_exact != other.is_exact:
                return False
            return self.turn == other.turn
        return NotImplemented

    def __hash__(self):
        return hash(("PhaseScalar", str(self.turn)))

    def __repr__(self):
        if self.is_exact:
            return f"PhaseScalar({self.turn.numerator}/{self.turn.denominator} turn)"
        return f"PhaseScalar({float(self.turn):.12f} turn)"


class PhaseVector:
    """A point of the torus group T^d: d unimodular coordinates."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty phase vector")
        for e in entries:
            if not isinstance(e, PhaseScalar):
                raise TypeError("entries must be PhaseScalar")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *a):
        raise AttributeError("PhaseVector is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def is_exact(self) -> bool:
        return all(e.is_exact for e in self.entries)

    def __getitem__(self, i) -> PhaseScalar:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if isinstance(other, PhaseVector):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other):
        """Coordinate-wise product (the group operation of T^d)."""
        if not isinstance(other, PhaseVector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return PhaseVector(a * b for a, b in zip(self.entries, other.entries))

    def __truediv__(self, other):
        if not isinstance(other, PhaseVector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return PhaseVector(a / b for a, b in zip(self.entries, other.entries))

    def conjugate(self) -> "PhaseVector":
        return PhaseVector(e.conjugate() for e in self.entries)

    def char(self, gamma) -> PhaseScalar:
        """Apply the character gamma from Z^d: the monomial prod v_r^gamma_r."""
        if len(gamma) != self.dim:
            raise ValueError("dimension mismatch")
        turn = Fraction(0)
        numeric = mpmath.mpf(0)
        any_numeric = False
        for g, e in zip(gamma, self.entries):
            if g == 0:
                continue
            if e.is_exact:
                turn += g * e.turn
            else:
                any_numeric = True
                numeric += g * e.turn
        if any_numeric:
            return PhaseScalar(numeric + mpmath.mpf(turn.numerator) / turn.denominator)
        return PhaseScalar(turn)

    def __repr__(self):
        return f"PhaseVector({list(self.entries)!r})"


def exact_turn_order(entries) -> int:
    """Common root-of-unity order (lcm of denominators) of exact phases."""
    q = 1
    for e in entries:
        q = math.lcm(q, e.turn.denominator)
    return q
