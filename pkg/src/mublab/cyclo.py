"""Exact arithmetic in the rings Z[w] of cyclotomic integers.

An element is stored in the group-ring style, as an integer coefficient
vector ``(a_0, ..., a_{q-1})`` standing for ``sum a_j w^j`` with
``w = exp(2*pi*i/q)``.  This representation is redundant; equality and the
zero test go through reduction modulo the q-th cyclotomic polynomial, which
is exact integer arithmetic throughout.  That makes statements like
"this sum of roots of unity vanishes" or "this inner product has squared
modulus exactly d" decidable with no floating point involved.
"""
from __future__ import annotations

import math
from functools import lru_cache

import mpmath


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Integer coefficients of the q-th cyclotomic polynomial, low degree first."""
    if q < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (q - 1) + [1]  # x^q - 1
    for e in range(1, q):
        if q % e == 0:
            num = _polydiv_exact(num, list(cyclotomic_polynomial(e)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (remainder must be zero)
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + i]
        f = c // den[-1]
        out[i] = f
        for j, dc in enumerate(den):
            num[i + j] -= f * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _euler_phi(q: int) -> int:
    return len(cyclotomic_polynomial(q)) - 1


def _reduce(coeffs: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Residue of sum a_j x^j modulo Phi_q, as a vector of length phi(q)."""
    phi = cyclotomic_polynomial(q)
    dp = len(phi) - 1
    rem = list(coeffs)
    if len(rem) < dp:
        rem += [0] * (dp - len(rem))
    for i in range(len(rem) - 1, dp - 1, -1):
        c = rem[i]
        if c:
            rem[i] = 0
            for j in range(dp):
                rem[i - dp + j] -= c * phi[j]
    return tuple(rem[:dp])


class CyclotomicInteger:
    """An element of Z[w_q] with exact equality and modulus tests."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        coeffs = tuple(coeffs)
        if len(coeffs) != order:
            raise ValueError(f"need {order} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInteger":
        return cls(order, (0,) * order)

    @classmethod
    def from_int(cls, order: int, n: int) -> "CyclotomicInteger":
        return cls(order, (n,) + (0,) * (order - 1))

    @classmethod
    def root(cls, order: int, exponent: int) -> "CyclotomicInteger":
        c = [0] * order
        c[exponent % order] = 1
        return cls(order, c)

    @classmethod
    def from_exponent_counts(cls, order: int, counts) -> "CyclotomicInteger":
        return cls(order, counts)

    def lift(self, order: int) -> "CyclotomicInteger":
        """Re-express in Z[w_m] for a multiple m of the current order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("can only lift to a multiple of the order")
        k = order // self.order
        c = [0] * order
        for j, a in enumerate(self.coeffs):
            c[j * k] = a
        return CyclotomicInteger(order, c)

    def _pair(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.order, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented, NotImplemented
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicInteger(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicInteger(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.order, tuple(other * x for x in self.coeffs))
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        q = a.order
        out = [0] * q
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[(i + j) % q] += x * y
        return CyclotomicInteger(q, out)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInteger":
        q = self.order
        return CyclotomicInteger(q, tuple(self.coeffs[(-j) % q] for j in range(q)))

    def norm_squared(self) -> "CyclotomicInteger":
        """z * conj(z); real, and rational precisely when it reduces to degree 0."""
        return self * self.conjugate()

    def reduced(self) -> tuple[int, ...]:
        return _reduce(self.coeffs, self.order)

    def is_zero(self) -> bool:
        return not any(_reduce(self.coeffs, self.order))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, CyclotomicInteger)):
            a, b = self._pair(other)
            return (a - b).is_zero()
        return NotImplemented

    def __hash__(self):
        # hash through a canonical form: reduced residue at the minimal field
        return hash((self.order, self.reduced()))

    def __repr__(self):
        terms = [f"{a}*w{self.order}^{j}" for j, a in enumerate(self.coeffs) if a]
        return "CyclotomicInteger(" + (" + ".join(terms) or "0") + ")"

    def as_int(self) -> int:
        """The value as a rational integer; raises if the element is irrational."""
        red = self.reduced()
        if any(red[1:]):
            raise ValueError("element is not a rational integer")
        return red[0]

    def is_rational_integer(self) -> bool:
        return not any(self.reduced()[1:])

    def is_real(self) -> bool:
        return (self - self.conjugate()).is_zero()

    def to_mpc(self, dps: int = 30) -> mpmath.mpc:
        with mpmath.workdps(dps):
            q = self.order
            return mpmath.fsum(
                (a * mpmath.expjpi(mpmath.mpf(2 * j) / q) for j, a in enumerate(self.coeffs) if a),
                absolute=False,
            ) + mpmath.mpc(0)

    def real_sign(self) -> int:
        """Provable sign of a real element.

        A nonzero algebraic integer z with conjugates bounded by S satisfies
        |z| >= S^-(n-1), n the field degree, so evaluating with enough digits
        decides the sign rigorously.
        """
        if not self.is_real():
            raise ValueError("sign is defined for real elements only")
        if self.is_zero():
            return 0
        s = sum(abs(a) for a in self.coeffs)
        n = _euler_phi(self.order)
        # need |value| > eval error; |value| >= s^-(n-1)
        digits = max(30, int((n - 1) * math.log10(max(s, 2))) + 25)
        with mpmath.workdps(digits):
            v = self.to_mpc(digits).real
            floor = mpmath.mpf(max(s, 2)) ** (-(n - 1)) / 2
            if abs(v) <= floor:
                raise ArithmeticError("numeric evaluation inconclusive; raise precision")
            return 1 if v > 0 else -1


def root_sum_is_zero(order: int, exponents) -> bool:
    """Exact test of sum_k w^e_k == 0."""
    counts = [0] * order
    for e in exponents:
        counts[e % order] += 1
    return not any(_reduce(tuple(counts), order))


def root_sum_norm_is(order: int, exponents, target: int) -> bool:
    """Exact test of |sum_k w^e_k|^2 == target."""
    exps = [e % order for e in exponents]
    counts = [0] * order
    for a in exps:
        for b in exps:
            counts[(a - b) % order] += 1
    counts[0] -= target
    return not any(_reduce(tuple(counts), order))
