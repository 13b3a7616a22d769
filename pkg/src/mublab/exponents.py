"""Characters of the torus group T^d: integer exponent vectors, as tuples."""
from __future__ import annotations

import itertools


def pi(d: int, r: int) -> tuple[int, ...]:
    """The r-th unit vector (0-based) in Z^d."""
    if not 0 <= r < d:
        raise ValueError("index out of range")
    return tuple(1 if i == r else 0 for i in range(d))


def neg(gamma) -> tuple[int, ...]:
    return tuple(-x for x in gamma)


def add(a, b) -> tuple[int, ...]:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> tuple[int, ...]:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return tuple(x - y for x, y in zip(a, b))


def shift(gamma, r: int, delta: int = 1) -> tuple[int, ...]:
    out = list(gamma)
    out[r] += delta
    return tuple(out)


def permute(gamma, perm) -> tuple[int, ...]:
    """Coordinate permutation: result[i] = gamma[perm[i]]."""
    return tuple(gamma[p] for p in perm)


def window(d: int, radius: int):
    """All vectors of the integer cube [-radius, radius]^d."""
    return itertools.product(range(-radius, radius + 1), repeat=d)


def in_window(gamma, radius: int) -> bool:
    return all(-radius <= x <= radius for x in gamma)


def random_vector(rng, d: int, radius: int) -> tuple[int, ...]:
    return tuple(rng.randint(-radius, radius) for _ in range(d))
