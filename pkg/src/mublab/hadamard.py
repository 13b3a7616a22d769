"""Complex Hadamard matrices and mutually unbiased systems.

A matrix is kept in one of two representations:

* ``exact``   — a root-of-unity order q plus a d x d integer exponent
  table; entry (r, c) is w_q^{E[r][c]}.  All structural tests (orthogonal
  rows, unbiasedness) are decided exactly in Z[w_q].
* ``numeric`` — a d x d table of angles in turns (``mpmath.mpf``), for
  matrices from continuous parametric families.  Tests compare against a
  tolerance, 1e-9 by default.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

import mpmath

from .cyclo import CyclotomicInteger, root_sum_is_zero, root_sum_norm_is
from .phases import DEFAULT_DPS, PhaseScalar, PhaseVector

DEFAULT_TOL = 1e-9
_NUMERIC_STR_DPS = 40

EXACT = "exact"
NUMERIC = "numeric"


class HadamardMatrix:
    """A square matrix with unimodular entries (validity checked separately)."""

    __slots__ = ("mode", "dim", "root_order", "exponents", "turns")

    def __init__(self, mode, dim, root_order=None, exponents=None, turns=None):
        if mode not in (EXACT, NUMERIC):
            raise ValueError(f"unknown mode {mode!r}")
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.mode = mode
        self.dim = dim
        if mode == EXACT:
            if root_order is None or exponents is None:
                raise ValueError("exact matrix needs root_order and exponents")
            exponents = tuple(tuple(int(e) % root_order for e in row) for row in exponents)
            _check_square(exponents, dim)
            self.root_order = root_order
            self.exponents = exponents
            self.turns = None
        else:
            if turns is None:
                raise ValueError("numeric matrix needs turns")
            turns = tuple(tuple(_as_turn(t) for t in row) for row in turns)
            _check_square(turns, dim)
            self.root_order = None
            self.exponents = None
            self.turns = turns

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_exponents(cls, root_order: int, exponents) -> "HadamardMatrix":
        rows = tuple(tuple(row) for row in exponents)
        return cls(EXACT, len(rows), root_order=root_order, exponents=rows)

    @classmethod
    def from_turns(cls, turns) -> "HadamardMatrix":
        rows = tuple(tuple(row) for row in turns)
        return cls(NUMERIC, len(rows), turns=rows)

    @classmethod
    def from_phases(cls, entries) -> "HadamardMatrix":
        """Build from a table of PhaseScalar; exact iff every phase is exact."""
        rows = tuple(tuple(row) for row in entries)
        d = len(rows)
        flat = [p for row in rows for p in row]
        if all(p.is_exact for p in flat):
            q = 1
            for p in flat:
                q = math.lcm(q, p.turn.denominator)
            exps = tuple(
                tuple((p.turn.numerator * (q // p.turn.denominator)) % q for p in row)
                for row in rows
            )
            return cls(EXACT, d, root_order=q, exponents=exps)
        turns = tuple(
            tuple(t.turn if not isinstance(t.turn, Fraction)
                  else mpmath.mpf(t.turn.numerator) / t.turn.denominator for t in row)
            for row in rows
        )
        return cls(NUMERIC, d, turns=turns)

    # -- entry access ------------------------------------------------------

    def entry(self, r: int, c: int) -> PhaseScalar:
        if self.mode == EXACT:
            return PhaseScalar.root_of_unity(self.root_order, self.exponents[r][c])
        return PhaseScalar(self.turns[r][c])

    def column(self, c: int) -> PhaseVector:
        return PhaseVector(self.entry(r, c) for r in range(self.dim))

    def row(self, r: int) -> PhaseVector:
        return PhaseVector(self.entry(r, c) for c in range(self.dim))

    @property
    def columns(self) -> tuple[PhaseVector, ...]:
        return tuple(self.column(c) for c in range(self.dim))

    @property
    def is_exact(self) -> bool:
        return self.mode == EXACT

    @property
    def is_real(self) -> bool:
        """True when every entry is +1 or -1."""
        if self.mode == EXACT:
            return all(2 * e % self.root_order == 0 for row in self.exponents for e in row)
        half = mpmath.mpf("0.5")
        return all(t == 0 or t == half for row in self.turns for t in row)

    # -- transforms --------------------------------------------------------

    def transpose(self) -> "HadamardMatrix":
        d = self.dim
        if self.mode == EXACT:
            return HadamardMatrix.from_exponents(
                self.root_order, [[self.exponents[c][r] for c in range(d)] for r in range(d)]
            )
        return HadamardMatrix.from_turns(
            [[self.turns[c][r] for c in range(d)] for r in range(d)]
        )

    def conjugate(self) -> "HadamardMatrix":
        d = self.dim
        if self.mode == EXACT:
            q = self.root_order
            return HadamardMatrix.from_exponents(
                q, [[(-e) % q for e in row] for row in self.exponents]
            )
        return HadamardMatrix.from_turns([[(-t) % 1 for t in row] for row in self.turns])

    def scale_rows(self, phases) -> "HadamardMatrix":
        """Multiply row r by phases[r] (a left diagonal)."""
        phases = list(phases)
        return HadamardMatrix.from_phases(
            [[phases[r] * self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)]
        )

    def scale_columns(self, phases) -> "HadamardMatrix":
        phases = list(phases)
        return HadamardMatrix.from_phases(
            [[self.entry(r, c) * phases[c] for c in range(self.dim)] for r in range(self.dim)]
        )

    def permute_rows(self, perm) -> "HadamardMatrix":
        perm = list(perm)
        return HadamardMatrix.from_phases(
            [[self.entry(perm[r], c) for c in range(self.dim)] for r in range(self.dim)]
        )

    def permute_columns(self, perm) -> "HadamardMatrix":
        perm = list(perm)
        return HadamardMatrix.from_phases(
            [[self.entry(r, perm[c]) for c in range(self.dim)] for r in range(self.dim)]
        )

    # -- misc ----------------------------------------------------------------

    def inner_product(self, c1: int, other: "HadamardMatrix", c2: int):
        """<column c1 of self, column c2 of other>, conjugate-linear on the left.

        Exact pairs give a CyclotomicInteger, anything else an mpmath.mpc.
        """
        d = self.dim
        if other.dim != d:
            raise ValueError("dimension mismatch")
        if self.mode == EXACT and other.mode == EXACT:
            q = math.lcm(self.root_order, other.root_order)
            a, b = q // self.root_order, q // other.root_order
            counts = [0] * q
            for r in range(d):
                counts[(other.exponents[r][c2] * b - self.exponents[r][c1] * a) % q] += 1
            return CyclotomicInteger(q, counts)
        with mpmath.workdps(DEFAULT_DPS):
            return mpmath.fsum(
                (self.entry(r, c1).conjugate() * other.entry(r, c2)).value()
                for r in range(d)
            )

    def __eq__(self, other):
        if not isinstance(other, HadamardMatrix):
            return NotImplemented
        if self.mode != other.mode or self.dim != other.dim:
            return False
        if self.mode == EXACT:
            q = math.lcm(self.root_order, other.root_order)
            a, b = q // self.root_order, q // other.root_order
            return all(
                (self.exponents[r][c] * a - other.exponents[r][c] * b) % q == 0
                for r in range(self.dim) for c in range(self.dim)
            )
        return self.turns == other.turns

    def __hash__(self):
        if self.mode == EXACT:
            g = math.gcd(self.root_order, *(e for row in self.exponents for e in row))
            if g == 0:
                g = self.root_order
            q = self.root_order // g
            return hash((q, tuple(tuple(e // g for e in row) for row in self.exponents)))
        return hash(tuple(tuple(str(t) for t in row) for row in self.turns))

    def __repr__(self):
        return f"HadamardMatrix(dim={self.dim}, mode={self.mode!r})"

    # -- interchange format --------------------------------------------------

    def to_json_dict(self) -> dict:
        if self.mode == EXACT:
            return {
                "dim": self.dim,
                "mode": EXACT,
                "root_order": self.root_order,
                "entries": [list(row) for row in self.exponents],
            }
        with mpmath.workdps(_NUMERIC_STR_DPS):
            return {
                "dim": self.dim,
                "mode": NUMERIC,
                "entries": [[mpmath.nstr(t, _NUMERIC_STR_DPS) for t in row] for row in self.turns],
            }

    @classmethod
    def from_json_dict(cls, obj: dict, validate: bool = True) -> "HadamardMatrix":
        try:
            dim = int(obj["dim"])
            mode = obj["mode"]
            entries = obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise MatrixFormatError(f"malformed matrix object: {exc}") from exc
        if mode == EXACT:
            try:
                m = cls.from_exponents(int(obj["root_order"]), entries)
            except (KeyError, TypeError, ValueError) as exc:
                raise MatrixFormatError(f"malformed exact matrix: {exc}") from exc
        elif mode == NUMERIC:
            with mpmath.workdps(_NUMERIC_STR_DPS):
                try:
                    m = cls.from_turns([[mpmath.mpf(t) for t in row] for row in entries])
                except (TypeError, ValueError) as exc:
                    raise MatrixFormatError(f"malformed numeric matrix: {exc}") from exc
        else:
            raise MatrixFormatError(f"unknown mode {mode!r}")
        if m.dim != dim:
            raise MatrixFormatError("declared dim does not match entry table")
        if validate and not is_hadamard(m):
            raise MatrixFormatError("entries do not form a complex Hadamard matrix "
                                    "(row orthogonality fails)")
        return m


class MatrixFormatError(ValueError):
    """Raised when an interchange file violates the declared invariants."""


def _check_square(rows, dim):
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ValueError("matrix must be square")


def _as_turn(t):
    if isinstance(t, Fraction):
        return mpmath.mpf(t.numerator) / t.denominator % 1
    return mpmath.mpf(t) % 1


class MuhSystem:
    """An ordered list of pairwise unbiased Hadamard matrices of one dimension."""

    __slots__ = ("dim", "matrices")

    def __init__(self, matrices):
        matrices = tuple(matrices)
        if not matrices:
            raise ValueError("empty system")
        dim = matrices[0].dim
        if any(m.dim != dim for m in matrices):
            raise ValueError("matrices must share one dimension")
        if len(matrices) > dim:
            raise ValueError(
                f"{len(matrices)} mutually unbiased Hadamard matrices in dimension {dim} "
                f"exceed the maximum of {dim}"
            )
        self.dim = dim
        self.matrices = matrices

    @property
    def complete(self) -> bool:
        return len(self.matrices) == self.dim

    @property
    def is_exact(self) -> bool:
        return all(m.mode == EXACT for m in self.matrices)

    def __len__(self):
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def __getitem__(self, i):
        return self.matrices[i]

    def all_columns(self) -> list[PhaseVector]:
        """The d*m columns of the system, matrix by matrix."""
        return [m.column(c) for m in self.matrices for c in range(self.dim)]

    def is_valid(self, tol: float = DEFAULT_TOL) -> bool:
        if not all(is_hadamard(m, tol) for m in self.matrices):
            return False
        n = len(self.matrices)
        return all(
            is_unbiased_pair(self.matrices[i], self.matrices[j], tol)
            for i in range(n) for j in range(i + 1, n)
        )

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "matrices": [m.to_json_dict() for m in self.matrices]}

    @classmethod
    def from_json_dict(cls, obj: dict, validate: bool = True) -> "MuhSystem":
        try:
            mats = obj["matrices"]
        except (KeyError, TypeError) as exc:
            raise MatrixFormatError(f"malformed system object: {exc}") from exc
        system = cls([HadamardMatrix.from_json_dict(m, validate=validate) for m in mats])
        if "dim" in obj and int(obj["dim"]) != system.dim:
            raise MatrixFormatError("declared dim does not match matrices")
        if validate and not system.is_valid():
            raise MatrixFormatError("matrices are not pairwise unbiased")
        return system


def save_json(obj, path) -> None:
    with open(path, "w") as fh:
        json.dump(obj.to_json_dict(), fh, indent=1)


def load_matrix(path, validate: bool = True) -> HadamardMatrix:
    with open(path) as fh:
        return HadamardMatrix.from_json_dict(json.load(fh), validate=validate)


def load_system(path, validate: bool = True) -> MuhSystem:
    with open(path) as fh:
        return MuhSystem.from_json_dict(json.load(fh), validate=validate)


# -- predicates --------------------------------------------------------------


def is_hadamard(matrix: HadamardMatrix, tol: float = None) -> bool:
    """All pairs of distinct rows complex-orthogonal.

    Exact matrices are decided in Z[w_q] with zero tolerance; numeric ones
    use |<row_r, row_s>| <= tol.
    """
    d = matrix.dim
    if matrix.mode == EXACT:
        q = matrix.root_order
        E = matrix.exponents
        return all(
            root_sum_is_zero(q, ((E[s][k] - E[r][k]) for k in range(d)))
            for r in range(d) for s in range(r + 1, d)
        )
    if tol is None:
        tol = DEFAULT_TOL
    with mpmath.workdps(DEFAULT_DPS):
        T = matrix.turns
        for r in range(d):
            for s in range(r + 1, d):
                ip = mpmath.fsum(mpmath.expjpi(2 * (T[s][k] - T[r][k])) for k in range(d))
                if abs(ip) > tol:
                    return False
    return True


def is_unbiased_pair(h1: HadamardMatrix, h2: HadamardMatrix, tol: float = None) -> bool:
    """Every column pair satisfies |<u, v>|^2 == d (exactly, or within tol)."""
    d = h1.dim
    if h2.dim != d:
        raise ValueError("dimension mismatch")
    if h1.mode == EXACT and h2.mode == EXACT:
        q = math.lcm(h1.root_order, h2.root_order)
        a, b = q // h1.root_order, q // h2.root_order
        E1, E2 = h1.exponents, h2.exponents
        return all(
            root_sum_norm_is(q, ((E2[r][c2] * b - E1[r][c1] * a) for r in range(d)), d)
            for c1 in range(d) for c2 in range(d)
        )
    if tol is None:
        tol = DEFAULT_TOL
    with mpmath.workdps(DEFAULT_DPS):
        for c1 in range(d):
            for c2 in range(d):
                ip = h1.inner_product(c1, h2, c2)
                if isinstance(ip, CyclotomicInteger):
                    ip = ip.to_mpc(DEFAULT_DPS)
                if abs(abs(ip) ** 2 - d) > tol:
                    return False
    return True


def normalize(system: MuhSystem) -> MuhSystem:
    """Dephase a system: first column of H_1 all ones, every column starting with 1.

    Only rows and columns are rescaled by unimodular numbers, so validity and
    unbiasedness are untouched; the map is idempotent.
    """
    h1 = system.matrices[0]
    d = system.dim
    left = [h1.entry(r, 0).conjugate() for r in range(d)]
    out = []
    for m in system.matrices:
        m2 = m.scale_rows(left)
        right = [m2.entry(0, c).conjugate() for c in range(d)]
        out.append(m2.scale_columns(right))
    return MuhSystem(out)


def fourier_matrix(d: int) -> HadamardMatrix:
    """The order-d Fourier matrix: entry (j, k) = w_d^{jk} (0-based)."""
    if d < 1:
        raise ValueError("dimension must be positive")
    return HadamardMatrix.from_exponents(d, [[(j * k) % d for k in range(d)] for j in range(d)])


def kron(a: HadamardMatrix, b: HadamardMatrix) -> HadamardMatrix:
    """Tensor product; Hadamard x Hadamard is Hadamard."""
    da, db = a.dim, b.dim
    return HadamardMatrix.from_phases(
        [
            [a.entry(ra, ca) * b.entry(rb, cb) for ca in range(da) for cb in range(db)]
            for ra in range(da) for rb in range(db)
        ]
    )


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


def prime_complete_system(p: int) -> MuhSystem:
    """A complete system of p mutually unbiased Hadamard matrices, p prime.

    For odd p the t-th matrix has entries w_p^{t j^2 + j k}; unbiasedness
    of any two of them reduces to quadratic Gauss sums.  For p = 2 the
    quadratic trick fails and the standard 4th-root pair is used.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        f2 = HadamardMatrix.from_exponents(4, [[0, 0], [0, 2]])
        g2 = HadamardMatrix.from_exponents(4, [[0, 0], [1, 3]])
        return MuhSystem([f2, g2])
    mats = [
        HadamardMatrix.from_exponents(
            p, [[(t * j * j + j * k) % p for k in range(p)] for j in range(p)]
        )
        for t in range(p)
    ]
    return MuhSystem(mats)
