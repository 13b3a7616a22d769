"""Backtracking enumeration of Butson Hadamard matrices and unbiased systems.

BH(d, q) matrices are built row by row in dephased form: the first row and
column are all ones, every further row is a q-th-root exponent vector with
first entry 0 that is exactly orthogonal (a vanishing sum of roots of
unity) to all earlier rows.  Row sets are generated in ascending
lexicographic order, one per unordered set, and optionally deduplicated to
one canonical representative per equivalence class.

The complete-system search fixes each enumerated class representative as
the first matrix, re-expands the dephasing freedom of its partners
(arbitrary columns with first coordinate 1), and looks for cliques: first
pairwise-orthogonal column sets (the partner matrices), then pairwise
unbiased matrix sets.  Negative results are claimed only on exhaustive
completion; exceeding the node or time budget flags the result
inconclusive instead.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .canonical import canonical_form
from .cyclo import root_sum_is_zero, root_sum_norm_is
from .hadamard import HadamardMatrix, MuhSystem


class Budget:
    """Node and wall-clock budget shared across the phases of one search."""

    def __init__(self, max_nodes: int | None = None, max_seconds: float | None = None):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.nodes = 0
        self.exceeded = False

    def tick(self, n: int = 1) -> bool:
        """Consume n nodes; False once the budget is exhausted."""
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exceeded = True
        elif self.deadline is not None and time.monotonic() > self.deadline:
            self.exceeded = True
        return not self.exceeded


@lru_cache(maxsize=None)
def vanishing_rows(d: int, q: int) -> tuple[tuple[int, ...], ...]:
    """All exponent rows (first entry 0) orthogonal to the all-ones row."""
    return tuple(
        (0,) + rest
        for rest in itertools.product(range(q), repeat=d - 1)
        if root_sum_is_zero(q, (0,) + rest)
    )


@lru_cache(maxsize=None)
def unbiased_rows(d: int, q: int) -> frozenset[tuple[int, ...]]:
    """Exponent rows (first entry 0) whose root sum has squared modulus d."""
    return frozenset(
        (0,) + rest
        for rest in itertools.product(range(q), repeat=d - 1)
        if root_sum_norm_is(q, (0,) + rest, d)
    )


def _diff(u, v, q):
    return tuple((b - a) % q for a, b in zip(u, v))


def orthogonal_row_candidates(prefix, d: int, q: int):
    """Rows orthogonal to the implicit all-ones row and to every prefix row.

    Yields exponent tuples (first entry 0) in lexicographic order.  The
    prefix itself must be pairwise orthogonal; a bad prefix is rejected.
    """
    prefix = [tuple(r) for r in prefix]
    for r in prefix:
        if len(r) != d:
            raise ValueError("prefix rows must have length d")
        if r[0] % q:
            raise ValueError("prefix rows must start with exponent 0")
        if not root_sum_is_zero(q, r):
            raise ValueError("prefix row not orthogonal to the all-ones row")
    for i, r in enumerate(prefix):
        for s in prefix[i + 1:]:
            if not root_sum_is_zero(q, _diff(r, s, q)):
                raise ValueError("prefix rows are not pairwise orthogonal")
    base = vanishing_rows(d, q)
    allowed = frozenset(base)
    for cand in base:
        if all(_diff(r, cand, q) in allowed for r in prefix):
            yield cand


@dataclass
class EnumerationResult:
    dim: int
    order: int
    up_to_equivalence: bool
    matrices: list[HadamardMatrix]
    class_sizes: list[int]
    total_dephased: int
    nodes: int
    exhaustive: bool

    def summary(self) -> dict:
        return {
            "dim": self.dim,
            "order": self.order,
            "up_to_equivalence": self.up_to_equivalence,
            "count": len(self.matrices),
            "class_sizes": list(self.class_sizes),
            "total_dephased": self.total_dephased,
            "nodes": self.nodes,
            "exhaustive": self.exhaustive,
        }


def _row_set_search(rows, adj, want: int, budget: Budget, emit, first_indices=None):
    """Ascending-index clique search over the orthogonality graph."""
    n = len(rows)
    full_tail = {i: ~((1 << (i + 1)) - 1) for i in range(n)}

    def extend(chosen, cand):
        if len(chosen) == want:
            emit(chosen)
            return True
        c = cand
        while c:
            i = (c & -c).bit_length() - 1
            c &= c - 1
            if not budget.tick():
                return False
            if not extend(chosen + [i], cand & adj[i] & full_tail[i]):
                return False
        return True

    for i in (range(n) if first_indices is None else first_indices):
        if not budget.tick():
            return False
        if not extend([i], adj[i] & full_tail[i]):
            return False
    return True


def _orthogonality_bitsets(rows, q):
    allowed = frozenset(rows)
    n = len(rows)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if _diff(rows[i], rows[j], q) in allowed:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def enumerate_bh(
    d: int,
    q: int,
    up_to_equivalence: bool = True,
    budget: Budget | None = None,
    row_chunks: int | None = None,
) -> EnumerationResult:
    """All dephased BH(d, q) matrices, one per unordered row set.

    With ``up_to_equivalence`` the output keeps one canonical representative
    per equivalence class (``class_sizes`` records how many dephased row
    sets each class absorbed).  ``row_chunks`` splits the search by leading
    row into that many batches; the result is independent of the split.
    """
    if d < 1 or q < 1:
        raise ValueError("dimension and order must be positive")
    budget = budget or Budget()
    if d == 1:
        mat = HadamardMatrix.from_exponents(q, [[0]])
        return EnumerationResult(d, q, up_to_equivalence, [mat], [1], 1, budget.nodes, True)
    rows = vanishing_rows(d, q)
    adj = _orthogonality_bitsets(rows, q)

    found: list[tuple[tuple[int, ...], ...]] = []

    def emit(chosen):
        found.append(tuple(rows[i] for i in chosen))

    n = len(rows)
    if row_chunks and row_chunks > 1:
        bounds = [round(k * n / row_chunks) for k in range(row_chunks + 1)]
        complete = True
        for k in range(row_chunks):
            idx = range(bounds[k], bounds[k + 1])
            complete = _row_set_search(rows, adj, d - 1, budget, emit, idx) and complete
            if not complete:
                break
    else:
        complete = _row_set_search(rows, adj, d - 1, budget, emit)

    total = len(found)
    if not up_to_equivalence:
        mats = [
            HadamardMatrix.from_exponents(q, [(0,) * d] + [list(r) for r in rs])
            for rs in found
        ]
        return EnumerationResult(d, q, False, mats, [1] * total, total, budget.nodes, complete)

    classes: dict[tuple, int] = {}
    reps: list[HadamardMatrix] = []
    sizes: list[int] = []
    for rs in found:
        mat = HadamardMatrix.from_exponents(q, [(0,) * d] + [list(r) for r in rs])
        key = canonical_form(mat)
        if key in classes:
            sizes[classes[key]] += 1
        else:
            classes[key] = len(reps)
            reps.append(mat)
            sizes.append(1)
    return EnumerationResult(d, q, True, reps, sizes, total, budget.nodes, complete)


@dataclass
class UnbiasednessGraph:
    """Pairwise exact unbiasedness between enumerated matrices."""

    matrices: list[HadamardMatrix]
    adjacency: list[int] = field(default_factory=list)

    @classmethod
    def build(cls, matrices, q: int) -> "UnbiasednessGraph":
        mats = list(matrices)
        d = mats[0].dim if mats else 0
        patterns = unbiased_rows(d, q) if mats else frozenset()
        n = len(mats)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if _mat_unbiased(mats[i], mats[j], q, patterns):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls(mats, adj)

    def edges(self):
        out = []
        for i, bits in enumerate(self.adjacency):
            b = bits >> (i + 1) << (i + 1)
            while b:
                j = (b & -b).bit_length() - 1
                b &= b - 1
                out.append((i, j))
        return out


def _mat_unbiased(m1, m2, q, patterns) -> bool:
    d = m1.dim
    E1, E2 = m1.exponents, m2.exponents
    for c1 in range(d):
        for c2 in range(d):
            w = tuple((E2[r][c2] - E1[r][c1]) % q for r in range(d))
            # columns here always share first exponent 0, so w[0] == 0
            if w not in patterns:
                return False
    return True


@dataclass
class MuhSearchResult:
    dim: int
    order: int
    systems: list[MuhSystem]
    exhaustive: bool
    nodes: int
    classes_tried: int

    def summary(self) -> dict:
        return {
            "dim": self.dim,
            "order": self.order,
            "complete_systems_found": len(self.systems),
            "classes_tried": self.classes_tried,
            "nodes": self.nodes,
            "exhaustive": self.exhaustive,
        }


def search_complete_muh_over_bh(
    d: int, q: int, budget: Budget | None = None
) -> MuhSearchResult:
    """Search for complete MUH systems whose entries are all q-th roots.

    Any such system normalises to: first matrix a dephased class
    representative, the others arbitrary q-th-root Hadamard matrices whose
    first row is all ones.  For each representative H the partner columns
    are the q-th-root vectors (first coordinate 1) exactly unbiased to all
    columns of H; partner matrices are d-cliques in their orthogonality
    graph, and complete systems are (d-1)-cliques in the matrix
    unbiasedness graph.  An empty result with ``exhaustive`` set is a
    proof of non-existence over BH(d, q).
    """
    budget = budget or Budget()
    enum = enumerate_bh(d, q, up_to_equivalence=True, budget=budget)
    systems: list[MuhSystem] = []
    seen: set[frozenset] = set()
    exhaustive = enum.exhaustive
    unb = unbiased_rows(d, q)
    orth = frozenset(vanishing_rows(d, q))

    for rep in enum.matrices:
        E = rep.exponents
        cols: list[tuple[int, ...]] = []
        for rest in itertools.product(range(q), repeat=d - 1):
            u = (0,) + rest
            if not budget.tick():
                exhaustive = False
                break
            if all(
                tuple((u[r] - E[r][k]) % q for r in range(d)) in unb
                for k in range(d)
            ):
                cols.append(u)
        if budget.exceeded:
            exhaustive = False
            break
        n = len(cols)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if _diff(cols[i], cols[j], q) in orth:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        partners: list[tuple[int, ...]] = []
        complete = _row_set_search(cols, adj, d, budget, lambda ch: partners.append(tuple(ch)))
        if not complete:
            exhaustive = False
            break
        partner_mats = [
            HadamardMatrix.from_exponents(
                q, [[cols[i][r] for i in ch] for r in range(d)]
            )
            for ch in partners
        ]
        graph = UnbiasednessGraph.build(partner_mats, q)
        combos: list[tuple[int, ...]] = []
        complete = _row_set_search(
            partner_mats, graph.adjacency, d - 1, budget, lambda ch: combos.append(tuple(ch))
        )
        if not complete:
            exhaustive = False
            break
        for combo in combos:
            system = MuhSystem([rep] + [partner_mats[i] for i in combo])
            key = frozenset(system.matrices)
            if key not in seen:
                seen.add(key)
                systems.append(system)

    return MuhSearchResult(d, q, systems, exhaustive, budget.nodes, len(enum.matrices))
