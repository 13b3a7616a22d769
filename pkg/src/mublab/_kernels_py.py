"""Pure-Python implementations of the hot kernels.

``mublab.kernels`` prefers the compiled twin of this module
(``mublab._accel``) and falls back to these definitions; both must stay
behaviourally identical.  The two hot spots are exact simplex pivoting
(bulk rational row operations) and the canonical-form search over
exponent tables.
"""
from __future__ import annotations


def scale_row(row: list, factor) -> None:
    """row *= factor, skipping stored zeros."""
    for j, v in enumerate(row):
        if v:
            row[j] = v * factor


def eliminate_rows(rows: list, pivot_row: list, col: int, skip: int) -> None:
    """For every row except index ``skip``: row -= row[col] * pivot_row.

    ``pivot_row`` must already be scaled to have a 1 in ``col``.  Zeros are
    skipped on both sides, which is where almost all time goes on the large
    windowed problems.
    """
    nz = [j for j, v in enumerate(pivot_row) if v]
    for i, row in enumerate(rows):
        if i == skip:
            continue
        f = row[col]
        if not f:
            continue
        for j in nz:
            row[j] = row[j] - f * pivot_row[j]
        row[col] = 0 * f  # exact zero of the same numeric type


def canonical_exponent_table(exps, q: int) -> tuple:
    """Lexicographically least dephased exponent table of the class.

    Tries every (row, column) anchor as dephasing origin; after dephasing
    the anchor row and column are zero, so candidates differ only in the
    order of the remaining rows and columns.  Rows are placed greedily:
    each candidate row is scored by its least achievable vector given the
    ordered column groups (ties in earlier rows keep columns grouped, and
    each placed row refines the grouping); all rows achieving the minimal
    score are branched on.  A global prefix bound prunes anchors early.
    """
    d = len(exps)
    best = None

    def search(N, rows_left, groups, prefix):
        nonlocal best
        if not rows_left:
            if best is None or prefix < best:
                best = prefix
            return
        scored = []
        for r in rows_left:
            row = N[r]
            vec = []
            for grp in groups:
                vec.extend(sorted(row[c] for c in grp))
            scored.append((tuple(vec), r))
        mn = min(s for s, _ in scored)
        if best is not None:
            k = len(prefix)
            seg = best[k:k + len(mn)]
            if mn > seg:
                return
        for s, r in scored:
            if s != mn:
                continue
            row = N[r]
            refined = []
            for grp in groups:
                buckets = {}
                for c in grp:
                    buckets.setdefault(row[c], []).append(c)
                for v in sorted(buckets):
                    refined.append(buckets[v])
            search(N, [x for x in rows_left if x != r], refined, prefix + mn)

    for r0 in range(d):
        for c0 in range(d):
            N = [
                [(exps[r][c] - exps[r0][c] - exps[r][c0] + exps[r0][c0]) % q
                 for c in range(d)]
                for r in range(d)
            ]
            rows = [r for r in range(d) if r != r0]
            cols = [c for c in range(d) if c != c0]
            search(N, rows, [cols], ())
    # re-attach the all-zero first row and column the dephasing guarantees
    flat = [0] * d
    i = 0
    for r in range(d - 1):
        flat.append(0)
        flat.extend(best[i:i + d - 1])
        i += d - 1
    return tuple(flat)
