"""Exact sparse Gauss-Jordan elimination over K.

Rows are dictionaries ``{column: RatK}`` with a right-hand side.  The solver
reports the rank, a particular solution (free variables set to zero), the set
of *determined* unknowns (those whose value is the same for every solution),
and the first inconsistent equation if there is one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import RatK


@dataclass
class SparseSolution:
    ncols: int
    values: dict[int, RatK]
    determined: set[int]
    pivots: list[int]
    inconsistent: object | None = None  # tag of a violated equation
    free: set[int] = field(default_factory=set)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def consistent(self) -> bool:
        return self.inconsistent is None


def _cost(entry: RatK) -> int:
    return entry.num.deg + entry.den.deg


def solve_sparse(equations, ncols: int, order=None) -> SparseSolution:
    """Solve ``sum_j row[j] x_j = rhs`` for each ``(row, rhs, tag)`` in ``equations``.

    ``order`` fixes the column elimination order (default 0..ncols-1).  Within
    a column the pivot is the sparsest candidate row, ties broken by entry size.
    """
    eqs = [(r, [rhs], tag) for r, rhs, tag in equations]
    return solve_sparse_multi(eqs, ncols, 1, order)[0]


def solve_sparse_multi(equations, ncols: int, nrhs: int, order=None) -> list[SparseSolution]:
    """Like :func:`solve_sparse` with ``nrhs`` right-hand sides eliminated together.

    Each equation is ``(row, [rhs_0, ..., rhs_{nrhs-1}], tag)``; one solution per
    right-hand side is returned (they share pivots and determined columns).
    """
    active = [[dict(r), list(rhs), tag] for r, rhs, tag in equations]
    done: list[tuple[int, list]] = []
    order = list(range(ncols)) if order is None else list(order)
    for j in order:
        cand = [r for r in active if j in r[0]]
        if not cand:
            continue
        piv = min(cand, key=lambda r: (len(r[0]), _cost(r[0][j])))
        active = [r for r in active if r is not piv]
        inv = piv[0][j].inverse()
        if not inv.is_one():
            piv[0] = {k: v * inv for k, v in piv[0].items()}
            piv[1] = [b * inv for b in piv[1]]
        prow = piv[0]
        targets = [r for r in cand if r is not piv]
        targets += [r for _, r in done if j in r[0]]
        for r in targets:
            f = r[0].pop(j)
            row = r[0]
            for k, v in prow.items():
                if k == j:
                    continue
                nv = row.get(k)
                nv = -(f * v) if nv is None else nv - f * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
            r[1] = [b if pb.is_zero() else b - f * pb for b, pb in zip(r[1], piv[1])]
        done.append((j, piv))
    pivcols = [j for j, _ in done]
    free = set(range(ncols)) - set(pivcols)
    determined = {j for j, r in done if len(r[0]) == 1}
    out = []
    for i in range(nrhs):
        bad = next((r[2] for r in active if not r[1][i].is_zero()), None)
        values = {j: r[1][i] for j, r in done}
        out.append(SparseSolution(ncols, values, set(determined), list(pivcols), bad, set(free)))
    return out
