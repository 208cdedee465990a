"""Exact two-phase primal simplex over the rational scalars.

Solves  min c.x  subject to  A x >= b, x >= 0  with Bland's anti-cycling
rule, entirely in exact arithmetic. Instances in this package are tiny
(a handful of variables and constraints), so the dense tableau is fine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LPInfeasibleError, LPUnboundedError
from .rational import ONE, Rat, ZERO, rat


@dataclass(frozen=True)
class SimplexSolution:
    value: Rat
    x: tuple


def _pivot(rows, cost, basis, pr, pc):
    piv = rows[pr][pc]
    rows[pr] = [v / piv for v in rows[pr]]
    prow = rows[pr]
    for i, row in enumerate(rows):
        if i != pr and row[pc] != 0:
            f = row[pc]
            rows[i] = [v - f * p for v, p in zip(row, prow)]
    if cost[pc] != 0:
        f = cost[pc]
        for j, p in enumerate(prow):
            if p != 0:
                cost[j] -= f * p
    basis[pr] = pc


def _run(rows, cost, basis, ncols):
    """Iterate Bland pivots until the reduced costs are nonnegative."""
    rhs = len(rows[0]) - 1
    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            return
        leave = None
        best = None
        for i, row in enumerate(rows):
            t = row[enter]
            if t > 0:
                ratio = row[rhs] / t
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise LPUnboundedError("objective unbounded below")
        _pivot(rows, cost, basis, leave, enter)


def _reduced_costs(rows, basis, objective, width):
    cost = list(objective) + [ZERO] * (width - len(objective)) + [ZERO]
    for i, bi in enumerate(basis):
        cb = cost[bi]
        if cb != 0:
            cost = [v - cb * p for v, p in zip(cost, rows[i])]
    return cost


def simplex_min_geq(c, A, b) -> SimplexSolution:
    """min c.x s.t. A x >= b, x >= 0, all data exact rationals."""
    c = [rat(v) for v in c]
    A = [[rat(v) for v in row] for row in A]
    b = [rat(v) for v in b]
    m, n = len(A), len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")

    # Equality form with nonnegative right-hand sides:
    #   rows scaled so rhs >= 0, one surplus and one artificial per row.
    rows = []
    for i in range(m):
        sign = ONE if b[i] >= 0 else -ONE
        row = [sign * v for v in A[i]]
        row += [(-sign if k == i else ZERO) for k in range(m)]  # surplus
        row += [(ONE if k == i else ZERO) for k in range(m)]  # artificial
        row.append(sign * b[i])
        rows.append(row)
    width = n + 2 * m
    basis = [n + m + i for i in range(m)]

    # Phase 1: minimize the artificial total.
    phase1 = [ZERO] * (n + m) + [ONE] * m
    cost = _reduced_costs(rows, basis, phase1, width)
    _run(rows, cost, basis, width)
    if -cost[-1] != 0:
        raise LPInfeasibleError("empty feasible region")

    # Drive any artificial still basic (at level zero) out of the basis,
    # dropping rows that turn out redundant.
    keep = []
    for i in range(m):
        if basis[i] >= n + m:
            pc = next((j for j in range(n + m) if rows[i][j] != 0), None)
            if pc is None:
                continue  # redundant constraint
            _pivot(rows, cost, basis, i, pc)
        keep.append(i)
    rows = [rows[i] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2 on the original objective, artificial columns frozen out.
    cost = _reduced_costs(rows, basis, c, width)
    _run(rows, cost, basis, n + m)

    x = [ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = rows[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return SimplexSolution(value=value, x=tuple(x))


def solve_square_system(M, rhs):
    """Exact Gaussian elimination; returns None when M is singular."""
    k = len(M)
    aug = [[rat(v) for v in row] + [rat(r)] for row, r in zip(M, rhs)]
    for col in range(k):
        piv = next((i for i in range(col, k) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = ONE / prow[col]
        aug[col] = [v * inv for v in prow]
        prow = aug[col]
        for i in range(k):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * p for v, p in zip(aug[i], prow)]
    return tuple(aug[i][k] for i in range(k))
