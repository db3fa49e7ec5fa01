"""Exact rational simplex for 0/1 covering LPs.

The covering problem ``min sum(x)`` subject to ``x(C) >= 1`` for every
constraint set ``C`` and ``0 <= x <= 1`` is solved through its packing dual
``max sum(y)`` subject to ``sum_{C ni i} y_C <= 1``, ``y >= 0``. The all-slack
basis is feasible for the dual, so no phase 1 is needed; the primal optimum is
read off the dual prices of the slack columns. Both sides are checked exactly
before returning, so every reported value carries a duality certificate.

The upper bounds ``x <= 1`` never bind: lowering any coordinate above 1 to 1
keeps every covering constraint satisfied and strictly lowers the objective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
WeightFunction = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class LpStatus(Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class LpProblem:
    var_count: int
    constraints: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for c in self.constraints:
            if not c:
                raise ValueError("covering constraints must be non-empty")
            if min(c) < 0 or max(c) >= self.var_count:
                raise ValueError(f"constraint {sorted(c)} has an index outside 0..{self.var_count - 1}")

    @classmethod
    def from_sets(cls, var_count: int, constraints: Iterable[Iterable[int]]) -> LpProblem:
        return cls(var_count, tuple(frozenset(c) for c in constraints))

    def is_satisfied_by(self, x: Sequence[Fraction]) -> bool:
        return (all(0 <= v <= 1 for v in x)
                and all(sum(x[i] for i in c) >= 1 for c in self.constraints))


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    value: Fraction
    assignment: WeightFunction
    dual: dict[frozenset[int], Fraction] = field(default_factory=dict, compare=False)


def prune_constraints(constraints: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Drop duplicates and any constraint containing another one.

    A superset constraint is implied by its subset, so the feasible region
    does not change.
    """
    kept: list[frozenset[int]] = []
    for c in sorted(set(constraints), key=lambda s: (len(s), sorted(s))):
        if not any(k <= c for k in kept):
            kept.append(c)
    return kept


class _Tableau:
    """Dense simplex tableau in exact arithmetic, maximizing.

    ``rows[i]`` expresses basic variable ``basis[i]``; ``rhs[i]`` is its value.
    Entering columns follow Dantzig's rule until a run of degenerate pivots,
    after which Bland's smallest-index rule takes over for good, which
    guarantees termination.
    """

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.ncols = len(rows[0]) if rows else 0
        self.pivots = 0

    def _pivot(self, r: int, c: int, red: list[Fraction]) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            inv = 1 / p
            for k in range(self.ncols):
                if prow[k]:
                    prow[k] *= inv
            self.rhs[r] *= inv
        nz = [(k, v) for k, v in enumerate(prow) if v]
        prhs = self.rhs[r]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                for k, v in nz:
                    row[k] -= f * v
                self.rhs[i] -= f * prhs
        f = red[c]
        if f:
            for k, v in nz:
                red[k] -= f * v
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                for k, v in enumerate(self.rows[i]):
                    if v:
                        red[k] -= cb * v
        return red

    def maximize(self, cost: Sequence[Fraction], allowed: Optional[set[int]] = None,
                 degenerate_patience: int = 8) -> tuple[bool, list[Fraction]]:
        """Run to optimality. Returns ``(bounded, reduced_costs)``."""
        red = self.reduced_costs(cost)
        cols = range(self.ncols) if allowed is None else sorted(allowed)
        bland = False
        streak = 0
        while True:
            if bland:
                c = next((j for j in cols if red[j] > 0), None)
            else:
                c = max(cols, key=lambda j: red[j], default=None)
                if c is not None and red[c] <= 0:
                    c = None
            if c is None:
                return True, red
            best: Optional[tuple[Fraction, int, int]] = None
            for i, row in enumerate(self.rows):
                a = row[c]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i], i)
                    if best is None or key < best:
                        best = key
            if best is None:
                return False, red
            ratio, _, r = best
            if ratio == 0:
                streak += 1
                if streak > degenerate_patience:
                    bland = True
            else:
                streak = 0
            self._pivot(r, c, red)

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs)), ZERO)


def _solve_pruned(n: int, constraints: list[frozenset[int]]) -> tuple[list[Fraction], list[Fraction]]:
    """Primal optimum ``x`` and dual optimum ``y`` for pruned covering constraints."""
    k = len(constraints)
    ncols = k + n
    rows = [[ZERO] * ncols for _ in range(n)]
    for j, c in enumerate(constraints):
        for i in c:
            rows[i][j] = ONE
    for i in range(n):
        rows[i][k + i] = ONE
    tab = _Tableau(rows, [ONE] * n, [k + i for i in range(n)])
    cost = [ONE] * k + [ZERO] * n
    bounded, red = tab.maximize(cost)
    if not bounded:  # pragma: no cover - the packing LP is bounded by construction
        raise ArithmeticError("packing dual reported unbounded")
    x = [-red[k + i] for i in range(n)]
    y = [ZERO] * k
    for b, v in zip(tab.basis, tab.rhs):
        if b < k:
            y[b] = v
    return x, y


def lp_solve(problem: LpProblem, *, prune: bool = True) -> LpSolution:
    """Exact optimum of ``min sum(x)`` over the covering polytope.

    With ``prune`` the solver works on the inclusion-minimal constraints;
    the returned assignment is checked against the full constraint list.
    """
    n = problem.var_count
    if not problem.constraints:
        return LpSolution(LpStatus.OPTIMAL, ZERO, tuple([ZERO] * n))
    constraints = prune_constraints(problem.constraints) if prune else list(problem.constraints)
    x, y = _solve_pruned(n, constraints)
    value = sum(x, ZERO)
    if not problem.is_satisfied_by(x):
        raise ArithmeticError("simplex produced an infeasible covering assignment")
    load = [ZERO] * n
    for c, w in zip(constraints, y):
        if w < 0:
            raise ArithmeticError("negative dual weight")
        for i in c:
            load[i] += w
    if any(v > 1 for v in load) or sum(y, ZERO) != value:
        raise ArithmeticError("duality certificate failed")
    dual = {c: w for c, w in zip(constraints, y) if w}
    return LpSolution(LpStatus.OPTIMAL, value, tuple(x), dual)


def _solve_equality_form(cost: list[Fraction], rows: list[list[Fraction]],
                         rhs: list[Fraction]) -> Optional[Fraction]:
    """Two-phase simplex for ``max cost.x`` s.t. ``rows x = rhs``, ``x >= 0``.

    Returns the optimum, or ``None`` when infeasible. ``rhs`` must be >= 0.
    """
    m = len(rows)
    nvar = len(cost)
    full = [list(r) + [ONE if j == i else ZERO for j in range(m)] for i, r in enumerate(rows)]
    tab = _Tableau(full, list(rhs), [nvar + i for i in range(m)])
    phase1 = [ZERO] * nvar + [-ONE] * m
    tab.maximize(phase1)
    if tab.objective(phase1) != 0:
        return None
    # drive artificial variables out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= nvar:
            c = next((j for j in range(nvar) if tab.rows[i][j] != 0), None)
            if c is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab._pivot(i, c, [ZERO] * tab.ncols)
        i += 1
    phase2 = list(cost) + [ZERO] * m
    bounded, _ = tab.maximize(phase2, allowed=set(range(nvar)))
    if not bounded:
        raise ArithmeticError("face LP is unbounded")
    return tab.objective(phase2)


def maximize_on_optimal_face(problem: LpProblem, var: int,
                             optimum: Optional[Fraction] = None) -> Fraction:
    """Largest value ``x[var]`` can take over all optimal covering assignments."""
    if not 0 <= var < problem.var_count:
        raise ValueError(f"variable {var} outside 0..{problem.var_count - 1}")
    if optimum is None:
        optimum = lp_solve(problem).value
    n = problem.var_count
    constraints = prune_constraints(problem.constraints)
    k = len(constraints)
    # columns: x_0..x_{n-1}, surplus_0..surplus_{k-1}
    rows = []
    for j, c in enumerate(constraints):
        row = [ONE if i in c else ZERO for i in range(n)] + [ZERO] * k
        row[n + j] = -ONE
        rows.append(row)
    rows.append([ONE] * n + [ZERO] * k)
    rhs = [ONE] * k + [optimum]
    cost = [ZERO] * (n + k)
    cost[var] = ONE
    best = _solve_equality_form(cost, rows, rhs)
    if best is None:
        raise ArithmeticError("optimal face is empty; the supplied optimum is wrong")
    return best
