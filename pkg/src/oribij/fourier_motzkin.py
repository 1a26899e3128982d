"""Exact Fourier-Motzkin elimination over integer inequality rows.

A row ``(a_0, ..., a_{k-1}, c)`` encodes ``sum(a_i * x_i) + c >= 0``.  All
arithmetic stays integral: combined rows are rescaled by gcd, so projections
are exact and there is no tolerance anywhere.  This is only meant for the
desk-scale systems in this package (signature acyclicity certificates and
zonotope membership); a hard row-count cap guards against blowup.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import CapExceededError, InvariantViolationError

ROW_LIMIT = 200_000


class Infeasible(Exception):
    """The inequality system has no solution."""


def _normalized(row: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g > 1:
        return tuple(x // g for x in row)
    return row


def _check_trivial(row: tuple[int, ...]) -> bool:
    """True if the row is vacuous; raises Infeasible on a contradiction."""
    if any(row[:-1]):
        return False
    if row[-1] < 0:
        raise Infeasible
    return True


def eliminate(rows: Sequence[tuple[int, ...]], var: int) -> list[tuple[int, ...]]:
    """Project the system onto the complement of one variable."""
    pos, neg, rest = [], [], []
    for row in rows:
        a = row[var]
        if a > 0:
            pos.append(row)
        elif a < 0:
            neg.append(row)
        else:
            rest.append(row)
    if len(pos) * len(neg) + len(rest) > ROW_LIMIT:
        raise CapExceededError("Fourier-Motzkin row limit exceeded")
    out = set(rest)
    for p in pos:
        ap = p[var]
        for q in neg:
            aq = -q[var]
            combined = _normalized(tuple(aq * x + ap * y for x, y in zip(p, q)))
            if not _check_trivial(combined):
                out.add(combined)
    return sorted(out)


def _elimination_order(rows: Sequence[tuple[int, ...]], candidates: list[int]) -> int:
    """Pick the variable whose elimination grows the system least."""
    best, best_cost = candidates[0], None
    for v in candidates:
        p = sum(1 for row in rows if row[v] > 0)
        n = sum(1 for row in rows if row[v] < 0)
        cost = p * n - p - n
        if best_cost is None or cost < best_cost:
            best, best_cost = v, cost
    return best


def project(
    rows: Sequence[tuple[int, ...]], nvars: int, keep: Sequence[int]
) -> list[tuple[int, ...]]:
    """Eliminate every variable not in ``keep``; eliminated coefficients are 0.

    Raises Infeasible if the original system has no solution at all.
    """
    current = sorted({_normalized(tuple(r)) for r in rows if not _check_trivial(tuple(r))})
    remaining = [v for v in range(nvars) if v not in set(keep)]
    while remaining:
        v = _elimination_order(current, remaining)
        remaining.remove(v)
        current = eliminate(current, v)
    return current


def maximize(
    rows: Sequence[tuple[int, ...]], nvars: int, objective: int
) -> tuple[Fraction | None, list[Fraction] | None]:
    """Exact sup of one variable over the polyhedron, with an attaining point.

    Returns ``(sup, point)``; ``sup`` is None when unbounded above, in which
    case the point maximizes nothing in particular but is feasible.  Raises
    Infeasible when the system has no solution.
    """
    current = sorted({_normalized(tuple(r)) for r in rows if not _check_trivial(tuple(r))})
    steps: list[tuple[int, list[tuple[int, ...]]]] = []
    remaining = [v for v in range(nvars) if v != objective]
    while remaining:
        v = _elimination_order(current, remaining)
        remaining.remove(v)
        steps.append((v, current))
        current = eliminate(current, v)

    upper: Fraction | None = None
    lower: Fraction | None = None
    for row in current:
        a, c = row[objective], row[-1]
        if a == 0:
            continue
        bound = Fraction(-c, a)
        if a > 0:
            lower = bound if lower is None else max(lower, bound)
        else:
            upper = bound if upper is None else min(upper, bound)
    if lower is not None and upper is not None and lower > upper:
        raise Infeasible

    assignment = [Fraction(0)] * nvars
    if upper is not None:
        assignment[objective] = upper
    elif lower is not None:
        assignment[objective] = lower

    for var, rows_before in reversed(steps):
        lo: Fraction | None = None
        hi: Fraction | None = None
        for row in rows_before:
            a = row[var]
            if a == 0:
                continue
            rest = row[-1] + sum(
                row[j] * assignment[j] for j in range(nvars) if j != var and row[j]
            )
            bound = Fraction(-rest, a)
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                raise InvariantViolationError("back-substitution interval is empty")
            assignment[var] = (lo + hi) / 2
        elif lo is not None:
            assignment[var] = lo
        elif hi is not None:
            assignment[var] = hi
    return upper, assignment
