"""
Exact rational feasibility of linear systems by Fourier-Motzkin elimination.

A system is a list of inequalities ``a.x >= b`` (optionally strict) and a list
of equalities ``a.x == b``; coefficients may be ints or Fractions. Each
constraint is scaled to a primitive integer row on entry, so elimination runs
in pure integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .intlinalg import rank


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x >= rhs`` (``>`` if strict)."""

    coeffs: tuple
    rhs: object = 0
    strict: bool = False


def _integral(coeffs, rhs):
    vals = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _normalize(row):
    g = math.gcd(*row)
    if g > 1:
        return tuple(x // g for x in row)
    return tuple(row)


def is_feasible(
    inequalities: Sequence[Constraint] = (),
    equalities: Sequence[tuple] = (),
    nvars: int | None = None,
) -> bool:
    """Decide whether the system has a rational (equivalently real) solution.

    ``equalities`` are ``(coeffs, rhs)`` pairs.
    """
    # row layout: [a_1, ..., a_n, -b]; inequality means row . (x, 1) >= 0
    ineqs = {}
    for c in inequalities:
        ints = _integral(c.coeffs, c.rhs)
        row = _normalize(ints[:-1] + [-ints[-1]])
        ineqs[row] = ineqs.get(row, False) or c.strict
    eqs = []
    for coeffs, rhs in equalities:
        ints = _integral(coeffs, rhs)
        eqs.append(ints[:-1] + [-ints[-1]])
    if nvars is None:
        sample = next(iter(ineqs), None) or (eqs[0] if eqs else None)
        nvars = 0 if sample is None else len(sample) - 1

    # substitute equalities away
    while eqs:
        e = eqs.pop()
        j = next((i for i in range(nvars) if e[i]), None)
        if j is None:
            if e[-1]:
                return False
            continue
        ej = e[j]
        scale = abs(ej)
        sgn = 1 if ej > 0 else -1
        eqs = [
            list(_normalize([scale * a - sgn * f[j] * b for a, b in zip(f, e)]))
            for f in eqs
        ]
        new = {}
        for row, strict in ineqs.items():
            if row[j]:
                row = _normalize([scale * a - sgn * row[j] * b for a, b in zip(row, e)])
            new[row] = new.get(row, False) or strict
        ineqs = new

    return _fourier_motzkin(ineqs, nvars)


def _fourier_motzkin(ineqs: dict, nvars: int) -> bool:
    live = set(range(nvars))
    while True:
        trivial = [r for r in ineqs if not any(r[:-1])]
        for r in trivial:
            strict = ineqs.pop(r)
            if r[-1] < 0 or (strict and r[-1] == 0):
                return False
        live = {j for j in live if any(r[j] for r in ineqs)}
        if not live:
            return True

        def cost(j):
            pos = sum(1 for r in ineqs if r[j] > 0)
            neg = sum(1 for r in ineqs if r[j] < 0)
            return pos * neg - pos - neg

        j = min(sorted(live), key=cost)
        pos = [(r, s) for r, s in ineqs.items() if r[j] > 0]
        neg = [(r, s) for r, s in ineqs.items() if r[j] < 0]
        new = {r: s for r, s in ineqs.items() if r[j] == 0}
        for p, sp in pos:
            for q, sq in neg:
                a, b = -q[j], p[j]
                row = _normalize([a * x + b * y for x, y in zip(p, q)])
                new[row] = new.get(row, False) or sp or sq
        ineqs = new
        live.discard(j)


def affine_hull_dimension(
    inequalities: Sequence[Constraint],
    equalities: Sequence[tuple] = (),
    nvars: int | None = None,
) -> int | None:
    """Dimension of the solution set, or None if it is empty.

    The affine hull is cut out by the explicit equalities plus the implicit
    ones: inequalities that cannot hold strictly anywhere on the set.
    """
    inequalities = list(inequalities)
    equalities = list(equalities)
    if nvars is None:
        if inequalities:
            nvars = len(inequalities[0].coeffs)
        elif equalities:
            nvars = len(equalities[0][0])
        else:
            nvars = 0
    if not is_feasible(inequalities, equalities, nvars):
        return None
    tight = [_integral(a, b)[:-1] for a, b in equalities]
    for i, c in enumerate(inequalities):
        if c.strict:
            continue
        probe = inequalities[:i] + [Constraint(c.coeffs, c.rhs, True)] + inequalities[i + 1:]
        if not is_feasible(probe, equalities, nvars):
            tight.append(_integral(c.coeffs, c.rhs)[:-1])
    tight = [t for t in tight if any(t)]
    return nvars - (rank(tight) if tight else 0)
