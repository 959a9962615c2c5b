"""Exact rational simplex for small packing LPs.

Solves  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so the origin is a
feasible starting vertex and no phase one is needed. Bland's rule prevents
cycling. All arithmetic is in ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Unbounded(ArithmeticError):
    pass


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]  # one per constraint row
    pivots: int


def maximize(A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction],
             c: Sequence[int | Fraction]) -> LpSolution:
    m, n = len(A), len(c)
    if any(Fraction(x) < 0 for x in b):
        raise ValueError("right-hand side must be non-negative")
    width = n + m + 1
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]] + [Fraction(0)] * m + [Fraction(b[i])]
        row[n + i] = Fraction(1)
        T.append(row)
    z = [-Fraction(x) for x in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]
    pivots = 0
    while True:
        enter = next((j for j in range(width - 1) if z[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise Unbounded("objective is unbounded")
        prow = T[leave]
        a = prow[enter]
        prow = [v / a for v in prow]
        T[leave] = prow
        for i in range(m):
            f = T[i][enter]
            if i != leave and f != 0:
                T[i] = [u - f * v for u, v in zip(T[i], prow)]
        f = z[enter]
        z = [u - f * v for u, v in zip(z, prow)]
        basis[leave] = enter
        pivots += 1
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return LpSolution(z[-1], tuple(x), tuple(z[n:n + m]), pivots)
