"""Tiny exact linear algebra helpers over the rationals.

Everything here works on plain ints or fractions.Fraction and never rounds.
Matrices are tuples of row tuples; sizes stay at most 6, so naive algorithms
are the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Number = int | Fraction


def det2(a: Number, b: Number, c: Number, d: Number) -> Number:
    return a * d - b * c


def det3(m: Sequence[Sequence[Number]]) -> Number:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cross(u: Sequence[Number], v: Sequence[Number]) -> tuple[Number, Number, Number]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum(a * b for a, b in zip(u, v))


def mat_vec(m: Sequence[Sequence[Number]], v: Sequence[Number]) -> tuple[Number, ...]:
    return tuple(dot(row, v) for row in m)


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank of a small matrix by fraction-exact Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return r


def nullspace(rows: Sequence[Sequence[Number]]) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace of a small matrix, as Fraction tuples."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    work = [[Fraction(x) for x in row] for row in rows]
    pivot_col_of_row: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivot_col_of_row.append(col)
        r += 1
        if r == nrows:
            break
    pivot_cols = set(pivot_col_of_row)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pcol in enumerate(pivot_col_of_row):
            vec[pcol] = -work[row_idx][free]
        basis.append(tuple(vec))
    return basis


def solve2(m: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> tuple[Fraction, Fraction] | None:
    """Solve a 2x2 system by Cramer; None when numerically singular."""
    d = det2(m[0][0], m[0][1], m[1][0], m[1][1])
    if d == 0:
        return None
    x = det2(rhs[0], m[0][1], rhs[1], m[1][1])
    y = det2(m[0][0], rhs[0], m[1][0], rhs[1])
    return Fraction(x, 1) / d, Fraction(y, 1) / d


def solve3(m: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> tuple[Fraction, Fraction, Fraction] | None:
    d = det3(m)
    if d == 0:
        return None
    cols = [[row[j] for row in m] for j in range(3)]
    out = []
    for j in range(3):
        repl = [cols[0][:], cols[1][:], cols[2][:]]
        repl[j] = list(rhs)
        out.append(Fraction(det3(list(zip(*repl)))) / d)
    return out[0], out[1], out[2]


def adjugate3(m: Sequence[Sequence[Number]]) -> tuple[tuple[Number, ...], ...]:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def inverse3(m: Sequence[Sequence[Number]]) -> tuple[tuple[Fraction, ...], ...] | None:
    d = det3(m)
    if d == 0:
        return None
    adj = adjugate3(m)
    return tuple(tuple(Fraction(x) / d for x in row) for row in adj)
