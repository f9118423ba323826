"""Exact linear algebra over Q.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
The heavy lifting is delegated to FLINT (fraction-free, exact); a pure
Python Bareiss elimination is kept as an independent second route.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import flint

Matrix = Sequence[Sequence]


def _row_to_ints(row) -> list[int]:
    dens = [x.denominator for x in row if isinstance(x, Fraction) and x.denominator != 1]
    if not dens:
        return [int(x) for x in row]
    m = lcm(*dens)
    return [int(x * m) for x in row]


def to_fmpz(M: Matrix, ncols: int | None = None) -> flint.fmpz_mat:
    """Row-scaled integer copy; row scaling preserves rank and right kernel."""
    rows = [_row_to_ints(r) for r in M]
    if not rows:
        return flint.fmpz_mat(0, ncols or 0)
    return flint.fmpz_mat(rows)


def rank_exact(M: Matrix) -> int:
    if not M or not len(M[0]):
        return 0
    return to_fmpz(M).rank()


def bareiss_rank(M: Matrix, column_order: Sequence[int] | None = None) -> int:
    """Rank by one-step fraction-free (Bareiss) elimination.

    ``column_order`` permutes the pivot search; any order gives the same
    rank, which is what the cross-checks rely on.
    """
    A = [_row_to_ints(r) for r in M]
    if not A or not A[0]:
        return 0
    ncols = len(A[0])
    cols = list(column_order) if column_order is not None else list(range(ncols))
    nrows = len(A)
    prev = 1
    r = 0
    for c in cols:
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        pivot_row = A[r]
        for i in range(r + 1, nrows):
            row = A[i]
            f = row[c]
            if f == 0:
                # still has to be rescaled to keep the Bareiss invariant
                for j in cols:
                    if row[j]:
                        row[j] = row[j] * p // prev
                continue
            for j in cols:
                row[j] = (row[j] * p - pivot_row[j] * f) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def primitive(v: Sequence[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return [int(x) for x in v]
    first = next(x for x in v if x != 0)
    if first < 0:
        g = -g
    return [int(x) // g for x in v]


def nullspace(M: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Primitive integer basis of {x : M x = 0}."""
    if not M:
        n = ncols or 0
        return [[int(i == j) for j in range(n)] for i in range(n)]
    A = to_fmpz(M)
    N, nullity = A.nullspace()
    rows = N.tolist()
    basis = []
    for k in range(nullity):
        basis.append(primitive([int(rows[i][k]) for i in range(A.ncols())]))
    return basis


def row_basis(vectors: Sequence[Sequence]) -> list[list[int]]:
    """Integer basis (reduced echelon rows, scaled) of the span of ``vectors``."""
    if not vectors:
        return []
    A = to_fmpz(vectors)
    R, _den, rk = A.rref()
    rows = R.tolist()
    return [primitive([int(x) for x in rows[i]]) for i in range(rk)]


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent prefix-greedy subset."""
    keep: list[int] = []
    basis: list[Sequence] = []
    r = 0
    for k, v in enumerate(vectors):
        trial = basis + [v]
        rr = rank_exact(trial)
        if rr > r:
            basis = trial
            keep.append(k)
            r = rr
    return keep


def solve(A: Matrix, b: Sequence) -> list[Fraction] | None:
    """One solution of A x = b over Q, or None if inconsistent."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    aug = to_fmpz([list(A[i]) + [b[i]] for i in range(m)])
    R, den, rk = aug.rref()
    rows = R.tolist()
    x = [Fraction(0)] * n
    for i in range(rk):
        row = rows[i]
        lead = next(j for j in range(n + 1) if row[j] != 0)
        if lead == n:
            return None
        # reduced form: row[lead] == den
        x[lead] = Fraction(int(row[n]), int(row[lead]))
    return x


def matmul(A: Matrix, B: Matrix) -> list[list]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A: Matrix) -> list[list]:
    return [list(c) for c in zip(*A)]


def power_ranks(M: Matrix) -> list[int]:
    """[rank M, rank M^2, ...] up to (excluding) the first zero rank.

    Raises ValueError when the powers stabilise at a nonzero rank, i.e. M
    is not nilpotent.
    """
    dens = [x.denominator for row in M for x in row if isinstance(x, Fraction) and x.denominator != 1]
    m = lcm(*dens) if dens else 1
    if not M:
        return []
    A = flint.fmpz_mat([[int(x * m) for x in row] for row in M])
    n = A.nrows()
    out: list[int] = []
    P = A
    for _ in range(n + 1):
        r = P.rank()
        if r == 0:
            return out
        if out and r == out[-1]:
            raise ValueError("matrix is not nilpotent")
        out.append(r)
        P = P * A
    raise ValueError("matrix is not nilpotent")
