"""Exact integer matrix invariants.

Matrices are plain lists of rows of Python ints, so entries never overflow.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]
    cols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("column count needed for a matrix without rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("matrix is not rectangular")
        return cls(rows, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _as_lists(A) -> tuple[list[list[int]], int, int]:
    if isinstance(A, IntMatrix):
        return A.tolist(), A.nrows, A.cols
    rows = [list(map(int, r)) for r in A]
    return rows, len(rows), (len(rows[0]) if rows else 0)


def smith_normal_form(A) -> list[int]:
    """Invariant factors ``d1 | d2 | ...`` of ``A`` (length ``min(r, m)``).

    Unimodular row and column reduction; the pivot is the nonzero entry of
    least absolute value (first in row-major order on ties).  Zeros trail.
    """
    M, r, m = _as_lists(A)
    diag: list[int] = []
    top = 0
    while top < min(r, m):
        pivot = None
        for i in range(top, r):
            for j in range(top, m):
                if M[i][j] and (pivot is None or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        M[top], M[i] = M[i], M[top]
        for row in M:
            row[top], row[j] = row[j], row[top]

        while True:
            p = M[top][top]
            dirty = False
            for i in range(top + 1, r):
                q = M[i][top] // p
                if q:
                    Mi, Mt = M[i], M[top]
                    for j in range(top, m):
                        Mi[j] -= q * Mt[j]
                if M[i][top]:
                    dirty = True
            for j in range(top + 1, m):
                q = M[top][j] // p
                if q:
                    for row in M[top:]:
                        row[j] -= q * row[top]
                if M[top][j]:
                    dirty = True
            if not dirty:
                # pivot must also divide the remaining block
                bad = next(
                    ((i, j) for i in range(top + 1, r) for j in range(top + 1, m) if M[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                Mt, Mi = M[top], M[bad[0]]
                for j in range(top, m):
                    Mt[j] += Mi[j]
                continue
            # a remainder is smaller than the pivot: move it into pivot position
            best = min(
                [(abs(M[i][top]), i, top) for i in range(top + 1, r) if M[i][top]]
                + [(abs(M[top][j]), top, j) for j in range(top + 1, m) if M[top][j]]
            )
            _, i, j = best
            if j == top:
                M[top], M[i] = M[i], M[top]
            else:
                for row in M:
                    row[top], row[j] = row[j], row[top]
        diag.append(abs(M[top][top]))
        top += 1
    return diag + [0] * (min(r, m) - len(diag))


def minors_gcd(A, i: int) -> int:
    """``Delta_i``: gcd of all ``i x i`` minors, as ``d1 * ... * di``.

    ``Delta_0 = 1``; ``Delta_i = 0`` when ``i`` exceeds either dimension.
    """
    if i < 0:
        raise ValueError("order must be nonnegative")
    if i == 0:
        return 1
    d = smith_normal_form(A)
    if i > len(d):
        return 0
    return math.prod(d[:i])


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row; exact, exponential time."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * determinant(minor)
    return total


def minors_gcd_bruteforce(A, i: int) -> int:
    """``Delta_i`` by enumerating every ``i x i`` minor."""
    if i == 0:
        return 1
    M, r, m = _as_lists(A)
    if i > min(r, m):
        return 0
    g = 0
    for rs in itertools.combinations(range(r), i):
        for cs in itertools.combinations(range(m), i):
            g = math.gcd(g, determinant([[M[a][b] for b in cs] for a in rs]))
    return g


def compute_n(A, m: int) -> int:
    """``Delta_m / Delta_{m-1}`` with ``0/0 = 0``: the ``m``-th invariant factor,
    or 0 when the rank is below ``m``."""
    _, r, cols = _as_lists(A)
    if isinstance(A, IntMatrix):
        cols = A.cols
    if r and cols != m:
        raise ValueError(f"matrix has {cols} columns, expected {m}")
    if m < 1:
        raise ValueError("m must be positive")
    d = smith_normal_form(A)
    return d[m - 1] if len(d) >= m else 0


def integer_rank(A) -> int:
    return sum(1 for d in smith_normal_form(A) if d)
