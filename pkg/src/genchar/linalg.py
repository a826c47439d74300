"""Exact Gaussian elimination over Q (or any field with ``/``)."""

from __future__ import annotations

from typing import Any, Sequence


def rref(rows: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def solve(a: Sequence[Sequence[Any]], b: Sequence[Any]) -> list[Any] | None:
    """One solution of ``a x = b`` or ``None`` when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, piv = rref(aug)
    if n in piv:
        return None
    zero = b[0] - b[0] if b else 0
    x = [zero] * n
    for row, c in zip(red, piv):
        x[c] = row[n]
    return x
