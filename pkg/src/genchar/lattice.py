"""Integer lattices: row Hermite normal form and kernels.

Lattices are passed around as tuples of integer row tuples.  The empty tuple
is the zero lattice; callers that need the ambient dimension of an empty
basis keep it alongside (see ``ExponentLattice``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Sequence

Rows = tuple[tuple[int, ...], ...]


def hnf(rows: Iterable[Sequence[int]]) -> Rows:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)`` and zero
    rows are dropped, so two generator sets span the same lattice exactly when
    their HNFs coincide.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return ()
    ncols = len(a[0])
    if any(len(r) != ncols for r in a):
        raise ValueError("ragged integer matrix")
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            clean = True
            pr = a[r]
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // pr[c]
                    a[i] = [x - q * y for x, y in zip(a[i], pr)]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        pr = a[r]
        for i in range(r):
            q = a[i][c] // pr[c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], pr)]
        r += 1
    return tuple(tuple(row) for row in a[:r])


def integer_kernel(rows: Sequence[Sequence[int]], nrows: int | None = None) -> Rows:
    """HNF basis of ``{v : sum_i v_i * rows[i] = 0}`` (left kernel)."""
    n = len(rows) if nrows is None else nrows
    if n == 0:
        return ()
    k = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    h = hnf(aug)
    return hnf(row[k:] for row in h if not any(row[:k]))


def kernel_mod(a: Sequence[int], m: int) -> Rows:
    """HNF basis of ``{v in Z^n : sum a_i v_i = 0 (mod m)}``; always full rank."""
    if m < 1:
        raise ValueError("modulus must be positive")
    n = len(a)
    aug = [[int(a[i])] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    aug.append([m] + [0] * n)
    h = hnf(aug)
    return hnf(row[1:] for row in h if row[0] == 0)


def lattice_index(basis: Rows) -> int:
    """Index in Z^n of a full-rank HNF basis (product of pivots)."""
    out = 1
    for row in basis:
        out *= _pivot(row)
    return out


def _pivot(row: Sequence[int]) -> int:
    for x in row:
        if x:
            return x
    return 0


def contains(basis: Rows, v: Sequence[int]) -> bool:
    """Membership of ``v`` in the lattice with HNF basis ``basis``."""
    w = list(v)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        if w[c] % row[c]:
            return False
        q = w[c] // row[c]
        w = [x - q * y for x, y in zip(w, row)]
    return not any(w)


def brute_kernel_mod(a: Sequence[int], m: int) -> set[tuple[int, ...]]:
    """All v in the box [0, m)^n with a.v = 0 mod m (a test oracle)."""
    return {v for v in product(range(m), repeat=len(a)) if sum(x * y for x, y in zip(a, v)) % m == 0}


@dataclass(frozen=True)
class ExponentLattice:
    """A sublattice of Z^dim, stored by its HNF basis."""

    dim: int
    basis: Rows

    @classmethod
    def from_generators(cls, dim: int, gens: Iterable[Sequence[int]]) -> "ExponentLattice":
        return cls(dim, hnf(list(gens)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __contains__(self, v: Sequence[int]) -> bool:
        return contains(self.basis, v)

    def __str__(self) -> str:
        if not self.basis:
            return "[]"
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.basis) + "]"


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
