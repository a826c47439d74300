"""Linear equations in roots of unity.

Solutions of ``c . x = 1`` are searched among the N-th roots of unity for a
fixed N: every candidate ``x_1..x_{n-1}`` is enumerated, ``x_n`` is solved
for exactly, and the result is looked up among the allowed roots.  Elements
of Q(z_N) are integer vectors in the power basis reduced modulo Phi_N, which
is a canonical representation, so the lookup is an exact dictionary probe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .character import CharContext
from .config import limits
from .cyclotomic import RootOfUnity, _reduce_mod_phi
from .errors import PreconditionError, ResourceError, UnitKindError
from .lattice import ExponentLattice, hnf, integer_kernel, lcm
from .mult_lattice import FormalUnit, Unit, _normalize, _vectors, mult_basis
from .numtheory import phi, primes_upto

RootTuple = tuple[RootOfUnity, ...]


def d_bound(n: int) -> int:
    """Product of the primes <= n + 1; orders of non-degenerate solutions divide it."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for q in primes_upto(n + 1):
        out *= q
    return out


@dataclass(frozen=True)
class MannEquation:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("an equation needs at least one term")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonzero")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class MannSolutionSet:
    solutions: tuple[RootTuple, ...]
    bound_used: int

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self) -> int:
        return len(self.solutions)

    def as_set(self) -> set[RootTuple]:
        return set(self.solutions)


@lru_cache(maxsize=64)
def root_vectors(n_conductor: int) -> np.ndarray:
    """Row e = z_N^e reduced modulo Phi_N (integer power-basis coordinates)."""
    N = n_conductor
    rows = []
    for e in range(N):
        dense = [0] * N
        dense[e] = 1
        rows.append(_reduce_mod_phi(dense, N))
    return np.array(rows, dtype=np.int64).reshape(N, phi(N))


def _scaled(coeffs: Sequence[Fraction]) -> tuple[int, list[int]]:
    L = lcm(*(c.denominator for c in coeffs))
    return L, [int(c * L) for c in coeffs]


def is_nondegenerate(coeffs: Sequence[Fraction], exps: Sequence[int], N: int) -> bool:
    """No proper nonempty subsum of ``sum c_i z_N^{e_i}`` vanishes."""
    V = root_vectors(N)
    _, ci = _scaled(coeffs)
    n = len(exps)
    terms = [ci[i] * V[exps[i]] for i in range(n)]
    for mask in range(1, (1 << n) - 1):
        acc = sum(terms[i] for i in range(n) if mask >> i & 1)
        if not np.any(acc):
            return False
    return True


def solve_in_roots(coeffs: Sequence[Fraction], N: int, allowed: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """All non-degenerate solutions with every x_i = z_N^{e_i}, e_i in ``allowed``."""
    coeffs = [Fraction(c) for c in coeffs]
    n = len(coeffs)
    S = np.array(sorted(set(range(N) if allowed is None else (e % N for e in allowed))), dtype=np.int64)
    V = root_vectors(N)
    L, ci = _scaled(coeffs)
    lookup = {(ci[-1] * V[e]).tobytes(): int(e) for e in S}
    base = L * V[0]
    if n == 1:
        hit = lookup.get(base.tobytes())
        cands = [] if hit is None else [(hit,)]
    else:
        grids = np.array(list(itertools.product(range(len(S)), repeat=n - 1)), dtype=np.int64)
        idx = S[grids]
        T = np.broadcast_to(base, (len(idx), V.shape[1])).copy()
        for i in range(n - 1):
            T -= ci[i] * V[idx[:, i]]
        cands = []
        for row, pre in zip(T, idx):
            hit = lookup.get(row.tobytes())
            if hit is not None:
                cands.append(tuple(int(e) for e in pre) + (hit,))
    return [c for c in cands if is_nondegenerate(coeffs, c, N)]


def mann_solve(eq: MannEquation | Sequence[Fraction | int]) -> MannSolutionSet:
    """Every non-degenerate root-of-unity solution of ``c . x = 1``."""
    if not isinstance(eq, MannEquation):
        eq = MannEquation(tuple(eq))
    if eq.n > limits().mann_terms:
        raise ResourceError(f"{eq.n} terms exceeds the enumeration budget of {limits().mann_terms}")
    D = d_bound(eq.n)
    sols = solve_in_roots(eq.coeffs, D)
    out = sorted(tuple(RootOfUnity(e, D) for e in s) for s in sols)
    return MannSolutionSet(tuple(out), D)


# -- genericity ------------------------------------------------------------------


@dataclass(frozen=True)
class GenericityResult:
    generic: bool
    witness: Unit | None = None
    equation: tuple[Fraction, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.generic


def _is_algebraic(u: Unit) -> bool:
    return not (isinstance(u, FormalUnit) and u.transcendental)


def _torsion_free_lattice(units: Sequence[Unit], n: int) -> ExponentLattice:
    """{v : units[:n]^v in <units[n:]> * U} for number-kind units."""
    rows, mods = _vectors(list(units))
    if mods and not isinstance(units[0], FormalUnit):
        # the last coordinate is the torsion part; roots of unity are free to absorb it
        mods = [r[:-1] + [1] for r in mods]
    kern = integer_kernel(rows + mods)
    return ExponentLattice(n, hnf(v[:n] for v in kern))


def _saturated(lat: ExponentLattice) -> bool:
    n = lat.dim
    if not lat.basis:
        return True
    cols = [[row[j] for row in lat.basis] for j in range(n)]
    perp = integer_kernel(cols)
    sat = integer_kernel([[w[j] for w in perp] for j in range(n)], n) if perp else hnf(
        [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    )
    return hnf(sat) == lat.basis


def genericity_check(G: Sequence[Unit], H: Sequence[Unit] = (), field_tag: str = "Q") -> GenericityResult:
    """Decide whether the group generated by ``G`` is generic over ``<H> * U``.

    The precondition ``mcl(H') n G = H'`` (``H'`` the group generated by ``H``
    together with the torsion of ``G``) is verified first.  A generator that is
    multiplicatively independent over ``H'`` and algebraic is a witness against
    genericity: with ``a`` rational, ``x = a`` is a non-degenerate solution of
    ``(1/a) x = 1`` outside ``<H> * U``.
    """
    if field_tag != "Q":
        raise UnitKindError(f"unsupported coefficient field {field_tag!r}")
    G = [_normalize(u) for u in G]
    H = [_normalize(u) for u in H]
    if not G:
        return GenericityResult(True, reason="trivial group")
    for h in H:
        lat = _torsion_free_lattice([h] + G, 1)
        if lat.basis != ((1,),):
            raise PreconditionError(f"{h} does not lie in the group generated by G")
    if not _saturated(_torsion_free_lattice(G + H, len(G))):
        raise PreconditionError("mcl(H) n G differs from H")
    basis = mult_basis(G, H)
    for a in basis:
        if _is_algebraic(a):
            eq = (1 / a,) if isinstance(a, Fraction) else None
            return GenericityResult(False, a, eq, "algebraic and multiplicatively independent over H")
    return GenericityResult(True, reason="every independent generator is transcendental" if basis else "G is torsion over H")


# -- axiom scheme instances ------------------------------------------------------------


@dataclass
class AxiomResult:
    holds: bool
    p: int
    n: int
    n_max: int
    equations: int = 0
    solutions: int = 0
    witness: tuple | None = None
    details: list[str] = dfield(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def character_roots(p: int, n_max: int) -> tuple[int, list[int]]:
    """(N, exponents e) with z_N^e running over chi(F_{p^m}^x), m <= n_max."""
    orders = [p**m - 1 for m in range(1, n_max + 1)]
    N = lcm(*orders)
    exps = sorted({k * (N // q) for q in orders for k in range(q)})
    return N, exps


def axiom_instance(ctx: CharContext, n: int, c_pool: Iterable[Sequence[Fraction | int]], n_max: int) -> AxiomResult:
    """Check that non-degenerate solutions in chi(F^x) have x_i^{d(n)} = 1."""
    if n > limits().mann_terms:
        raise ResourceError(f"{n} terms exceeds the enumeration budget of {limits().mann_terms}")
    if ctx.p**n_max > limits().field_bound:
        raise ResourceError("n_max exceeds the field bound")
    N, exps = character_roots(ctx.p, n_max)
    D = d_bound(n)
    res = AxiomResult(True, ctx.p, n, n_max)
    for c in c_pool:
        c = tuple(Fraction(x) for x in c)
        if len(c) != n:
            raise ValueError("coefficient vector has the wrong length")
        res.equations += 1
        for sol in solve_in_roots(c, N, exps):
            res.solutions += 1
            roots = tuple(RootOfUnity(e, N) for e in sol)
            if any(D % r.den for r in roots):
                res.holds = False
                res.witness = (c, roots)
                return res
    return res


def coefficient_pool(values: Sequence[Fraction | int], n: int) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(v) for v in c) for c in itertools.product(values, repeat=n)]


STANDARD_VALUES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3))
