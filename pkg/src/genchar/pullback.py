"""Pull algebraic sets back along the character.

For ``P`` with cyclotomic coefficients in variables ``w``, the set of
``s in F^k`` with ``P(chi(s)) = 0`` is algebraic over F_p.  Each term of
``P`` is a rational multiple of ``chi`` of a monomial ``a * s^e``, after

* splitting coefficients along the basis ``z_{p^R}^i`` of the p-power
  cyclotomic part (linearly disjoint from the image of chi), which turns one
  equation into several, and
* absorbing the remaining prime-to-p roots of unity into ``a`` through the
  inverse of chi.

A sum ``sum r_j chi(t_j) = 0`` holds exactly when the terms split into blocks
that are either single vanishing terms ``t_j = 0`` or vanishing sums with no
vanishing proper subsum.  The latter force every ratio ``chi(t_j / t_j0)`` to
be a non-degenerate solution of a Mann equation, hence ``t_j = b_j t_j0`` for
finitely many constants ``b_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

from .character import CharContext, chi_preimage
from .cyclotomic import CycloNum, RootOfUnity
from .errors import GencharError, ResourceError
from .finite_field import FqElem
from .ideals import Ideal
from .lattice import lcm
from .mann import mann_solve
from .config import limits
from .mpoly import Exps, MPoly

# A chi-monomial a * s^e with a in F^x.
ChiMono = tuple[FqElem, Exps]
# One equation sum_j r_j chi(t_j) = 0.
ChiSum = list[tuple[Fraction, ChiMono]]
# A closed piece given by its defining polynomials (empty list = whole space).
Piece = tuple[MPoly, ...]


def _coefficient_parts(c: Any, p: int) -> dict[int, dict[RootOfUnity, Fraction]]:
    """Split ``c`` as sum_i z_{p^R}^i * (sum_u q_u u), u prime-to-p roots.

    Returns {i: {u: q}} with respect to the p-power conductor of ``c``.
    """
    if isinstance(c, (int, Fraction)):
        return {0: {RootOfUnity(0, 1): Fraction(c)}}
    if not isinstance(c, CycloNum):
        raise GencharError(f"unsupported coefficient {c!r}")
    m = c.conductor
    R = 0
    while m % p == 0:
        m //= p
        R += 1
    pr = p**R
    out: dict[int, dict[RootOfUnity, Fraction]] = {}
    # z_M^j = z_{pr}^{j * u1} * z_{m}^{j * u2} with u1, u2 from CRT, M = pr * m
    M = c.conductor
    for j, q in enumerate(c.coeffs):
        if not q:
            continue
        r = RootOfUnity(j, M)
        # split r into p-power part and prime-to-p part
        a_pr = (r.num * (M // r.den)) % M  # exponent at M
        e_pr = a_pr * pow(m, -1, pr) % pr if pr > 1 else 0
        e_m = a_pr * pow(pr, -1, m) % m if m > 1 else 0
        # r = z_pr^{e_pr} * z_m^{e_m}; rewrite z_pr^{e_pr} in the basis i < phi(pr)
        for i, coeff in _prime_power_basis(e_pr, p, R):
            slot = out.setdefault(i, {})
            u = RootOfUnity(e_m, m)
            slot[u] = slot.get(u, Fraction(0)) + q * coeff
    return out


def _prime_power_basis(e: int, p: int, R: int) -> list[tuple[int, Fraction]]:
    """z_{p^R}^e as a combination of z_{p^R}^i, 0 <= i < phi(p^R)."""
    if R == 0:
        return [(0, Fraction(1))]
    pr = p**R
    top = pr // p * (p - 1)  # phi(p^R)
    e %= pr
    if e < top:
        return [(e, Fraction(1))]
    # Phi_{p^R}(z) = sum_{k<p} z^{k p^{R-1}} = 0 expresses z^e with e >= top
    step = pr // p
    base = e - top
    return [(base + k * step, Fraction(-1)) for k in range(p - 1)]


def _equations(poly: MPoly, ctx: CharContext) -> list[ChiSum]:
    """The system of chi-sums equivalent to ``poly(chi(s)) = 0``."""
    p = ctx.p
    rows: dict[int, dict[ChiMono, Fraction]] = {}
    for e, c in poly.terms.items():
        for i, parts in _coefficient_parts(c, p).items():
            row = rows.setdefault(i, {})
            for u, q in parts.items():
                a = chi_preimage(ctx, u)
                if a is None:
                    raise AssertionError("prime-to-p root without a preimage")
                key = (a, e)
                row[key] = row.get(key, Fraction(0)) + q
    out = []
    for i in sorted(rows):
        terms = [(q, key) for key, q in rows[i].items() if q != 0]
        terms.sort(key=lambda t: (t[1][1], t[1][0].sort_key()))
        if terms:
            out.append(terms)
    return out


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _mono_poly(t: ChiMono, k: int) -> MPoly:
    a, e = t
    return MPoly(k, {e: a})


def _block_pieces(block: Sequence[tuple[Fraction, ChiMono]], ctx: CharContext, k: int) -> list[Piece]:
    """Closed pieces whose union is the zero set of a vanishing block."""
    if len(block) == 1:
        return [(_mono_poly(block[0][1], k),)]
    r0, t0 = block[0]
    coeffs = [-r / r0 for r, _ in block[1:]]
    if len(coeffs) > limits().mann_terms:
        raise ResourceError(f"block of {len(block)} terms exceeds the Mann budget")
    pieces = []
    for sol in mann_solve(coeffs):
        betas = [chi_preimage(ctx, u) for u in sol]
        if any(b is None for b in betas):
            continue
        base = _mono_poly(t0, k)
        pieces.append(tuple(_mono_poly(t, k) - base * b for (_, t), b in zip(block[1:], betas)))
    return pieces


def _is_empty(piece: Piece, k: int) -> bool:
    return bool(piece) and Ideal(k, list(piece)).is_unit()


def _contained(a: Piece, b: Piece, k: int) -> bool:
    """Whether V(a) is a subset of V(b)."""
    if not b:
        return True
    ia = Ideal(k, list(a))
    return all(ia.radical_contains(g) for g in b)


def _prune(pieces: list[Piece], k: int) -> list[Piece]:
    pieces = [pc for pc in pieces if not _is_empty(pc, k)]
    out: list[Piece] = []
    for i, pc in enumerate(pieces):
        redundant = False
        for j, other in enumerate(pieces):
            if i == j:
                continue
            if _contained(pc, other, k):
                # keep the first of two equal pieces
                if not (_contained(other, pc, k) and j > i):
                    redundant = True
                    break
        if not redundant:
            out.append(pc)
    return out


def chi_sum_pieces(eq: ChiSum, ctx: CharContext, k: int) -> list[Piece]:
    """Closed pieces whose union is {s : sum_j r_j chi(t_j(s)) = 0}."""
    pieces: list[Piece] = []
    idx = list(range(len(eq)))
    cache: dict[tuple[int, ...], list[Piece]] = {}
    for part in _set_partitions(idx):
        options: list[list[Piece]] = []
        for block in part:
            key = tuple(block)
            if key not in cache:
                cache[key] = _block_pieces([eq[j] for j in block], ctx, k)
            options.append(cache[key])
        combos: list[Piece] = [()]
        for opts in options:
            combos = [c + o for c in combos for o in opts]
            if not combos:
                break
        pieces.extend(combos)
    return _prune(pieces, k)


def _product_system(pieces: list[Piece], k: int, one: FqElem) -> list[MPoly]:
    """Generators of the union of the pieces (products of generators)."""
    if not pieces:
        return [MPoly.const(one, k)]
    system = [MPoly.const(one, k)]
    for pc in pieces:
        if not pc:
            return []
        system = [a * b for a in system for b in pc]
    return system


@dataclass(frozen=True)
class PullbackResult:
    system: tuple[MPoly, ...]
    pieces: tuple[tuple[Piece, ...], ...]

    def format(self, name: str = "s") -> list[str]:
        return [g.format(name) for g in self.system]


def char_pullback(ctx: CharContext, P: Sequence[MPoly], k: int | None = None) -> PullbackResult:
    """A system Q over F_p with Z(Q) = chi^{-1}(Z(P)) inside F^k."""
    k = k if k is not None else (P[0].nvars if P else 0)
    one = FqElem.one(ctx.p)
    system: list[MPoly] = []
    all_pieces = []
    for poly in P:
        if poly.nvars != k:
            raise ValueError("polynomial arity does not match k")
        for eq in _equations(poly, ctx):
            pieces = chi_sum_pieces(eq, ctx, k)
            all_pieces.append(tuple(pieces))
            system.extend(_product_system(pieces, k, one))
    if not system:
        return PullbackResult((), tuple(all_pieces))
    gb = Ideal(k, system).groebner()
    return PullbackResult(tuple(g.monic() for g in gb), tuple(all_pieces))
