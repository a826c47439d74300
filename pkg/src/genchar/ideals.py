"""Polynomial ideals: membership, radical membership, dimension, type ideals.

Ideals with cyclotomic coefficients are computed over Q by adjoining one
extra variable ``t`` (placed last) together with ``Phi_m(t)``; since
``Q[x, t]/(Phi_m(t))`` is ``Q(z_m)[x]``, membership and dimension are
unchanged.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Any, Sequence

from .cyclotomic import CycloNum, RootOfUnity, cyclotomic_coeffs
from .groebner import groebner_basis, normal_form
from .lattice import lcm
from .mpoly import Exps, MPoly
from .mult_lattice import relation_lattice
from .numtheory import phi

NEG_INF = -math.inf


def _conductor(polys: Sequence[MPoly]) -> int:
    m = 1
    for p in polys:
        for c in p.terms.values():
            if isinstance(c, CycloNum):
                m = lcm(m, c.conductor)
    return m


def _lift(p: MPoly, m: int, order: str) -> MPoly:
    """Replace z_m by the extra last variable t."""
    out: dict[Exps, Any] = {}
    for e, c in p.terms.items():
        if isinstance(c, CycloNum):
            step = m // c.conductor
            items = [(j * step, q) for j, q in enumerate(c.coeffs) if q]
        else:
            items = [(0, c)]
        for k, q in items:
            key = e + (k,)
            out[key] = out.get(key, 0) + q
    return MPoly(p.nvars + 1, out, order)


def _drop(p: MPoly, m: int) -> MPoly:
    """Inverse of ``_lift`` for polynomials reduced modulo Phi_m(t)."""
    n = p.nvars - 1
    groups: dict[Exps, list] = {}
    for e, c in p.terms.items():
        groups.setdefault(e[:n], []).append((e[n], c))
    out = {}
    for e, items in groups.items():
        dense = [Fraction(0)] * m
        for k, c in items:
            dense[k % m] += c
        out[e] = CycloNum.from_dense(dense, m)
    res = MPoly(n, out, p.order)
    return res.map_coeffs(lambda c: c.as_rational() if c.is_rational() else c)


def _phi_poly(m: int, nvars: int, order: str) -> MPoly:
    terms = {(0,) * (nvars - 1) + (i,): Fraction(c) for i, c in enumerate(cyclotomic_coeffs(m)) if c}
    return MPoly(nvars, terms, order)


class Ideal:
    """An ideal of K[x1..xn] given by generators; the Groebner basis is cached."""

    def __init__(self, nvars: int, gens: Sequence[MPoly], order: str = "grevlex"):
        self.nvars = nvars
        self.order = order
        self.gens = tuple(g.with_order(order) for g in gens if not g.is_zero())
        for g in self.gens:
            if g.nvars != nvars:
                raise ValueError("generator in the wrong number of variables")
        self.conductor = _conductor(self.gens)
        self._gb: list[MPoly] | None = None
        self._radical: tuple[MPoly, ...] | None = None

    @classmethod
    def of(cls, gens: Sequence[MPoly], nvars: int | None = None, order: str = "grevlex") -> "Ideal":
        n = nvars if nvars is not None else (gens[0].nvars if gens else 0)
        return cls(n, gens, order)

    # -- internal representation ----------------------------------------------
    @property
    def cyclotomic(self) -> bool:
        return self.conductor > 1

    def _internal_order(self) -> str:
        return f"elim:{self.nvars}" if self.cyclotomic else self.order

    def _internal_gens(self, m: int | None = None) -> list[MPoly]:
        m = self.conductor if m is None else m
        if m == 1:
            return list(self.gens)
        o = f"elim:{self.nvars}"
        return [_lift(g, m, o) for g in self.gens] + [_phi_poly(m, self.nvars + 1, o)]

    def internal_basis(self) -> list[MPoly]:
        if self._gb is None:
            self._gb = groebner_basis(self._internal_gens(), self._internal_order())
        return self._gb

    def _with_conductor(self, m: int) -> "Ideal":
        if m == self.conductor:
            return self
        big = Ideal(self.nvars, self.gens, self.order)
        big.conductor = lcm(m, self.conductor)
        big._radical = None
        return big

    def _prepare(self, p: MPoly) -> tuple["Ideal", MPoly]:
        m = _conductor([p])
        ideal = self if self.conductor % m == 0 else self._with_conductor(m)
        if ideal.conductor == 1:
            return ideal, p.with_order(ideal.order)
        return ideal, _lift(p, ideal.conductor, f"elim:{self.nvars}")

    # -- queries ---------------------------------------------------------------
    def groebner(self) -> list[MPoly]:
        """Reduced Groebner basis, written back in the original coefficients."""
        gb = self.internal_basis()
        if not self.cyclotomic:
            return gb
        m = self.conductor
        out = []
        for g in gb:
            if g.lead_monomial()[: self.nvars] == (0,) * self.nvars:
                continue  # the relation Phi_m(t) itself
            out.append(_drop(g, m).with_order(self.order).monic())
        return out

    def is_unit(self) -> bool:
        gb = self.internal_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def reduce(self, p: MPoly) -> MPoly:
        ideal, q = self._prepare(p)
        r = normal_form(q, ideal.internal_basis())
        return _drop(r, ideal.conductor) if ideal.cyclotomic else r

    def contains(self, p: MPoly) -> bool:
        if p.is_zero():
            return True
        ideal, q = self._prepare(p)
        return normal_form(q, ideal.internal_basis()).is_zero()

    __contains__ = contains

    def radical_contains(self, p: MPoly) -> bool:
        if self.contains(p):
            return True
        ideal, q = self._prepare(p)
        rad = ideal._zero_dim_radical()
        if rad is not None:
            return normal_form(q, rad).is_zero()
        # 1 in I + (1 - y q), y a fresh first variable
        n = q.nvars
        gens = [g.embed(n + 1, 1) for g in ideal._internal_gens()]
        y = MPoly.var(0, n + 1)
        gens.append(MPoly.const(Fraction(1), n + 1) - y * q.embed(n + 1, 1))
        gb = groebner_basis([g.with_order("grevlex") for g in gens], "grevlex")
        return len(gb) == 1 and gb[0].is_constant()

    def _zero_dim_radical(self) -> list[MPoly] | None:
        """Internal basis of the radical when the ideal is zero-dimensional, else None.

        In characteristic zero a zero-dimensional ideal containing a squarefree
        univariate polynomial in every variable is radical, so adding the
        squarefree parts of the minimal polynomials of the variables suffices.
        """
        if self._radical is None:
            gb = self.internal_basis()
            rational = all(isinstance(c, (int, Fraction)) for g in gb for c in g.terms.values())
            # the squarefree-part argument needs characteristic zero
            if not rational or self.dim() != 0:
                self._radical = ()
            else:
                nv = gb[0].nvars
                pool = gb + self._internal_gens()
                extra = []
                for i in range(nv):
                    if any(_univariate_in(g, i) and _is_squarefree(_dense(g, i)) for g in pool):
                        continue
                    m = _min_poly(gb, i)
                    s = _squarefree_part(m)
                    if len(s) < len(m):
                        extra.append(_from_dense(s, i, nv, gb[0].order))
                self._radical = tuple(groebner_basis(gb + extra, gb[0].order) if extra else gb)
        return list(self._radical) or None

    def dim(self) -> float | int:
        gb = self.internal_basis()
        if len(gb) == 1 and gb[0].is_constant():
            return NEG_INF
        nv = gb[0].nvars if gb else (self.nvars + (1 if self.cyclotomic else 0))
        leads = [g.lead_monomial() for g in gb]
        best = 0
        for size in range(nv, 0, -1):
            for S in combinations(range(nv), size):
                s = set(S)
                if not any(all(i in s for i, k in enumerate(e) if k) for e in leads):
                    return size
        return best

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.nvars != other.nvars:
            raise ValueError("ideals in different rings")
        return Ideal(self.nvars, self.gens + other.gens, self.order)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.nvars, [a * b for a in self.gens for b in other.gens], self.order)

    def saturate(self, var_indices: Sequence[int] | None = None) -> "Ideal":
        """I : (prod x_i)^infinity via elimination of an extra variable."""
        idx = range(self.nvars) if var_indices is None else var_indices
        n = self.nvars
        base = self._internal_gens()
        extra = 1 if self.cyclotomic else 0
        order = f"elim:1"
        gens = [g.embed(n + extra + 1, 1).with_order(order) for g in base]
        prod = MPoly.const(Fraction(1), n + extra + 1, order)
        for i in idx:
            prod = prod * MPoly.var(i + 1, n + extra + 1, order=order)
        z = MPoly.var(0, n + extra + 1, order=order)
        gens.append(MPoly.const(Fraction(1), n + extra + 1, order) - z * prod)
        gb = groebner_basis(gens, order)
        kept = [MPoly(n + extra, {e[1:]: c for e, c in g.terms.items()}) for g in gb if g.degree_in(0) <= 0]
        if self.cyclotomic:
            kept = [_drop(g, self.conductor) for g in kept if any(e[:n] != (0,) * n for e in g.terms)]
        return Ideal(n, kept, self.order)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"


def groebner(ideal: Ideal) -> list[MPoly]:
    return ideal.groebner()


def radical_member(p: MPoly, ideal: Ideal) -> bool:
    """Whether ``p`` lies in the radical of ``ideal``."""
    return ideal.radical_contains(p)


def ideal_dim(ideal: Ideal) -> float | int:
    """Krull dimension of the quotient ring; ``-inf`` for the unit ideal."""
    return ideal.dim()


# -- special polynomials and type ideals -----------------------------------------------


def _as_monomial(m: MPoly | Sequence[int] | int, nvars: int | None) -> MPoly:
    if isinstance(m, MPoly):
        if len(m.terms) != 1:
            raise ValueError("expected a monomial")
        return m
    if isinstance(m, int):
        return MPoly.const(Fraction(1), nvars or 0)
    return MPoly.monomial(tuple(m))


def special_poly(M: MPoly | Sequence[int], N: MPoly | Sequence[int] | int, k: int) -> MPoly:
    """prod over primitive k-th roots z of (M - z N), expanded over Q."""
    Mp = _as_monomial(M, None)
    Np = _as_monomial(N, Mp.nvars)
    if Np.nvars != Mp.nvars:
        Np = Np.embed(Mp.nvars) if Np.nvars == 0 else Np
    out = MPoly.const(CycloNum.rational(1), Mp.nvars)
    for a in range(1, k + 1):
        if math.gcd(a, k) == 1:
            z = CycloNum.from_root(RootOfUnity(a, k))
            out = out * (Mp.map_coeffs(CycloNum.rational) - Np.map_coeffs(lambda c: z * c))
    for c in out.terms.values():
        if not c.is_rational():
            raise AssertionError("special polynomial with an irrational coefficient")
    return out.map_coeffs(lambda c: c.as_rational())


def _binomial_parts(v: Sequence[int], n: int) -> tuple[MPoly, MPoly]:
    pos = tuple(max(x, 0) for x in v)
    neg = tuple(max(-x, 0) for x in v)
    return MPoly.monomial(pos), MPoly.monomial(neg)


def j_ideal(g: Sequence[RootOfUnity]) -> Ideal:
    """Ideal over Q generated by special polynomials vanishing on ``g``.

    Generators: Phi_{ord g_i}(x_i) for each coordinate and ``x^{v+} - x^{v-}``
    for each HNF basis vector ``v`` of the relation lattice.  Their common zeros
    are exactly the Galois conjugates of ``g``.
    """
    n = len(g)
    gens = []
    for i, r in enumerate(g):
        gens.append(special_poly(MPoly.var(i, n), MPoly.const(Fraction(1), n), r.den))
    for v in relation_lattice(list(g)).basis:
        M, N = _binomial_parts(v, n)
        if M != N and M - N not in gens:
            gens.append(M - N)
    return Ideal(n, gens)


def i_ideal(g: Sequence[RootOfUnity], over_units: bool = True) -> Ideal:
    """Ideal generated by the binomials ``M - c N`` (c a root of unity) vanishing on ``g``.

    With coefficients allowed from all roots of unity the relation lattice over
    U is all of Z^n, so the basis binomials are ``x_i - g_i``; with
    ``over_units=False`` the coefficient group is trivial and the result is the
    saturated lattice ideal.
    """
    n = len(g)
    if over_units:
        basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    else:
        basis = list(relation_lattice(list(g)).basis)
    gens = []
    for v in basis:
        M, N = _binomial_parts(v, n)
        c = CycloNum.rational(1)
        for x, r in zip(v, g):
            c = c * CycloNum.from_root(r**x)
        cc = c.as_rational() if c.is_rational() else c
        gens.append(M - N * cc)
    ideal = Ideal(n, gens)
    return ideal if over_units else ideal.saturate()


def type_ideals(g: Sequence[RootOfUnity]) -> tuple[Ideal, Ideal]:
    """(I_g, J_g) for a tuple of roots of unity."""
    return i_ideal(g), j_ideal(g)


# -- univariate helpers for radicals of zero-dimensional ideals ---------------------


def _univariate_in(g: MPoly, i: int) -> bool:
    return all(not x for e in g.terms for j, x in enumerate(e) if j != i) and g.degree_in(i) > 0


def _dense(g: MPoly, i: int) -> list[Fraction]:
    out = [Fraction(0)] * (g.degree_in(i) + 1)
    for e, c in g.terms.items():
        out[e[i]] += c
    return out


def _from_dense(c: Sequence[Fraction], i: int, nvars: int, order: str) -> MPoly:
    return MPoly(nvars, {tuple(k if j == i else 0 for j in range(nvars)): x for k, x in enumerate(c) if x}, order)


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k, x in enumerate(b):
            a[shift + k] -= f * x
        _trim(a)
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b)
    return [x / a[-1] for x in a]


def _poly_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, out = list(a), [Fraction(0)] * (len(a) - len(b) + 1)
    for shift in range(len(out) - 1, -1, -1):
        f = a[shift + len(b) - 1] / b[-1]
        out[shift] = f
        for k, x in enumerate(b):
            a[shift + k] -= f * x
    return out


def _squarefree_part(a: list[Fraction]) -> list[Fraction]:
    d = [k * x for k, x in enumerate(a)][1:]
    return _poly_div(a, _poly_gcd(a, d))


def _is_squarefree(a: list[Fraction]) -> bool:
    return len(_poly_gcd(a, [k * x for k, x in enumerate(a)][1:])) == 1


def _min_poly(gb: list[MPoly], i: int) -> list[Fraction]:
    """Minimal polynomial of x_i modulo a zero-dimensional Groebner basis.

    Normal forms of 1, x_i, x_i^2, ... are eliminated incrementally until the
    first linear dependency, whose coefficients are returned.
    """
    nv, order = gb[0].nvars, gb[0].order
    x = MPoly.var(i, nv, order=order)
    rows: list[tuple[Exps, dict, list[Fraction]]] = []
    power = MPoly.const(Fraction(1), nv, order)
    k = 0
    while True:
        vec = dict(normal_form(power, gb).terms)
        combo = [Fraction(0)] * k + [Fraction(1)]
        for piv, rv, rc in rows:
            f = vec.get(piv)
            if f:
                for e, c in rv.items():
                    v = vec.get(e, 0) - f * c
                    if v:
                        vec[e] = v
                    else:
                        vec.pop(e, None)
                for j, c in enumerate(rc):
                    combo[j] -= f * c
        if not vec:
            return combo
        piv = max(vec, key=lambda e: (sum(e), e))
        f = vec[piv]
        rows.append((piv, {e: c / f for e, c in vec.items()}, [c / f for c in combo]))
        power = normal_form(power * x, gb)
        k += 1
