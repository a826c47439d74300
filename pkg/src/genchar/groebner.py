"""Buchberger's algorithm over an arbitrary exact coefficient field.

Polynomials are handled as plain ``{exponents: coeff}`` dicts inside the
engine; ``MPoly`` is the interface type.  Pairs are selected by the sugar
strategy and pruned with the Gebauer-Moeller installation of Buchberger's
product and chain criteria.
"""

from __future__ import annotations

from typing import Any, Callable, Sequence

from .config import limits
from .errors import ResourceError
from .mpoly import Exps, MPoly, order_key

Poly = dict


class _Order:
    def __init__(self, order: str):
        self.name = order
        self._key = order_key(order)
        self._memo: dict[Exps, Any] = {}

    def key(self, e: Exps) -> Any:
        k = self._memo.get(e)
        if k is None:
            k = self._memo[e] = self._key(e)
        return k

    def lead(self, p: Poly) -> Exps:
        return max(p, key=self.key)


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exps, b: Exps) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _sub_mul(p: Poly, c: Any, shift: Exps, g: Poly) -> None:
    """p -= c * x^shift * g, in place."""
    for e, v in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        w = p.get(m)
        w = -c * v if w is None else w - c * v
        if w == 0:
            p.pop(m, None)
        else:
            p[m] = w


def reduce_poly(f: Poly, basis: Sequence[tuple[Exps, Any, Poly]], order: _Order, full: bool = True) -> Poly:
    """Normal form of ``f`` modulo ``basis`` entries (lead, lead coeff, poly)."""
    p = dict(f)
    rem: Poly = {}
    while p:
        m = order.lead(p)
        c = p[m]
        for lm, lc, g in basis:
            if _divides(lm, m):
                _sub_mul(p, c / lc, tuple(a - b for a, b in zip(m, lm)), g)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[m] = c
            del p[m]
    return rem


def _monic(p: Poly, order: _Order) -> Poly:
    lc = p[order.lead(p)]
    return {e: c / lc for e, c in p.items()}


def groebner_dicts(polys: Sequence[Poly], nvars: int, order: _Order, check: Callable[[], None] | None = None) -> list[Poly]:
    lim = limits()
    store: list[Poly] = []
    leads: list[Exps] = []
    sugar: list[int] = []
    G: list[int] = []
    B: list[tuple[int, int]] = []

    def deg(e: Exps) -> int:
        return sum(e)

    def add(h: Poly, s: int) -> None:
        nonlocal G, B
        idx = len(store)
        store.append(h)
        lh = order.lead(h)
        leads.append(lh)
        sugar.append(s)
        if deg(lh) > lim.gb_max_degree:
            raise ResourceError(f"Groebner degree cap {lim.gb_max_degree} exceeded")
        C = list(G)
        D: list[int] = []
        while C:
            g1 = C.pop(0)
            l1 = _lcm(lh, leads[g1])
            if _coprime(lh, leads[g1]) or not any(
                _divides(_lcm(lh, leads[g2]), l1) for g2 in C + D
            ):
                D.append(g1)
        E = [(g, idx) for g in D if not _coprime(lh, leads[g])]
        keep = []
        for (a, b) in B:
            lab = _lcm(leads[a], leads[b])
            if _divides(lh, lab) and _lcm(leads[a], lh) != lab and _lcm(leads[b], lh) != lab:
                continue
            keep.append((a, b))
        B = keep + E
        G = [g for g in G if not _divides(lh, leads[g])] + [idx]
        if len(G) > lim.gb_max_basis:
            raise ResourceError(f"Groebner basis size cap {lim.gb_max_basis} exceeded")

    for f in polys:
        if not f:
            continue
        basis = [(leads[g], store[g][leads[g]], store[g]) for g in G]
        h = reduce_poly(f, basis, order)
        if h:
            h = _monic(h, order)
            add(h, max(deg(e) for e in h))
            if not any(h.keys() - {(0,) * nvars}):
                return [h]

    while B:
        if check is not None:
            check()

        def pair_key(pr: tuple[int, int]) -> Any:
            a, b = pr
            l = _lcm(leads[a], leads[b])
            s = max(sugar[a] - deg(leads[a]), sugar[b] - deg(leads[b])) + deg(l)
            return (s, order.key(l))

        best = min(range(len(B)), key=lambda i: pair_key(B[i]))
        a, b = B.pop(best)
        la, lb = leads[a], leads[b]
        l = _lcm(la, lb)
        s_sugar = max(sugar[a] - deg(la), sugar[b] - deg(lb)) + deg(l)
        sp: Poly = {}
        fa, fb = store[a], store[b]
        sa = tuple(x - y for x, y in zip(l, la))
        sb = tuple(x - y for x, y in zip(l, lb))
        _sub_mul(sp, -1 / fa[la], sa, fa)
        _sub_mul(sp, 1 / fb[lb], sb, fb)
        basis = [(leads[g], store[g][leads[g]], store[g]) for g in G]
        h = reduce_poly(sp, basis, order)
        if h:
            h = _monic(h, order)
            add(h, s_sugar)
            if all(not any(e) for e in h):
                return [h]

    # reduced basis
    gens = [store[g] for g in G]
    gens.sort(key=lambda p: order.key(order.lead(p)))
    out: list[Poly] = []
    for i, p in enumerate(gens):
        others = [(order.lead(q), q[order.lead(q)], q) for j, q in enumerate(gens) if j != i]
        lp = order.lead(p)
        if any(_divides(lo, lp) for lo, _, _ in others):
            continue
        out.append(p)
    final = []
    for i, p in enumerate(out):
        others = [(order.lead(q), q[order.lead(q)], q) for j, q in enumerate(out) if j != i]
        lp = order.lead(p)
        tail = {e: c for e, c in p.items() if e != lp}
        r = reduce_poly(tail, others, order)
        r[lp] = p[lp]
        final.append(_monic(r, order))
    final.sort(key=lambda p: order.key(order.lead(p)), reverse=True)
    return final


def groebner_basis(polys: Sequence[MPoly], order: str = "grevlex") -> list[MPoly]:
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial)."""
    if not polys:
        return []
    n = polys[0].nvars
    o = _Order(order)
    gb = groebner_dicts([p.terms for p in polys], n, o)
    return [MPoly(n, p, order) for p in gb]


def normal_form(f: MPoly, basis: Sequence[MPoly]) -> MPoly:
    if not basis:
        return f
    o = _Order(basis[0].order)
    triples = [(b.lead_monomial(), b.lead_coeff(), b.terms) for b in basis]
    return MPoly(f.nvars, reduce_poly(f.terms, triples, o), basis[0].order)
