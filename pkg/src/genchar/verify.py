"""Batch property suites: character, mann, lies, refine, rank.

Each suite returns a ``SuiteReport`` holding one ``Check`` per property with
the number of instances examined and the first few counterexample witnesses.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .character import CharContext, verify_character
from .cyclotomic import CycloNum, RootOfUnity
from .ideals import NEG_INF
from .mann import STANDARD_VALUES, coefficient_pool, d_bound, mann_solve
from .pcsets import (
    AlgSet,
    FinitePresentation,
    PcSet,
    capdot,
    dotminus,
    is_essentially_disjoint,
    is_geometric,
    linear_corpus,
    meet,
    pc_closure,
    pc_op,
    pc_rank_deg,
    pc_rel,
    presentation_descriptor,
    presentation_gr_gd,
    refine_essentially_disjoint,
    refine_geometric,
    sample_points,
    top_component_rel,
    union_contains,
)
from .rank import BOTTOM, Atom, Descriptor, DisjointUnion, Empty, Ordinal2, Product, Union, gd_eval, gr_eval

MAX_WITNESSES = 5


@dataclass
class Check:
    name: str
    count: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, witness: Callable[[], str] | str = "") -> None:
        self.count += 1
        if not ok and len(self.failures) < MAX_WITNESSES:
            self.failures.append(witness() if callable(witness) else witness)
        elif not ok:
            self.failures.append("")

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SuiteReport:
    name: str
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        c = Check(name)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.passed:
                out.append(f"PASS {c.name} ({c.count} checks)")
            else:
                out.append(f"FAIL {c.name} ({len(c.failures)} of {c.count} failed)")
                out += [f"  witness: {w}" for w in c.failures[:MAX_WITNESSES] if w]
        out.append(f"{self.name}: {'pass' if self.passed else 'FAIL'}")
        return out


# -- character ---------------------------------------------------------------------------


def suite_character(p: int = 2, n_max: int = 4) -> SuiteReport:
    rep = verify_character(CharContext(p), n_max)
    out = SuiteReport("character")
    c = out.check(f"character laws p={p} n<={n_max}")
    c.count = rep.checks
    c.failures = list(rep.failures)
    return out


# -- mann --------------------------------------------------------------------------------


def roots_up_to(order_max: int) -> list[RootOfUnity]:
    """Every root of unity of order at most ``order_max``."""
    return sorted({RootOfUnity(a, k) for k in range(1, order_max + 1) for a in range(k)}, key=lambda r: (r.den, r.num))


def brute_force_mann(coeffs: Sequence[Fraction], order_max: int) -> set[tuple[RootOfUnity, ...]]:
    """Non-degenerate solutions of ``c . x = 1`` among roots of order <= order_max.

    A complex floating-point pass keeps near-solutions; each survivor and each
    of its subsums is then decided exactly in cyclotomic arithmetic.
    """
    roots = roots_up_to(order_max)
    vals = np.array([np.exp(2j * np.pi * r.num / r.den) for r in roots])
    n = len(coeffs)
    c = np.array([float(x) for x in coeffs])
    grid = np.array(list(itertools.product(range(len(roots)), repeat=n)), dtype=np.int64)
    total = (vals[grid] * c).sum(axis=1) - 1
    out = set()
    for row in grid[np.abs(total) < 1e-9]:
        tup = tuple(roots[i] for i in row)
        terms = [CycloNum.from_root(r) * q for r, q in zip(tup, coeffs)] + [CycloNum.rational(-1)]
        if not sum(terms[1:], terms[0]).is_zero():
            continue
        if _exact_nondegenerate(terms):
            out.add(tup)
    return out


def _exact_nondegenerate(terms: Sequence[CycloNum]) -> bool:
    m = len(terms)
    for mask in range(1, (1 << m) - 1):
        part = [terms[i] for i in range(m) if mask >> i & 1]
        if sum(part[1:], part[0]).is_zero():
            return False
    return True


def suite_mann(n: int = 2, values: Sequence[Fraction] = STANDARD_VALUES) -> SuiteReport:
    out = SuiteReport("mann")
    chk = out.check(f"mann_solve equals brute force, n={n}, orders <= {2 * d_bound(n)}")
    for c in coefficient_pool(values, n):
        got = mann_solve(c).as_set()
        want = brute_force_mann(c, 2 * d_bound(n))
        chk.record(got == want, lambda c=c, got=got, want=want: f"coeffs {tuple(map(str, c))}: solver {len(got)} vs brute {len(want)}")
    return out


# -- lies laws -----------------------------------------------------------------------------


def rd(T) -> tuple:
    return pc_rank_deg(T)


def _r(T) -> float:
    return rd(T)[0]


def almost_subset(T, U) -> bool:
    (rT, dT), (rU, _), (rI, dI) = rd(T), rd(U), rd(meet(T, U))
    return rT == rU == rI and dI == dT


def almost_equal(T, U) -> bool:
    return almost_subset(T, U) and almost_subset(U, T)


def almost_disjoint(T, U) -> bool:
    r = _r(T)
    return r == _r(U) and _r(meet(T, U)) < r


def _show(*sets) -> str:
    return " ; ".join(str(s) if isinstance(s, PcSet) else " + ".join(map(str, s)) for s in sets)


def suite_lies(corpus: Sequence[PcSet] | None = None, product_sample: int = 1500) -> SuiteReport:
    corpus = list(corpus if corpus is not None else linear_corpus())
    out = SuiteReport("lies")
    by_dim: dict[int, list[PcSet]] = {}
    for T in corpus:
        by_dim.setdefault(T.nvars, []).append(T)
    rel: dict[tuple[int, int], tuple[bool, bool, bool]] = {}
    index = {id(T): i for i, T in enumerate(corpus)}

    for n, sets in sorted(by_dim.items()):
        for T1, T2 in itertools.product(sets, repeat=2):
            _pair_laws(out, T1, T2)
            if _r(T1) == _r(T2):
                rel[(index[id(T1)], index[id(T2)])] = (almost_subset(T1, T2), almost_equal(T1, T2), almost_disjoint(T1, T2))
        _triple_laws(out, sets, rel, index)
        _law10(out, sets, rel, index)
    _product_laws(out, by_dim, rel, index, product_sample)
    out.checks.sort(key=_law_number)
    return out


def _law_number(c: Check) -> int:
    head = c.name.split(")")[0].lstrip("(")
    return int(head) if head.isdigit() else 99


def _pair_laws(out: SuiteReport, T1: PcSet, T2: PcSet) -> None:
    (r1, d1), (r2, d2) = rd(T1), rd(T2)
    cap, cd, dm = meet(T1, T2), capdot(T1, T2), dotminus(T1, T2)
    (rc, dc), (rcd, dcd), (rdm, ddm) = rd(cap), rd(cd), rd(dm)
    w = lambda: _show(T1, T2)

    c = out.check("(1) subsets have smaller rank or degree")
    for sub in (cap, cd, dm):
        rs, ds = rd(sub)
        c.record(rs < r1 or rs == r1 and ds <= d1, w)
    ru, du = rd((T1, T2))
    out.check("(2) rank of a union is the max").record(ru == max(r1, r2), w)
    if almost_disjoint(T1, T2):
        out.check("(3) degree adds under almost disjointness").record(du == d1 + d2, w)
    if r1 != r2:
        return
    if r1 == rc:
        V = PcSet.algebraic(pc_closure(T1).meet(pc_closure(T2)))
        out.check("(5) cap ~ capdot ~ closure cap").record(almost_equal(cap, cd) and almost_equal(cd, V), w)
    dis, sub = almost_disjoint(T1, T2), almost_subset(T1, T2)
    third = r1 == rcd == rdm
    if r1 != NEG_INF:
        # for two empty sets the subset case and the third case coincide
        out.check("(6) trichotomy").record([dis, sub, third].count(True) == 1, w)
    if dis:
        out.check("(7) almost disjoint consequences").record(rcd < r1 and almost_equal(dm, T1), w)
    if sub:
        out.check("(8) almost subset consequences").record(almost_equal(cap, cd) and almost_equal(cd, T1), w)
    if third:
        out.check("(9) degree splits along capdot and dotminus").record(dcd + ddm == d1, w)
    kind = pc_rel(T1, T2)
    expect = "equal" if sub and almost_subset(T2, T1) else "subset" if sub else "disjoint" if dis else "mixed"
    out.check("pc_rel agrees with the definitions").record(kind == expect == top_component_rel(T1, T2), w)


def _triple_laws(out: SuiteReport, sets: Sequence[PcSet], rel: dict, index: dict) -> None:
    ids = [index[id(T)] for T in sets]
    c_sub = out.check("(4) almost subset is transitive")
    c_eq = out.check("(4) almost equality is an equivalence")
    for a in ids:
        if (a, a) in rel:
            c_eq.record(rel[(a, a)][1], f"reflexivity fails for corpus set {a}")
    for a, b in itertools.product(ids, repeat=2):
        if (a, b) in rel:
            c_eq.record(rel[(a, b)][1] == rel[(b, a)][1], f"symmetry fails for {a}, {b}")
    for a, b, c in itertools.product(ids, repeat=3):
        if (a, b) not in rel or (b, c) not in rel:
            continue
        if rel[(a, b)][0] and rel[(b, c)][0]:
            c_sub.record(rel[(a, c)][0], f"corpus sets {a}, {b}, {c}")
        if rel[(a, b)][1] and rel[(b, c)][1]:
            c_eq.record(rel[(a, c)][1], f"corpus sets {a}, {b}, {c}")


def _law10(out: SuiteReport, sets: Sequence[PcSet], rel: dict, index: dict) -> None:
    """Compatibility of almost equality with the operations.

    For ``dotminus`` the law is checked under the extra hypothesis that
    ``T1 dotminus T2`` keeps full rank: with ``T1 = L``, ``T1' = L u {p}``,
    ``T2 = T2' = L`` the differences are empty and ``{p}``.
    """
    ops = {
        "cap": meet,
        "union": lambda a, b: (a, b),
        "capdot": capdot,
        "dotminus": dotminus,
    }
    c = out.check("(10) almost equality is compatible with cap, union, capdot, dotminus")
    eq = {}
    for T in sets:
        i = index[id(T)]
        eq[i] = [U for U in sets if rel.get((i, index[id(U)]), (0, 0, 0))[1]]
    for T1, T2 in itertools.product(sets, repeat=2):
        r = _r(T1)
        if r != _r(T2) or _r(meet(T1, T2)) != r:
            continue
        base = {name: f(T1, T2) for name, f in ops.items()}
        for A, B in itertools.product(eq[index[id(T1)]], eq[index[id(T2)]]):
            for name, f in ops.items():
                if name == "dotminus" and _r(base[name]) != r:
                    continue
                c.record(almost_equal(f(A, B), base[name]), lambda: f"{name}: {_show(T1, T2, A, B)}")


def _product_laws(out: SuiteReport, by_dim: dict, rel: dict, index: dict, sample: int) -> None:
    c11 = out.check("(11) rank adds and degree multiplies under products")
    cache: dict[tuple[int, int], PcSet] = {}

    def prod(A: PcSet, B: PcSet) -> PcSet:
        key = (index[id(A)], index[id(B)])
        if key not in cache:
            cache[key] = pc_op(A, B, "times")
        return cache[key]

    dims = sorted(by_dim)
    for a, b in itertools.product(dims, repeat=2):
        if a + b > 4:
            continue
        for A, B in itertools.product(by_dim[a], by_dim[b]):
            (rA, dA), (rB, dB) = rd(A), rd(B)
            rP, dP = rd(prod(A, B))
            c11.record(rP == rA + rB and dP == dA * dB, lambda: _show(A, B))

    c12 = out.check("(12) almost equality and disjointness under products")
    rng = random.Random(12)
    quads = []
    for a, b in itertools.product(dims, repeat=2):
        if a + b > 4:
            continue
        left = [(X, Y) for X, Y in itertools.product(by_dim[a], repeat=2) if _nonempty_related(X, Y, rel, index)]
        right = [(X, Y) for X, Y in itertools.product(by_dim[b], repeat=2) if _nonempty_related(X, Y, rel, index)]
        quads.extend((L, R) for L in left for R in right)
    if len(quads) > sample:
        quads = rng.sample(quads, sample)
    for (T1, T2), (U1, U2) in quads:
        e1, e2 = rel[(index[id(T1)], index[id(T2)])][1], rel[(index[id(U1)], index[id(U2)])][1]
        P1, P2 = prod(T1, U1), prod(T2, U2)
        if e1 and e2:
            ok = almost_equal(P1, P2)
        else:
            ok = almost_disjoint(P1, P2)
        c12.record(ok, lambda: _show(T1, T2, U1, U2))


def _nonempty_related(X: PcSet, Y: PcSet, rel: dict, index: dict) -> bool:
    key = (index[id(X)], index[id(Y)])
    return key in rel and _r(X) != NEG_INF and (rel[key][1] or rel[key][2])


# -- refinement --------------------------------------------------------------------------------


def corpus_presentations(corpus: Sequence[PcSet] | None = None, triples: int = 60) -> list[FinitePresentation]:
    """Every ordered pair plus a deterministic sample of triples, within one ambient dimension."""
    corpus = list(corpus if corpus is not None else linear_corpus())
    by_dim: dict[int, list[PcSet]] = {}
    for T in corpus:
        by_dim.setdefault(T.nvars, []).append(T)
    out = []
    rng = random.Random(7)
    for n, sets in sorted(by_dim.items()):
        for A, B in itertools.combinations(sets, 2):
            out.append(FinitePresentation.of([A, B]))
        combos = list(itertools.combinations(sets, 3))
        for combo in rng.sample(combos, min(triples, len(combos))):
            out.append(FinitePresentation.of(list(combo)))
    return out


def same_union(P: FinitePresentation, Q: FinitePresentation) -> bool:
    """Equal closures and agreement on every sampled point of either presentation."""
    if not P.fibers or not Q.fibers:
        return all(_r(f) == NEG_INF for f in P.fibers + Q.fibers)
    if set(pc_closure(P.fibers).components) != set(pc_closure(Q.fibers).components):
        return False
    pts = set(sample_points(P.fibers)) | set(sample_points(Q.fibers))
    return all(union_contains(P.fibers, x) == union_contains(Q.fibers, x) for x in pts)


def suite_refine(presentations: Iterable[FinitePresentation] | None = None) -> SuiteReport:
    out = SuiteReport("refine")
    pres = list(presentations if presentations is not None else corpus_presentations())
    for P in pres:
        w = lambda P=P: " | ".join(map(str, P.fibers))
        E = refine_essentially_disjoint(P)
        out.check("refine_essentially_disjoint output is essentially disjoint").record(is_essentially_disjoint(E), w)
        out.check("refine_essentially_disjoint preserves the union").record(same_union(P, E), w)
        G = refine_geometric(P)
        out.check("refine_geometric output is geometric").record(is_geometric(G), w)
        out.check("refine_geometric preserves the union").record(same_union(P, G), w)
    two = two_lines()
    gr, gd = presentation_gr_gd(refine_geometric(two))
    out.check("two lines: gr = w*1, gd = 2").record(gr == Ordinal2(1, 0) and gd == 2, f"got {gr}, {gd}")
    return out


def two_lines() -> FinitePresentation:
    from .pcsets import _lin

    return FinitePresentation.of([PcSet.algebraic(AlgSet.of(2, [_lin(2, "x2"), _lin(2, "x1")]))])


# -- rank calculus ----------------------------------------------------------------------------


def random_descriptor(rng: random.Random, depth: int = 3, allow_product: bool = True) -> Descriptor:
    roll = rng.random()
    if depth == 0 or roll < 0.35:
        if rng.random() < 0.08:
            return Empty()
        return Atom(rng.randint(0, 3), rng.randint(1, 3), rng.randint(0, 3), rng.randint(1, 4))
    kids = tuple(random_descriptor(rng, depth - 1, allow_product) for _ in range(rng.randint(1, 3)))
    if roll < 0.55:
        return Union(kids)
    if roll < 0.75 or not allow_product:
        return DisjointUnion(kids)
    return Product(kids[0], random_descriptor(rng, depth - 1, allow_product))


def _ord_value(o: Ordinal2) -> tuple:
    return (-1, 0) if o.is_bottom else (o.k, o.f)


def suite_rank(count: int = 1000, seed: int = 0) -> SuiteReport:
    out = SuiteReport("rank")
    rng = random.Random(seed)
    c_prod = out.check("gr of a product is the componentwise sum")
    c_comm = out.check("gr of a product is symmetric")
    c_union = out.check("gr of a union is the max of its children")
    c_mono = out.check("product rule is monotone")
    c_bound = out.check("ranks stay below w^2")
    for _ in range(count):
        a, b, c = (random_descriptor(rng) for _ in range(3))
        ga, gb, gc = gr_eval(a), gr_eval(b), gr_eval(c)
        gp = gr_eval(Product(a, b))
        want = BOTTOM if ga.is_bottom or gb.is_bottom else Ordinal2(ga.k + gb.k, ga.f + gb.f)
        c_prod.record(gp == want, lambda: f"{a} x {b}")
        c_comm.record(gp == gr_eval(Product(b, a)), lambda: f"{a} x {b}")
        gu = gr_eval(Union((a, b, c)))
        c_union.record(_ord_value(gu) == max(map(_ord_value, (ga, gb, gc))), lambda: f"{a} u {b} u {c}")
        if ga <= gb:
            c_mono.record(gr_eval(Product(a, c)) <= gr_eval(Product(b, c)), lambda: f"{a} <= {b}")
        c_bound.record(gp.is_bottom or gp.k < 10**6, "")
    c_cr = out.check("cr(Z) = w*(m-1)+k")
    for m in range(1, 4):
        for k in range(0, 4):
            Y = Atom(0, 1, k, 1)
            Km = Atom(m - 1, 1, 0, 1)
            sym = gr_eval(Product(Y, Km))
            conc = _annotated_fiber_family(m, k)
            c_cr.record(sym == Ordinal2(m - 1, k) == conc, f"m={m}, k={k}: {sym} vs {conc}")
    c_agree = out.check("concrete and symbolic gr/gd agree")
    for P in corpus_presentations():
        G = refine_geometric(P)
        gr, gd = presentation_gr_gd(G)
        d = presentation_descriptor(G)
        c_agree.record(gr == gr_eval(d) and gd == gd_eval(d), lambda G=G: " | ".join(map(str, G.fibers)))
    return out


def _annotated_fiber_family(m: int, k: int) -> Ordinal2:
    """gr of a family of fibers {c} x K^(m-1) indexed by a k-dimensional F-set."""
    from .pcsets import _lin

    fiber = PcSet.algebraic(AlgSet.of(m, [_lin(m, "x1")]))
    P = FinitePresentation.of([fiber], annotation=(k, 1))
    return presentation_gr_gd(P)[0]


SUITES = {
    "character": suite_character,
    "mann": suite_mann,
    "lies": suite_lies,
    "refine": suite_refine,
    "rank": suite_rank,
}
