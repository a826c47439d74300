"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

from __future__ import annotations

import itertools
import random
import time
from collections import defaultdict
from fractions import Fraction
from math import lcm, prod

import numpy as np
import pytest

import oracles as O
from genchar.character import CharContext, chi_root
from genchar.cyclotomic import CycloNum, RootOfUnity
from genchar.finite_field import FqElem, conway_coeffs, fq_embed
from genchar.ideals import i_ideal, j_ideal
from genchar.mann import STANDARD_VALUES, axiom_instance, coefficient_pool, d_bound, mann_solve
from genchar.mpoly import MPoly
from genchar.mult_lattice import relation_lattice
from genchar.pullback import char_pullback
from genchar.rank import Atom, Ordinal2, Product, gr_eval
from genchar.verify import suite_lies, suite_rank, suite_refine


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nacceptance {number}: {'PASS' if ok else 'FAIL'} ({detail})")

    return emit


def _frac(r: RootOfUnity) -> Fraction:
    return Fraction(r.num, r.den)


def _root(t: Fraction) -> RootOfUnity:
    return RootOfUnity(t.numerator, t.denominator)


# -- 1 ---------------------------------------------------------------------------------------


def test_character_laws(report):
    start = time.perf_counter()
    failures, checks = [], 0
    fields = [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (2, 6)]
    ctx = {p: CharContext(p) for p, _ in fields}
    for p, n in fields:
        q = p**n
        if tuple(conway_coeffs(p, n)) != O.CONWAY[(p, n)]:
            failures.append(f"Conway polynomial ({p},{n})")
        logs = O.log_table(p, n)
        elems = O.elements(p, n)
        ours = {a: FqElem(p, n, a) for a in elems}
        chis = {a: chi_root(ctx[p], x) for a, x in ours.items()}
        zero = tuple([0] * n)
        checks += 1
        if chis[zero] is not None:
            failures.append(f"chi(0) in F_{q}")
        for a in elems:
            if a == zero:
                continue
            checks += 1
            if chis[a] != RootOfUnity(logs[a], q - 1):
                failures.append(f"chi against the oracle log in F_{q} at {a}")
        nonzero = [a for a in elems if a != zero]
        checks += 1
        if len({chis[a] for a in nonzero}) != q - 1:
            failures.append(f"injectivity in F_{q}")
        for a, b in itertools.product(nonzero, repeat=2):
            checks += 1
            ab = O.polymulmod(a, b, p, n)
            if chis[ab] != chis[a] * chis[b]:
                failures.append(f"multiplicativity in F_{q} at {a}, {b}")
        for d in range(1, n):
            if n % d:
                continue
            for a in O.elements(p, d):
                checks += 1
                image = O.embed(a, p, d, n)
                small = FqElem(p, d, a)
                if chi_root(ctx[p], small) != chis[image] or fq_embed(small, n) != ours[image]:
                    failures.append(f"tower F_{p**d} -> F_{q} at {a}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    report(1, ok, f"{checks} checks, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 10


# -- 2 ---------------------------------------------------------------------------------------


def test_mann_completeness(report):
    mismatches, total = [], 0
    for n in (1, 2, 3):
        order_max = 2 * d_bound(n)
        roots = O.roots_upto(order_max)
        for c in coefficient_pool(STANDARD_VALUES, n):
            total += 1
            got = {tuple(map(_frac, s)) for s in mann_solve(c)}
            want = O.mann_brute(c, order_max, roots)
            if got != want:
                mismatches.append((c, got ^ want))
    pair = {tuple(map(_frac, s)) for s in mann_solve([1, 1])}
    expected = {(Fraction(1, 6), Fraction(5, 6)), (Fraction(5, 6), Fraction(1, 6))}
    ok = not mismatches and pair == expected
    report(2, ok, f"{total} coefficient vectors, {len(mismatches)} mismatches, c=(1,1) gives {len(pair)} solutions")
    assert not mismatches, mismatches[:3]
    assert pair == expected


# -- 3 ---------------------------------------------------------------------------------------


def test_axiom_scheme(report):
    failures, instances = [], 0
    for p in (2, 3, 7):
        ctx = CharContext(p)
        roots = [Fraction(k, p * p - 1) for k in range(p * p - 1)]
        for n in (1, 2, 3):
            pool = coefficient_pool(STANDARD_VALUES, n)
            res = axiom_instance(ctx, n, pool, 2)
            instances += 1
            if not res.holds:
                failures.append(f"p={p} n={n}: {res.witness}")
            brute = 0
            for c in pool:
                sols = O.mann_brute(c, 0, roots)
                brute += len(sols)
                bad = [s for s in sols if any(d_bound(n) % t.denominator for t in s)]
                if bad:
                    failures.append(f"oracle counterexample p={p} c={c}: {bad[0]}")
            if brute != res.solutions:
                failures.append(f"p={p} n={n}: {res.solutions} solutions vs oracle {brute}")
    vacuous = axiom_instance(CharContext(2), 2, [(1, 1)], 2)
    vacuity_ok = vacuous.holds and vacuous.solutions == 0 and vacuous.equations == 1
    ok = not failures and vacuity_ok
    report(3, ok, f"{instances} instances, p=2 vacuity case with {vacuous.solutions} solutions")
    assert not failures, failures[:3]
    assert vacuity_ok


# -- 4 ---------------------------------------------------------------------------------------


def test_type_transfer(report):
    rng = random.Random(4)
    roots = O.roots_upto(12)
    pools = {n: O.CompiledPool(O.polynomial_pool(n, 500, n)) for n in (1, 2, 3)}
    failures, pairs, vanishing = [], 0, 0
    while pairs < 240:
        n = rng.randint(1, 3)
        g = tuple(rng.choice(roots) for _ in range(n))
        L = lcm(*(t.denominator for t in g))
        u = rng.choice(O.unit_multipliers(L))
        h = tuple((t * u) % 1 for t in g)
        lat_g = relation_lattice([_root(t) for t in g])
        lat_h = relation_lattice([_root(t) for t in h])
        if lat_g.basis != lat_h.basis:
            failures.append(f"lattices differ for {g}, {h}")
            continue
        pairs += 1
        zg, zh = pools[n].vanishing(g), pools[n].vanishing(h)
        vanishing += int(zg.sum())
        if not np.array_equal(zg, zh):
            failures.append(f"{g} vs {h}: {int((zg != zh).sum())} polynomials disagree")
    sizes = min(len(p) for p in pools.values())
    ok = not failures and sizes >= 500 and vanishing > 0
    report(4, ok, f"{pairs} pairs, pools of >= {sizes} polynomials, {vanishing} vanishing instances")
    assert not failures, failures[:3]
    assert sizes >= 500 and vanishing > 0


# -- 5 ---------------------------------------------------------------------------------------


def _mpoly(n: int, terms: dict) -> MPoly:
    return MPoly(n, dict(terms))


def test_radical_and_ideal_characterisations(report):
    rng = random.Random(5)
    roots = O.roots_upto(12)
    tuples = [(t,) for t in roots]
    tuples += [(Fraction(1, 6), Fraction(5, 6)), (Fraction(1, 3), Fraction(1, 6)), (Fraction(1, 12), Fraction(5, 12))]
    tuples += [tuple(rng.choice(roots) for _ in range(2)) for _ in range(12)]
    pools = {1: O.polynomial_pool(1, 200, 51), 2: O.polynomial_pool(2, 500, 52)}
    compiled = {n: O.CompiledPool(p) for n, p in pools.items()}
    polys = {n: [_mpoly(n, t) for t in p] for n, p in pools.items()}
    failures, checks, slowest = [], 0, 0.0
    for g in tuples:
        n = len(g)
        rg = [_root(t) for t in g]
        J, I = j_ideal(rg), i_ideal(rg)
        for ideal in (J, I):
            t0 = time.perf_counter()
            ideal.groebner()
            slowest = max(slowest, time.perf_counter() - t0)
        truth = compiled[n].vanishing(g)
        for P, zero in zip(polys[n], truth):
            checks += 1
            if J.radical_contains(P) != zero or I.contains(P) != zero:
                failures.append(f"g={g}, P={P.format('x')}, vanishes={zero}")
    ok = not failures and slowest < 1.0
    report(5, ok, f"{len(tuples)} tuples, {checks} polynomial checks, slowest Groebner basis {slowest:.3f}s")
    assert not failures, failures[:3]
    assert slowest < 1.0


# -- 6, 7, 8 -----------------------------------------------------------------------------------


def test_lies_laws(report):
    rep = suite_lies()
    laws = {c.name.split(")")[0] + ")" for c in rep.checks if c.name.startswith("(")}
    present = {f"({i})" for i in range(1, 13)} <= laws
    empty = [c.name for c in rep.checks if c.count == 0]
    ok = rep.passed and present and not empty
    total = sum(c.count for c in rep.checks)
    report(6, ok, f"{len(rep.checks)} checks over {total} instances, all twelve laws exercised: {present}")
    assert rep.passed, rep.lines()
    assert present and not empty


def test_refinement(report):
    rep = suite_refine()
    ok = rep.passed and all(c.count for c in rep.checks)
    report(7, ok, f"{rep.checks[0].count} presentations, two lines gr=w, gd=2")
    assert rep.passed, rep.lines()


def test_rank_calculus(report):
    rep = suite_rank(count=1000)
    identity = all(
        gr_eval(Product(Atom(0, 1, k, 1), Atom(m - 1, 1, 0, 1))) == Ordinal2(m - 1, k) for m in range(1, 4) for k in range(4)
    )
    ok = rep.passed and identity and rep.check("gr of a product is the componentwise sum").count == 1000
    report(8, ok, f"1000 random descriptors, cr identity for m,k <= 3, {rep.check('concrete and symbolic gr/gd agree').count} corpus presentations")
    assert rep.passed, rep.lines()
    assert identity


# -- 9 ---------------------------------------------------------------------------------------

# Each system is a list of polynomials; each polynomial a list of (rational, root, exponents).
Z3, Z4 = Fraction(1, 3), Fraction(1, 4)
ONE = Fraction(0)
SYSTEMS = [
    (1, [[(1, ONE, (1,)), (-1, ONE, (0,))]]),
    (1, [[(1, ONE, (2,)), (1, ONE, (1,)), (1, ONE, (0,))]]),
    (1, [[(1, ONE, (1,)), (1, ONE, (0,))]]),
    (1, [[(2, ONE, (1,)), (1, ONE, (0,))]]),
    (1, [[(1, ONE, (3,)), (-1, ONE, (0,))]]),
    (2, [[(1, ONE, (1, 0)), (-1, ONE, (0, 1))]]),
    (2, [[(1, ONE, (1, 0)), (1, ONE, (0, 1))]]),
    (2, [[(1, ONE, (1, 0)), (1, ONE, (0, 1)), (-1, ONE, (0, 0))]]),
    (2, [[(1, ONE, (1, 1)), (-1, ONE, (0, 0))]]),
    (2, [[(1, ONE, (1, 0)), (-1, Z3, (0, 1))]]),
    (2, [[(1, ONE, (1, 0)), (-1, Z4, (0, 1))]]),
    (2, [[(1, ONE, (2, 0)), (-1, ONE, (0, 1))]]),
    (2, [[(1, ONE, (1, 0)), (2, ONE, (0, 1))]]),
    (2, [[(1, ONE, (2, 0)), (1, ONE, (1, 1)), (1, ONE, (0, 2))]]),
    (3, [[(1, ONE, (1, 0, 0)), (1, ONE, (0, 1, 0)), (1, ONE, (0, 0, 1))]]),
    (3, [[(1, ONE, (1, 0, 0)), (-1, ONE, (0, 1, 0))], [(1, ONE, (0, 1, 0)), (1, ONE, (0, 0, 1))]]),
    (3, [[(1, ONE, (1, 1, 0)), (1, ONE, (0, 0, 1))]]),
    (3, [[(1, ONE, (1, 0, 0)), (1, Z3, (0, 1, 0)), (1, ONE, (0, 0, 1))]]),
]


def _as_mpoly(k: int, terms) -> MPoly:
    out: dict = {}
    for c, t, e in terms:
        val = CycloNum.from_root(_root(t)) * Fraction(c) if t else Fraction(c)
        out[e] = out.get(e, 0) + val
    return MPoly(k, out)


def _chi_side(F: O.FieldTables, pts: np.ndarray, system) -> np.ndarray:
    """Whether every polynomial vanishes at chi(s), for each row s of ``pts``."""
    q1 = F.q - 1
    ok = np.ones(len(pts), dtype=bool)
    for poly in system:
        L = lcm(q1, *(Fraction(t).denominator for _, t, _ in poly))
        R = O.reduction_matrix_int(L)
        den = lcm(*(Fraction(c).denominator for c, _, _ in poly))
        acc = np.zeros((len(pts), R.shape[1]), dtype=np.int64)
        logs = F.log[pts]
        for c, t, e in poly:
            mask = np.all((pts != 0) | (np.array(e) == 0), axis=1)
            idx = ((logs * np.array(e)).sum(axis=1) * (L // q1) + int(Fraction(t) * L)) % L
            acc += np.where(mask[:, None], R[idx] * int(Fraction(c) * den), 0)
        ok &= ~np.any(acc != 0, axis=1)
    return ok


def _q_side(F: O.FieldTables, pts: np.ndarray, system: list[MPoly]) -> np.ndarray:
    ok = np.ones(len(pts), dtype=bool)
    for poly in system:
        val = np.zeros(len(pts), dtype=np.int64)
        for e, c in poly.terms.items():
            c = c.canonical()
            assert 2 % c.degree == 0, "coefficient outside F_{p^2}"
            code = F.code(c.coeffs)
            term = np.full(len(pts), code, dtype=np.int64)
            for i, x in enumerate(e):
                term = F.mul(term, F.power(pts[:, i], x))
            val = F.add(val, term)
        ok &= val == 0
    return ok


def test_pullback(report):
    start = time.perf_counter()
    failures, points = [], 0
    witness_ok = False
    for p in (2, 7):
        F = O.FieldTables(p, 2)
        ctx = CharContext(p)
        grids = {k: np.array(list(itertools.product(range(F.q), repeat=k)), dtype=np.int64) for k in (1, 2, 3)}
        for k, system in SYSTEMS:
            Q = char_pullback(ctx, [_as_mpoly(k, poly) for poly in system], k).system
            pts = grids[k]
            want, got = _chi_side(F, pts, system), _q_side(F, pts, list(Q))
            points += len(pts)
            if not np.array_equal(want, got):
                bad = pts[np.nonzero(want != got)[0][0]]
                failures.append(f"p={p} system {system}: disagreement at codes {tuple(bad)}")
            if p == 7 and k == 3 and len(system) == 1 and len(system[0]) == 3 and all(t == 0 for _, t, _ in system[0]):
                row = int(np.nonzero(np.all(pts == [1, 2, 4], axis=1))[0][0])
                witness_ok = bool(want[row] and got[row])
    elapsed = time.perf_counter() - start
    ok = not failures and witness_ok and elapsed < 60
    report(9, ok, f"{2 * len(SYSTEMS)} systems, {points} points over F_p^2, witness (1,2,4): {witness_ok}, {elapsed:.1f}s")
    assert not failures, failures[:3]
    assert witness_ok and elapsed < 60


# -- 10 --------------------------------------------------------------------------------------


def test_relation_lattice_oracle(report):
    roots = O.roots_upto(12)
    failures, total = [], 0
    for n in (1, 2, 3):
        groups: dict[tuple, list] = defaultdict(list)
        for g in itertools.product(roots, repeat=n):
            groups[tuple(t.denominator for t in g)].append(g)
        for orders, members in groups.items():
            L = lcm(*orders)
            box = np.array(list(itertools.product(*[range(m) for m in orders])), dtype=np.int64)
            nums = np.array([[t.numerator * (L // t.denominator) for t in g] for g in members], dtype=np.int64)
            counts = np.count_nonzero((nums @ box.T) % L == 0, axis=1)
            for g, count in zip(members, counts):
                total += 1
                basis = relation_lattice([_root(t) for t in g]).basis
                nums_g = [t.numerator for t in g]
                index = prod(basis[i][i] for i in range(len(basis))) if len(basis) == n else 0
                rows_ok = all(O.satisfies_relation(v, nums_g, orders) for v in basis)
                if not rows_ok or index * count != prod(orders):
                    failures.append(f"{g}: basis {basis}, box count {count}")
    report(10, not failures, f"{total} torsion tuples, {len(failures)} failures")
    assert not failures, failures[:3]
