"""Independent oracles for the test suite.

Nothing here imports the package under test.  Finite fields are rebuilt from
published Conway polynomials, cyclotomic vanishing is decided by integer
reduction modulo sympy's cyclotomic polynomials, and searches are brute force.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np
import sympy

# Published Conway polynomials, coefficients from x^0 up to the leading 1.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
}


# -- finite fields --------------------------------------------------------------------


def polymulmod(a: tuple, b: tuple, p: int, n: int) -> tuple:
    """Product of two coefficient vectors modulo the Conway polynomial C(p, n)."""
    mod = CONWAY[(p, n)]
    out = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c:
            for j in range(n + 1):
                out[k - n + j] = (out[k - n + j] - c * mod[j]) % p
    return tuple(out[:n])


def polypow(a: tuple, e: int, p: int, n: int) -> tuple:
    out = tuple([1] + [0] * (n - 1))
    base = a
    while e:
        if e & 1:
            out = polymulmod(out, base, p, n)
        base = polymulmod(base, base, p, n)
        e >>= 1
    return out


@lru_cache(maxsize=None)
def log_table(p: int, n: int) -> dict[tuple, int]:
    """Discrete logs to the base x, by repeated multiplication."""
    q = p**n
    x = tuple([0, 1] + [0] * (n - 2)) if n > 1 else ((-CONWAY[(p, 1)][0]) % p,)
    out = {}
    cur = tuple([1] + [0] * (n - 1))
    for k in range(q - 1):
        if cur in out:
            raise AssertionError("Conway generator is not primitive")
        out[cur] = k
        cur = polymulmod(cur, x, p, n)
    assert len(out) == q - 1
    return out


def embed(a: tuple, p: int, d: int, n: int) -> tuple:
    """Image of ``a`` in F_{p^d} under the Conway-compatible map into F_{p^n}."""
    if a == tuple([0] * d):
        return tuple([0] * n)
    k = log_table(p, d)[a]
    exp_n = {v: u for u, v in log_table(p, n).items()}
    return exp_n[k * ((p**n - 1) // (p**d - 1))]


def elements(p: int, n: int) -> list[tuple]:
    return list(itertools.product(range(p), repeat=n))


class FieldTables:
    """F_{p^n} as integer codes ``sum c_i p^i`` with vectorised add and multiply."""

    def __init__(self, p: int, n: int):
        self.p, self.n, self.q = p, n, p**n
        logs = log_table(p, n)
        self.log = np.full(self.q, -1, dtype=np.int64)
        self.exp = np.zeros(self.q - 1, dtype=np.int64)
        for coeffs, k in logs.items():
            c = self.code(coeffs)
            self.log[c] = k
            self.exp[k] = c

    def code(self, coeffs) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.n):
            out += ((a // scale % self.p + b // scale % self.p) % self.p) * scale
            scale *= self.p
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        nz = (a != 0) & (b != 0)
        k = (self.log[a] + self.log[b]) % (self.q - 1)
        return np.where(nz, self.exp[k], 0)

    def power(self, a: np.ndarray, e: int) -> np.ndarray:
        if e == 0:
            return np.ones_like(a)
        k = self.log[a] * e % (self.q - 1)
        return np.where(a != 0, self.exp[k], 0)


# -- cyclotomic vanishing ----------------------------------------------------------------


@lru_cache(maxsize=None)
def reduction_matrix(L: int) -> np.ndarray:
    """Row j holds the coefficients of x^j mod Phi_L (integers, since Phi_L is monic)."""
    phi_coeffs = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(L, sympy.Symbol("x"))).all_coeffs())]
    d = len(phi_coeffs) - 1
    R = np.zeros((L, d), dtype=object)
    cur = [0] * d
    cur[0] = 1
    for j in range(L):
        R[j] = cur
        # multiply by x and reduce the overflow with x^d = -sum phi_i x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi_coeffs[i] for i, c in enumerate(cur)]
    return R


def dense_is_zero(rows: np.ndarray, L: int) -> np.ndarray:
    """For each integer row of length L (coefficients of z_L^j), whether it sums to zero."""
    R = reduction_matrix(L)
    return ~np.any(rows.astype(object).dot(R) != 0, axis=-1) if rows.ndim > 1 else not np.any(rows.astype(object).dot(R) != 0)


def _integer_row(terms: list[tuple[Fraction, int]], L: int) -> np.ndarray:
    den = lcm(*(Fraction(c).denominator for c, _ in terms)) if terms else 1
    row = np.zeros(L, dtype=object)
    for c, e in terms:
        row[e % L] += int(Fraction(c) * den)
    return row


def vanishes(terms: list[tuple[Fraction, Fraction]]) -> bool:
    """Whether sum c * exp(2 pi i t) is zero, terms given as (c, t) with rational t."""
    L = lcm(*(Fraction(t).denominator for _, t in terms)) if terms else 1
    row = _integer_row([(c, int(Fraction(t) * L)) for c, t in terms], L)
    return bool(dense_is_zero(row, L))


def nondegenerate(terms: list[tuple[Fraction, Fraction]]) -> bool:
    m = len(terms)
    for mask in range(1, (1 << m) - 1):
        if vanishes([terms[i] for i in range(m) if mask >> i & 1]):
            return False
    return True


# -- roots of unity ------------------------------------------------------------------------


def roots_upto(order_max: int) -> list[Fraction]:
    """Every root of unity of order at most ``order_max``, as a fraction in [0, 1)."""
    return sorted({Fraction(a, k) for k in range(1, order_max + 1) for a in range(k)}, key=lambda t: (t.denominator, t))


def mann_brute(coeffs, order_max: int, roots: list[Fraction] | None = None) -> set[tuple[Fraction, ...]]:
    """Non-degenerate solutions of sum c_i x_i = 1 with x_i among ``roots``."""
    roots = roots if roots is not None else roots_upto(order_max)
    vals = np.exp(2j * np.pi * np.array([float(t) for t in roots]))
    n = len(coeffs)
    c = np.array([float(x) for x in coeffs])
    total = np.zeros([len(roots)] * n, dtype=complex) - 1
    for i in range(n):
        shape = [1] * n
        shape[i] = len(roots)
        total = total + (c[i] * vals).reshape(shape)
    out = set()
    for idx in zip(*np.nonzero(np.abs(total) < 1e-9)):
        tup = tuple(roots[i] for i in idx)
        terms = [(Fraction(q), t) for q, t in zip(coeffs, tup)] + [(Fraction(-1), Fraction(0))]
        if vanishes(terms) and nondegenerate(terms):
            out.add(tup)
    return out


def relation_count(nums: tuple[int, ...], orders: tuple[int, ...]) -> int:
    """Number of v in the box prod [0, m_i) with sum v_i a_i / m_i an integer."""
    L = lcm(*orders)
    grids = np.meshgrid(*[np.arange(m) for m in orders], indexing="ij")
    acc = sum(g * (a * (L // m)) for g, a, m in zip(grids, nums, orders))
    return int(np.count_nonzero(acc % L == 0))


def satisfies_relation(v, nums, orders) -> bool:
    return sum(Fraction(x * a, m) for x, a, m in zip(v, nums, orders)).denominator == 1


# -- polynomial pools ------------------------------------------------------------------------


def monomials(n: int, max_deg: int) -> list[tuple[int, ...]]:
    return [e for e in itertools.product(range(max_deg + 1), repeat=n) if sum(e) <= max_deg]


def polynomial_pool(n: int, size: int, seed: int) -> list[dict[tuple[int, ...], Fraction]]:
    """Rational polynomials of degree <= 4 in n variables, rich in vanishing candidates.

    Structured members (cyclotomic polynomials in one variable, binomials,
    sums of two or three monomials) come first; the rest is random sparse.
    """
    import random

    rng = random.Random(seed)
    one = tuple([0] * n)
    pool: list[dict] = []

    def add(terms: dict) -> None:
        terms = {e: Fraction(c) for e, c in terms.items() if c}
        if terms and terms not in pool:
            pool.append(terms)

    phis = {k: [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(k, sympy.Symbol("x"))).all_coeffs())] for k in range(1, 13)}
    for i in range(n):
        for k, cs in phis.items():
            if len(cs) - 1 <= 4:
                add({tuple(j if t == i else 0 for t in range(n)): c for j, c in enumerate(cs)})
    mons = [e for e in monomials(n, 4) if any(e)]
    for a, b in itertools.combinations(mons, 2):
        for s in (1, -1):
            add({a: 1, b: s})
    for a in mons:
        for s in (1, -1):
            add({a: 1, one: s})
    while len(pool) < size:
        k = rng.randint(2, 4)
        terms = {}
        for e in rng.sample(mons + [one], k):
            terms[e] = rng.choice([1, -1, 2, -2, Fraction(1, 2)])
        add(terms)
    return pool


class CompiledPool:
    """A polynomial pool as padded integer arrays for fast exact evaluation."""

    def __init__(self, pool: list[dict[tuple[int, ...], Fraction]]):
        self.pool = pool
        width = max(len(t) for t in pool)
        n = len(next(iter(pool[0])))
        self.exps = np.zeros((len(pool), width, n), dtype=np.int64)
        self.coeffs = np.zeros((len(pool), width), dtype=np.int64)
        for r, terms in enumerate(pool):
            den = lcm(*(c.denominator for c in terms.values()))
            for j, (e, c) in enumerate(terms.items()):
                self.exps[r, j] = e
                self.coeffs[r, j] = int(c * den)

    def __len__(self) -> int:
        return len(self.pool)

    def vanishing(self, point: tuple[Fraction, ...]) -> np.ndarray:
        """Boolean array: which polynomials vanish at the root tuple ``point``."""
        L = lcm(*(t.denominator for t in point)) if point else 1
        R = reduction_matrix_int(L)
        idx = self.exps @ np.array([int(t * L) for t in point], dtype=np.int64) % L
        # padding entries carry coefficient zero, so their index is harmless
        reduced = (R[idx] * self.coeffs[..., None]).sum(axis=1)
        return ~np.any(reduced != 0, axis=-1)


@lru_cache(maxsize=None)
def reduction_matrix_int(L: int) -> np.ndarray:
    R = reduction_matrix(L)
    assert max((abs(int(x)) for x in R.flat), default=0) < 2**40
    return R.astype(np.int64)


def unit_multipliers(L: int) -> list[int]:
    return [u for u in range(1, L) if gcd(u, L) == 1] or [1]
