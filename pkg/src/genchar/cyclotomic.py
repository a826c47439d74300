"""Exact arithmetic in the union of cyclotomic fields.

A ``CycloNum`` is stored at its minimal conductor ``m`` (normalised so that
``m % 4 != 2``) as coefficients in the power basis ``1, z, ..., z^(phi(m)-1)``
of ``Q(z_m)``.  Canonical forms are produced by reducing a dense exponent
vector modulo ``Phi_M`` after descending the conductor one prime at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Iterable, Mapping, Sequence

from .config import limits
from .errors import GencharError, ResourceError
from .lattice import lcm
from .linalg import solve
from .mpoly import MPoly
from .numtheory import divisors, factorint, phi

Rational = Fraction | int


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2*pi*i * num/den) with ``num/den`` reduced into [0, 1)."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 1:
            raise ValueError("denominator must be positive")
        a, m = self.num % self.den, self.den
        g = gcd(a, m)
        if a == 0:
            a, m = 0, 1
        else:
            a, m = a // g, m // g
        object.__setattr__(self, "num", a)
        object.__setattr__(self, "den", m)

    @classmethod
    def of(cls, a: int, m: int) -> "RootOfUnity":
        return cls(a, m)

    @property
    def order(self) -> int:
        return self.den

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        m = lcm(self.den, other.den)
        return RootOfUnity(self.num * (m // self.den) + other.num * (m // other.den), m)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.num, self.den)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.num * k, self.den)

    def exponent_at(self, m: int) -> int:
        """k with self = z_m^k (requires order | m)."""
        if m % self.den:
            raise ValueError(f"order {self.den} does not divide {m}")
        return self.num * (m // self.den)

    def to_cyclo(self) -> "CycloNum":
        return CycloNum.from_root(self)

    def __str__(self) -> str:
        return f"z({self.num}/{self.den})"


ONE = RootOfUnity(0, 1)


def normalize_conductor(m: int) -> int:
    return m // 2 if m % 4 == 2 else m


@lru_cache(maxsize=None)
def cyclotomic_coeffs(k: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_k, lowest degree first."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [-1] + [0] * (k - 1) + [1]
    for d in divisors(k):
        if d < k:
            num = _exact_div(num, cyclotomic_coeffs(d))
    return tuple(num)


def _exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] // den[dd]
        q[i - dd] = c
        if c:
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


def cyclotomic_poly(k: int) -> MPoly:
    """Phi_k as a univariate polynomial over Q."""
    return MPoly(1, {(i,): Fraction(c) for i, c in enumerate(cyclotomic_coeffs(k)) if c})


@lru_cache(maxsize=None)
def _phi_tail(m: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    co = cyclotomic_coeffs(m)
    return len(co) - 1, tuple((k, c) for k, c in enumerate(co[:-1]) if c)


def _reduce_mod_phi(dense: Sequence[Any], m: int) -> list[Any]:
    deg, tail = _phi_tail(m)
    v = list(dense)
    if len(v) < deg:
        v.extend([0] * (deg - len(v)))
    for d in range(len(v) - 1, deg - 1, -1):
        c = v[d]
        if c:
            base = d - deg
            for k, pk in tail:
                v[base + k] -= c * pk
            v[d] = 0
    return v[:deg]


def is_vanishing_sum(coeffs: Mapping[int, Any], m: int) -> bool:
    """Exact test of ``sum_k coeffs[k] * z_m^k == 0``."""
    dense = [0] * m
    for k, c in coeffs.items():
        dense[k % m] += c
    return not any(_reduce_mod_phi(dense, m))


def _try_descend(dense: list[Any], m: int, p: int) -> list[Any] | None:
    """Dense vector at conductor m/p if the element lies in Q(z_{m/p})."""
    if m % (p * p) == 0:
        mq = m // p
        for j in range(1, p):
            if any(_reduce_mod_phi(dense[j::p], mq)):
                return None
        return dense[0::p]
    mq = m // p
    inv_p = pow(p, -1, mq) if mq > 1 else 0
    inv_q = pow(mq, -1, p)
    parts = [[0] * mq for _ in range(p)]
    for i, c in enumerate(dense):
        if c:
            parts[i * inv_q % p][i * inv_p % mq] += c
    diffs = [
        _reduce_mod_phi([x - y for x, y in zip(parts[j], parts[0])], mq) for j in range(1, p)
    ]
    if any(d != diffs[0] for d in diffs[1:]):
        return None
    return [x - y for x, y in zip(parts[0], parts[1])]


def _canonical(dense: list[Any], m: int) -> tuple[int, tuple[Fraction, ...]]:
    moved = True
    while moved and m > 1:
        moved = False
        for p, _ in factorint(m):
            nxt = _try_descend(dense, m, p)
            if nxt is not None:
                dense, m = nxt, m // p
                moved = True
                break
    coeffs = tuple(Fraction(c) for c in _reduce_mod_phi(dense, m))
    if not any(coeffs):
        return 1, (Fraction(0),)
    return m, coeffs


def _check_conductor(m: int) -> None:
    if m > limits().conductor_max:
        raise ResourceError(f"conductor {m} exceeds the configured ceiling {limits().conductor_max}")


class CycloNum:
    """An element of Q(z_m) in canonical power-basis form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Rational]):
        if conductor % 4 == 2 or len(coeffs) != phi(conductor):
            raise ValueError("use CycloNum.from_dense for unnormalised input")
        self.conductor = conductor
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._hash = None

    @classmethod
    def _make(cls, m: int, coeffs: tuple[Fraction, ...]) -> "CycloNum":
        out = cls.__new__(cls)
        out.conductor = m
        out.coeffs = coeffs
        out._hash = None
        return out

    @classmethod
    def from_dense(cls, dense: Sequence[Rational], m: int) -> "CycloNum":
        """Canonical form of ``sum_k dense[k] * z_m^k``."""
        _check_conductor(normalize_conductor(m))
        return cls._make(*_canonical([Fraction(c) for c in dense], m))

    @classmethod
    def rational(cls, q: Rational) -> "CycloNum":
        return cls._make(1, (Fraction(q),))

    @classmethod
    def from_root(cls, r: RootOfUnity) -> "CycloNum":
        return _root_cyclo(r.num, r.den)

    # -- structure ----------------------------------------------------------
    def lift(self, m: int) -> list[Fraction]:
        """Dense exponent vector of length m (conductor must divide m)."""
        if m % self.conductor:
            raise ValueError("target conductor is not a multiple")
        step = m // self.conductor
        dense = [Fraction(0)] * m
        for j, c in enumerate(self.coeffs):
            if c:
                dense[j * step] = c
        return dense

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError("not a rational number")
        return self.coeffs[0]

    def is_single_term(self) -> bool:
        return self.is_rational() or as_root_of_unity(self) is not None

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(x: Any) -> "CycloNum":
        if isinstance(x, CycloNum):
            return x
        if isinstance(x, RootOfUnity):
            return CycloNum.from_root(x)
        if isinstance(x, (int, Fraction)):
            return CycloNum.rational(x)
        raise TypeError(f"cannot combine CycloNum with {type(x).__name__}")

    def __add__(self, other: Any) -> "CycloNum":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.conductor == other.conductor == 1:
            return CycloNum._make(1, (self.coeffs[0] + other.coeffs[0],))
        m = lcm(self.conductor, other.conductor)
        a, b = self.lift(m), other.lift(m)
        return CycloNum.from_dense([x + y for x, y in zip(a, b)], m)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum._make(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "CycloNum":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "CycloNum":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "CycloNum":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if other.conductor == 1:
            q = other.coeffs[0]
            if q == 0:
                return CycloNum.rational(0)
            return CycloNum._make(self.conductor, tuple(c * q for c in self.coeffs))
        if self.conductor == 1:
            return other * self
        m = lcm(self.conductor, other.conductor)
        _check_conductor(m)
        sa, sb = m // self.conductor, m // other.conductor
        dense = [Fraction(0)] * m
        bs = [(j * sb, c) for j, c in enumerate(other.coeffs) if c]
        for i, a in enumerate(self.coeffs):
            if a:
                ia = i * sa
                for jb, b in bs:
                    dense[(ia + jb) % m] += a * b
        return CycloNum.from_dense(dense, m)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in a cyclotomic field")
        if self.conductor == 1:
            return CycloNum.rational(1 / self.coeffs[0])
        m, n = self.conductor, len(self.coeffs)
        # columns: self * z^j in the power basis
        cols = []
        for j in range(n):
            dense = [Fraction(0)] * m
            for i, c in enumerate(self.coeffs):
                if c:
                    dense[(i + j) % m] += c
            cols.append(_reduce_mod_phi(dense, m))
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        x = solve(mat, [Fraction(1)] + [Fraction(0)] * (n - 1))
        assert x is not None
        return CycloNum._make(m, tuple(Fraction(c) for c in x))

    def __truediv__(self, other: Any) -> "CycloNum":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "CycloNum":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CycloNum":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = CycloNum.rational(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, u: int) -> "CycloNum":
        """Image under z_m -> z_m^u (u coprime to the conductor)."""
        m = self.conductor
        if gcd(u, m) != 1:
            raise ValueError("u must be a unit modulo the conductor")
        dense = [Fraction(0)] * m
        for j, c in enumerate(self.coeffs):
            if c:
                dense[j * u % m] += c
        return CycloNum.from_dense(dense, m)

    # -- comparison / display ------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloNum):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and self.coeffs[0] == other
        if isinstance(other, RootOfUnity):
            return self == CycloNum.from_root(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.conductor == 1 else hash((self.conductor, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"CycloNum({self})"

    def __str__(self) -> str:
        if self.conductor == 1:
            return str(self.coeffs[0])
        r = as_root_of_unity(self)
        if r is not None:
            return str(r)
        return self.basis_str()

    def basis_str(self) -> str:
        """``q0 + q1*z(1/m) + ...`` at the canonical conductor."""
        m = self.conductor
        out = ""
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                body = str(abs(c))
            else:
                z = str(RootOfUnity(j, m))
                body = z if abs(c) == 1 else f"{abs(c)}*{z}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out or "0"


@lru_cache(maxsize=4096)
def _root_cyclo(a: int, m: int) -> CycloNum:
    dense = [Fraction(0)] * m
    dense[a % m] = Fraction(1)
    return CycloNum.from_dense(dense, m)


def cyclo_reduce(raw: Iterable[tuple[Rational, RootOfUnity]]) -> CycloNum:
    """Canonical form of a formal Q-linear combination of roots of unity."""
    items = [(Fraction(c), r) for c, r in raw]
    if not items:
        return CycloNum.rational(0)
    m = lcm(*(r.den for _, r in items))
    dense = [Fraction(0)] * m
    for c, r in items:
        dense[r.exponent_at(m) % m] += c
    return CycloNum.from_dense(dense, m)


def cyclo_op(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "x", "×"):
        return a * b
    if op in ("/", "÷"):
        if b.is_zero():
            raise GencharError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def _root_table(m: int) -> dict[tuple[Fraction, ...], RootOfUnity]:
    """Canonical coefficient vectors of all torsion units of Q(z_m) with conductor m."""
    big = lcm(2, m)
    table = {}
    for i in range(big):
        c = _root_cyclo(i, big)
        if c.conductor == m:
            table[c.coeffs] = RootOfUnity(i, big)
    return table


def as_root_of_unity(a: CycloNum) -> RootOfUnity | None:
    """The root of unity equal to ``a``, or None.

    Torsion units of Q(z_m) are the +-z_m^i, whose orders divide lcm(2, m);
    a power test filters first and a canonical-form table names the exponent.
    """
    if a.is_zero():
        return None
    if a.conductor == 1:
        q = a.coeffs[0]
        if q == 1:
            return ONE
        if q == -1:
            return RootOfUnity(1, 2)
        return None
    if any(c.denominator != 1 for c in a.coeffs):
        return None
    if a ** lcm(2, a.conductor) != 1:
        return None
    return _root_table(a.conductor).get(a.coeffs)
