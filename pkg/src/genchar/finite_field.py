"""Finite fields of the Conway tower over F_p.

Elements of F_{p^n} are encoded as integers ``sum c_i p^i`` where ``c`` is the
coordinate vector in the power basis of a root ``g`` of the Conway polynomial
``C_{p,n}``.  Since Conway generators are norm compatible,
``g_m = g_n^((p^n - 1)/(p^m - 1))`` for every ``m | n``; embeddings and the
minimal-subfield canonical form are therefore pure exponent arithmetic.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from pathlib import Path
from typing import Sequence

from .config import limits
from .errors import FieldError, ResourceError
from .mpoly import MPoly
from .numtheory import divisors, is_prime, prime_factors

ZECH_LIMIT = 2**16

# -- dense polynomial helpers over F_p (lowest degree first) ----------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """a*b mod f for monic f."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    n = len(f) - 1
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d] % p
        if c:
            base = d - n
            for k in range(n):
                out[base + k] -= c * f[k]
        out[d] = 0
    return _trim([c % p for c in out[:n]])


def _powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _eval_at(poly: Sequence[int], h: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """poly(h) mod f (Horner)."""
    acc: list[int] = []
    for c in reversed(poly):
        acc = _mulmod(acc, h, f, p)
        acc = (acc or [0])
        acc[0] = (acc[0] + c) % p
        _trim(acc)
    return acc


# -- Conway polynomials -------------------------------------------------------

_TABLE: dict[tuple[int, int], tuple[int, ...]] = {}


def load_conway_table(path: str | os.PathLike) -> int:
    """Pre-seed Conway polynomials from lines ``p n : c0 c1 ... cn``."""
    count = 0
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        p, n = (int(t) for t in head.split())
        co = tuple(int(t) % p for t in body.split())
        if len(co) != n + 1 or co[-1] != 1:
            raise ValueError(f"malformed Conway table entry: {line!r}")
        _TABLE[(p, n)] = co
        count += 1
    conway_coeffs.cache_clear()
    return count


def _check_size(p: int, n: int) -> None:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("degree must be at least 1")
    if p**n > limits().field_bound:
        raise ResourceError(f"field of size {p}^{n} exceeds the configured bound {limits().field_bound}")


def _is_primitive(f: Sequence[int], p: int, n: int) -> bool:
    q1 = p**n - 1
    x = [0, 1] if n > 1 else [(-f[0]) % p]
    if _powmod(x, q1, f, p) != [1]:
        return False
    return all(_powmod(x, q1 // r, f, p) != [1] for r in prime_factors(q1))


@lru_cache(maxsize=None)
def conway_coeffs(p: int, n: int) -> tuple[int, ...]:
    """Coefficients c0..cn of C_{p,n}, found by search in Conway order."""
    _check_size(p, n)
    if (p, n) in _TABLE:
        return _TABLE[(p, n)]
    q1 = p**n - 1
    subs = [(m, conway_coeffs(p, m)) for m in divisors(n) if m < n]
    for a in itertools.product(range(p), repeat=n):
        # a = (a_{n-1}, ..., a_0); coefficient of x^i is (-1)^(n-i) a_i
        if a[-1] == 0:
            continue
        f = [0] * (n + 1)
        f[n] = 1
        for pos, ai in enumerate(a):
            i = n - 1 - pos
            f[i] = (-ai if (n - i) % 2 else ai) % p
        if not _is_primitive(f, p, n):
            continue
        x = [0, 1] if n > 1 else [(-f[0]) % p]
        if all(
            not _eval_at(cm, _powmod(x, q1 // (p**m - 1), f, p), f, p) for m, cm in subs
        ):
            return tuple(f)
    raise AssertionError(f"no Conway polynomial found for ({p}, {n})")


def conway_poly(p: int, n: int) -> MPoly:
    """C_{p,n} as a univariate polynomial with integer coefficients in [0, p)."""
    return MPoly(1, {(i,): c for i, c in enumerate(conway_coeffs(p, n)) if c})


def format_univariate(poly: MPoly, name: str = "x") -> str:
    return poly.format([name])


# -- field contexts ------------------------------------------------------------


class FieldContext:
    """Arithmetic in F_{p^n} on integer codes; immutable after construction."""

    def __init__(self, p: int, n: int):
        self.p, self.n = p, n
        self.q = p**n
        self.modulus = conway_coeffs(p, n)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._zech: list[int] | None = None
        if self.q <= ZECH_LIMIT:
            self._build_tables()
        self._bsgs: tuple[int, dict[int, int], int] | None = None

    # encoding
    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _poly(self, code: int) -> list[int]:
        return _trim(list(self.decode(code)))

    def _build_tables(self) -> None:
        q1 = self.q - 1
        p, n, f = self.p, self.n, self.modulus
        exp = [0] * q1
        log = [-1] * self.q
        cur = [1] + [0] * (n - 1)
        for k in range(q1):
            code = self.encode(cur)
            exp[k] = code
            log[code] = k
            # multiply by the generator
            if n == 1:
                cur = [cur[0] * (-f[0]) % p]
            else:
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(c - top * fk) % p for c, fk in zip(cur, f)]
        if len(set(exp)) != q1:
            raise AssertionError("Conway root is not primitive")
        self._exp, self._log = exp, log
        one = self.encode([1])
        zech = [-1] * q1
        for k in range(q1):
            s = self.add(exp[k], one)
            zech[k] = log[s] if s else -1
        self._zech = zech

    # arithmetic on codes
    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self._zech is not None:
            if a == 0 or b == 0:
                return a or b
            q1 = self.q - 1
            la = self._log[a]
            z = self._zech[(self._log[b] - la) % q1]
            return 0 if z < 0 else self._exp[(la + z) % q1]
        out, mul = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * mul
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self._log is not None:
            q1 = self.q - 1
            return self._exp[(self._log[a] + q1 // 2) % q1]
        return self.encode([-c for c in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self.encode(_mulmod(self._poly(a), self._poly(b), self.modulus, self.p))

    def exp(self, k: int) -> int:
        k %= self.q - 1
        if self._exp is not None:
            return self._exp[k]
        g = [0, 1] if self.n > 1 else [(-self.modulus[0]) % self.p]
        return self.encode(_powmod(g, k, self.modulus, self.p))

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no discrete logarithm")
        if self._log is not None:
            return self._log[a]
        return self._bsgs_log(a)

    def _bsgs_log(self, a: int) -> int:
        q1 = self.q - 1
        if self._bsgs is None:
            m = isqrt(q1) + 1
            baby = {}
            cur = self.encode([1])
            g = self.exp(1)
            for j in range(m):
                baby.setdefault(cur, j)
                cur = self.mul(cur, g)
            self._bsgs = (m, baby, self.exp(-m))
        m, baby, step = self._bsgs
        cur = a
        for i in range(m + 1):
            if cur in baby:
                return (i * m + baby[cur]) % q1
            cur = self.mul(cur, step)
        raise AssertionError("discrete logarithm not found")

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in a finite field")
        return self.exp(-self.log(a))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0 if e else self.encode([1])
        return self.exp(self.log(a) * e)


@lru_cache(maxsize=None)
def field(p: int, n: int) -> FieldContext:
    _check_size(p, n)
    return FieldContext(p, n)


def _scale(p: int, m: int, n: int) -> int:
    return (p**n - 1) // (p**m - 1)


# -- elements ------------------------------------------------------------------


class FqElem:
    """An element of F_{p^n} given by its code in the Conway power basis.

    ``==`` and ``hash`` compare canonical forms, so an element and its image
    in an extension field are equal.
    """

    __slots__ = ("p", "degree", "code", "_canon")

    def __init__(self, p: int, degree: int, coeffs: Sequence[int]):
        ctx = field(p, degree)
        if len(coeffs) > degree:
            raise FieldError(f"expected at most {degree} coefficients")
        self.p, self.degree = p, degree
        self.code = ctx.encode(list(coeffs) + [0] * (degree - len(coeffs)))
        self._canon: tuple[int, int] | None = None

    @classmethod
    def from_code(cls, p: int, degree: int, code: int) -> "FqElem":
        out = cls.__new__(cls)
        out.p, out.degree, out.code, out._canon = p, degree, code, None
        return out

    @classmethod
    def from_int(cls, p: int, value: int, degree: int = 1) -> "FqElem":
        return cls(p, degree, [value % p])

    @classmethod
    def gen(cls, p: int, n: int) -> "FqElem":
        return cls.from_code(p, n, field(p, n).exp(1))

    @classmethod
    def from_log(cls, p: int, n: int, k: int) -> "FqElem":
        return cls.from_code(p, n, field(p, n).exp(k))

    @classmethod
    def zero(cls, p: int) -> "FqElem":
        return cls.from_code(p, 1, 0)

    @classmethod
    def one(cls, p: int) -> "FqElem":
        return cls.from_code(p, 1, 1)

    @property
    def ctx(self) -> FieldContext:
        return field(self.p, self.degree)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.decode(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def dlog(self) -> int:
        """Logarithm to the Conway generator of this element's own field."""
        return self.ctx.log(self.code)

    # canonical form
    def canonical_key(self) -> tuple[int, int]:
        """(m, code) in the minimal subfield F_{p^m}."""
        if self._canon is None:
            if self.code == 0:
                self._canon = (1, 0)
            else:
                k = self.dlog()
                for m in divisors(self.degree):
                    s = _scale(self.p, m, self.degree)
                    if k % s == 0:
                        self._canon = (m, field(self.p, m).exp(k // s))
                        break
        return self._canon

    def minimal_degree(self) -> int:
        return self.canonical_key()[0]

    def canonical(self) -> "FqElem":
        m, code = self.canonical_key()
        return FqElem.from_code(self.p, m, code)

    def embed(self, n: int) -> "FqElem":
        """Image in F_{p^n}; the own degree must divide ``n``."""
        if n % self.degree:
            raise FieldError(f"degree {self.degree} does not divide {n}")
        if n == self.degree:
            return self
        if self.code == 0:
            return FqElem.from_code(self.p, n, 0)
        k = self.dlog() * _scale(self.p, self.degree, n)
        return FqElem.from_code(self.p, n, field(self.p, n).exp(k))

    def order(self) -> int:
        if self.code == 0:
            raise FieldError("zero has no multiplicative order")
        q1 = self.ctx.q - 1
        return q1 // gcd(q1, self.dlog())

    # arithmetic
    def _align(self, other: object) -> tuple["FqElem", "FqElem"] | None:
        if isinstance(other, int):
            other = FqElem.from_int(self.p, other)
        elif isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldError("denominator divisible by the characteristic")
            other = FqElem.from_int(self.p, other.numerator) / FqElem.from_int(self.p, other.denominator)
        if not isinstance(other, FqElem):
            return None
        if other.p != self.p:
            raise FieldError(f"characteristic mismatch: {self.p} vs {other.p}")
        if other.degree == self.degree:
            return self, other
        n = self.degree * other.degree // gcd(self.degree, other.degree)
        return self.embed(n), other.embed(n)

    def __add__(self, other: object) -> "FqElem":
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FqElem.from_code(a.p, a.degree, a.ctx.add(a.code, b.code))

    __radd__ = __add__

    def __neg__(self) -> "FqElem":
        return FqElem.from_code(self.p, self.degree, self.ctx.neg(self.code))

    def __sub__(self, other: object) -> "FqElem":
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FqElem.from_code(a.p, a.degree, a.ctx.sub(a.code, b.code))

    def __rsub__(self, other: object) -> "FqElem":
        return (-self) + other

    def __mul__(self, other: object) -> "FqElem":
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FqElem.from_code(a.p, a.degree, a.ctx.mul(a.code, b.code))

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        return FqElem.from_code(self.p, self.degree, self.ctx.inv(self.code))

    def __truediv__(self, other: object) -> "FqElem":
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other: object) -> "FqElem":
        return self.inverse() * other

    def __pow__(self, e: int) -> "FqElem":
        return FqElem.from_code(self.p, self.degree, self.ctx.pow(self.code, e))

    def frobenius(self, k: int = 1) -> "FqElem":
        return self ** (self.p**k)

    # comparison / display
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.canonical_key() == (1, other % self.p)
        if not isinstance(other, FqElem):
            return NotImplemented
        if self.p != other.p:
            return False
        if self.degree == other.degree:
            return self.code == other.code
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash((self.p,) + self.canonical_key())

    def sort_key(self) -> tuple[int, int, int]:
        return (self.p,) + self.canonical_key()

    def is_single_term(self) -> bool:
        return self.minimal_degree() == 1

    def __str__(self) -> str:
        if self.minimal_degree() == 1:
            v = self.canonical_key()[1]
            return str(v - self.p if 2 * v > self.p else v)
        return self.fq_str()

    def fq_str(self) -> str:
        return f"fq({self.p},{self.degree},[{','.join(map(str, self.coeffs))}])"

    def __repr__(self) -> str:
        return self.fq_str()


def fq_dlog(a: FqElem) -> int:
    """Discrete log of ``a`` to the Conway generator of its minimal field."""
    if a.is_zero():
        raise FieldError("zero has no discrete logarithm")
    return a.canonical().dlog()


def fq_embed(a: FqElem, n: int) -> FqElem:
    return a.embed(n)


def all_elements(p: int, n: int) -> list[FqElem]:
    """Every element of F_{p^n} at ambient degree n, zero first then g^0, g^1, ..."""
    ctx = field(p, n)
    return [FqElem.from_code(p, n, 0)] + [FqElem.from_code(p, n, ctx.exp(k)) for k in range(ctx.q - 1)]
