"""The injective multiplicative character of the Conway tower.

The Conway generator of F_{p^m} is sent to exp(2*pi*i/(p^m - 1)); norm
compatibility of the generators makes this coherent along the tower.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .config import limits
from .cyclotomic import CycloNum, RootOfUnity
from .errors import FieldError, ResourceError
from .finite_field import (
    FqElem,
    _eval_at,
    _mulmod,
    _powmod,
    _trim,
    conway_coeffs,
    field,
)
from .numtheory import divisors, is_prime, multiplicative_order


@dataclass(frozen=True)
class CharContext:
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")


def chi_root(ctx: CharContext, a: FqElem) -> RootOfUnity | None:
    """chi(a) as a root of unity (None for a = 0)."""
    if a.p != ctx.p:
        raise FieldError(f"characteristic mismatch: {a.p} vs {ctx.p}")
    if a.is_zero():
        return None
    # the ratio dlog/(p^n - 1) is the same in every field containing a
    return RootOfUnity(a.dlog(), a.ctx.q - 1)


def chi(ctx: CharContext, a: FqElem) -> CycloNum:
    r = chi_root(ctx, a)
    return CycloNum.rational(0) if r is None else CycloNum.from_root(r)


def chi_preimage(ctx: CharContext, u: RootOfUnity) -> FqElem | None:
    """The unique a with chi(a) = u, or None when p divides the order of u."""
    d = u.den
    if d % ctx.p == 0:
        return None
    m = 1 if d == 1 else multiplicative_order(ctx.p, d)
    if ctx.p**m > limits().field_bound:
        raise ResourceError(f"root of order {d} needs F_{ctx.p}^{m}, beyond the field bound")
    q1 = ctx.p**m - 1
    return FqElem.from_log(ctx.p, m, u.num * (q1 // d)).canonical()


@dataclass
class CharacterReport:
    p: int
    n_max: int
    fields: list[int] = dfield(default_factory=list)
    checks: int = 0
    failures: list[str] = dfield(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        sizes = ", ".join(f"F_{self.p}^{n}" for n in self.fields)
        out = [f"character p={self.p} fields: {sizes}", f"checks: {self.checks}"]
        out += [f"FAIL {w}" for w in self.failures[:20]]
        out.append("PASS" if self.passed else f"FAIL ({len(self.failures)} witnesses)")
        return out


def _generator(p: int, n: int) -> list[int]:
    f = conway_coeffs(p, n)
    return [0, 1] if n > 1 else [(-f[0]) % p]


def verify_character(ctx: CharContext, n_max: int, max_failures: int = 50) -> CharacterReport:
    """Exhaustive multiplicativity, injectivity and tower checks for n <= n_max.

    Products and embeddings are recomputed by polynomial arithmetic modulo the
    Conway polynomials, independently of the log tables that define chi.
    """
    p = ctx.p
    rep = CharacterReport(p, n_max)

    def fail(msg: str) -> None:
        if len(rep.failures) < max_failures:
            rep.failures.append(msg)

    for n in range(1, n_max + 1):
        fc = field(p, n)
        rep.fields.append(n)
        mod = conway_coeffs(p, n)
        elems = [FqElem.from_code(p, n, c) for c in range(fc.q)]
        values = [chi_root(ctx, a) for a in elems]
        if values[0] is not None or values[1] != RootOfUnity(0, 1):
            fail(f"chi(0), chi(1) wrong in F_{p}^{n}")
        seen = {}
        for a, v in zip(elems, values):
            rep.checks += 1
            if v in seen:
                fail(f"not injective: chi({seen[v]!r}) = chi({a!r})")
            seen[v] = a
        polys = [_trim(list(a.coeffs)) for a in elems]
        for i in range(1, fc.q):
            for j in range(i, fc.q):
                prod = fc.encode(_mulmod(polys[i], polys[j], mod, p))
                rep.checks += 1
                if values[prod] != values[i] * values[j]:
                    fail(f"chi({elems[i]!r}*{elems[j]!r}) != chi*chi")
        # tower: embed F_{p^m} by g_m -> g_n^s and compare chi at both levels
        for m in divisors(n):
            if m == n:
                continue
            h = _powmod(_generator(p, n), (fc.q - 1) // (p**m - 1), mod, p)
            for code in range(1, p**m):
                a = FqElem.from_code(p, m, code)
                image = fc.encode(_eval_at(list(a.coeffs), h, mod, p))
                rep.checks += 1
                if values[image] != chi_root(ctx, a):
                    fail(f"tower mismatch for {a!r} into degree {n}")
    return rep
