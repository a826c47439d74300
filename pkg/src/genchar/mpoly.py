"""Sparse multivariate polynomials with pluggable monomial orders.

Coefficients are duck-typed field elements: ``Fraction`` for rational work,
``CycloNum`` for cyclotomic coefficients and ``FqElem`` for finite-field
systems.  All three support ``+ - * /`` among themselves and ``== 0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence

Exps = tuple[int, ...]

ORDERS = ("lex", "grlex", "grevlex")


def order_key(order: str) -> Callable[[Exps], tuple]:
    """Sort key realising ``order``; larger key means larger monomial.

    ``"elim:k"`` is the block order that eliminates the first ``k`` variables
    (grevlex on each block).
    """
    if order == "lex":
        return lambda e: e
    if order == "grlex":
        return lambda e: (sum(e), e)
    if order == "grevlex":
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    if order.startswith("elim:"):
        k = int(order[5:])

        def key(e: Exps) -> tuple:
            a, b = e[:k], e[k:]
            return (sum(a), tuple(-x for x in reversed(a)), sum(b), tuple(-x for x in reversed(b)))

        return key
    raise ValueError(f"unknown monomial order {order!r}")


def _is_zero(c: Any) -> bool:
    return c == 0


class MPoly:
    """Immutable polynomial in ``nvars`` variables stored as {exponents: coeff}."""

    __slots__ = ("nvars", "terms", "order", "_lead")

    def __init__(self, nvars: int, terms: Mapping[Exps, Any] | None = None, order: str = "grevlex"):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError("exponent length does not match variable count")
                if not _is_zero(c):
                    clean[tuple(e)] = c
        self.terms: dict[Exps, Any] = clean
        self.order = order
        self._lead: Exps | None = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: Any, nvars: int, order: str = "grevlex") -> "MPoly":
        return cls(nvars, {(0,) * nvars: c}, order)

    @classmethod
    def var(cls, i: int, nvars: int, one: Any = Fraction(1), order: str = "grevlex") -> "MPoly":
        """The variable x_{i+1} (0-based index ``i``)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): one}, order)

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Any = Fraction(1), order: str = "grevlex") -> "MPoly":
        return cls(len(exps), {tuple(exps): c}, order)

    # -- basic queries --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def lead_monomial(self) -> Exps:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=order_key(self.order))
        return self._lead

    def lead_coeff(self) -> Any:
        return self.terms[self.lead_monomial()]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coeff(self) -> Any:
        return self.terms.get((0,) * self.nvars, 0)

    def support_vars(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def sorted_terms(self) -> list[tuple[Exps, Any]]:
        key = order_key(self.order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def with_order(self, order: str) -> "MPoly":
        return MPoly(self.nvars, self.terms, order)

    def coeff_zero(self) -> Any:
        """A zero of the coefficient domain (``0`` when the polynomial is zero)."""
        for c in self.terms.values():
            return c - c
        return 0

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in rings of different dimension")

    def _coerce(self, other: Any) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        return MPoly.const(other, self.nvars, self.order)

    def __add__(self, other: Any) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if _is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MPoly(self.nvars, out, self.order)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other: Any) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "MPoly":
        if not isinstance(other, MPoly):
            if _is_zero(other):
                return MPoly(self.nvars, {}, self.order)
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()}, self.order)
        self._check(other)
        out: dict[Exps, Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    out[e] = out[e] + v
                else:
                    out[e] = v
        return MPoly(self.nvars, out, self.order)

    def __rmul__(self, other: Any) -> "MPoly":
        if isinstance(other, MPoly):
            return other * self
        if _is_zero(other):
            return MPoly(self.nvars, {}, self.order)
        return MPoly(self.nvars, {e: other * c for e, c in self.terms.items()}, self.order)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        if not self.terms:
            return MPoly.const(Fraction(1), self.nvars, self.order) if k == 0 else self
        c = next(iter(self.terms.values()))
        result = MPoly.const(c / c, self.nvars, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exps: Exps, c: Any) -> "MPoly":
        return MPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
            self.order,
        )

    def monic(self) -> "MPoly":
        if not self.terms:
            return self
        lc = self.lead_coeff()
        return MPoly(self.nvars, {e: c / lc for e, c in self.terms.items()}, self.order)

    # -- structure ------------------------------------------------------
    def embed(self, nvars: int, offset: int = 0) -> "MPoly":
        """Same polynomial viewed in ``nvars`` variables, shifted by ``offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("target ring too small")
        pad_r = nvars - offset - self.nvars
        return MPoly(
            nvars,
            {(0,) * offset + e + (0,) * pad_r: c for e, c in self.terms.items()},
            self.order,
        )

    def map_coeffs(self, f: Callable[[Any], Any]) -> "MPoly":
        return MPoly(self.nvars, {e: f(c) for e, c in self.terms.items()}, self.order)

    def evaluate(self, point: Sequence[Any]) -> Any:
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        total: Any = None
        cache: dict[tuple[int, int], Any] = {}
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = point[i] ** k
                    v = v * cache[key]
            total = v if total is None else total + v
        return 0 if total is None else total

    # -- comparisons / printing -----------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return self.is_constant() and self.constant_coeff() == other

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, names: str | Sequence[str] = "x") -> str:
        if not self.terms:
            return "0"
        if isinstance(names, str):
            names = [f"{names}{i + 1}" for i in range(self.nvars)]
        parts: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            sign, body = _split_sign(c)
            if mono:
                if body == "1":
                    text = mono
                else:
                    text = f"{body}*{mono}"
            else:
                text = body
            parts.append((sign, text))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, text in parts[1:]:
            out += (" - " if neg else " + ") + text
        return out


def _split_sign(c: Any) -> tuple[bool, str]:
    """(is_negative, body) for printing a coefficient."""
    if isinstance(c, (int, Fraction)):
        return (c < 0, str(abs(c)))
    s = str(c)
    if hasattr(c, "is_single_term") and not c.is_single_term():
        return (False, f"({s})")
    if s.startswith("-"):
        return (True, s[1:])
    return (False, s)


def poly_from_terms(nvars: int, items: Iterable[tuple[Sequence[int], Any]], order: str = "grevlex") -> MPoly:
    out: dict[Exps, Any] = {}
    for e, c in items:
        e = tuple(e)
        out[e] = out[e] + c if e in out else c
    return MPoly(nvars, out, order)
