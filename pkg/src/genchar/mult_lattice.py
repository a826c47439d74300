"""Multiplicative relations among units.

Every supported unit is mapped to a vector in a common group ``Z^N / R``;
the relations of a tuple are then the left kernel of its vectors stacked
on top of the modulus rows ``R``:

* roots of unity and rational signs share one torsion coordinate modulo
  the lcm of the orders;
* rationals use exponent vectors over a coprime base of their numerators
  and denominators (exact, no factoring needed);
* finite-field elements use their image under the character, i.e. the
  fraction ``dlog/(q - 1)``, again as a torsion coordinate;
* formal units carry a declared lattice of relations among family members.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .cyclotomic import CycloNum, RootOfUnity, as_root_of_unity
from .errors import UnitKindError
from .finite_field import FqElem
from .lattice import ExponentLattice, hnf, integer_kernel, lcm


@dataclass(frozen=True)
class FormalFamily:
    """Named symbols with a declared lattice of multiplicative relations."""

    names: tuple[str, ...]
    relations: ExponentLattice
    transcendental: tuple[bool, ...]

    def __post_init__(self) -> None:
        if self.relations.dim != len(self.names) or len(self.transcendental) != len(self.names):
            raise UnitKindError("formal family declaration has inconsistent dimensions")

    @classmethod
    def declare(
        cls,
        names: Sequence[str],
        relations: Sequence[Sequence[int]] = (),
        transcendental: Sequence[bool] | None = None,
    ) -> "FormalFamily":
        lat = ExponentLattice.from_generators(len(names), relations)
        flags = tuple(transcendental) if transcendental is not None else (True,) * len(names)
        return cls(tuple(names), lat, flags)

    def unit(self, name: str) -> "FormalUnit":
        return FormalUnit(self, self.names.index(name))


@dataclass(frozen=True)
class FormalUnit:
    family: FormalFamily
    index: int

    @property
    def name(self) -> str:
        return self.family.names[self.index]

    @property
    def transcendental(self) -> bool:
        return self.family.transcendental[self.index]

    def __str__(self) -> str:
        return self.name


Unit = Union[RootOfUnity, FqElem, Fraction, int, CycloNum, FormalUnit]


def _normalize(u: Unit) -> Unit:
    if isinstance(u, CycloNum):
        if u.is_rational():
            u = u.as_rational()
        else:
            r = as_root_of_unity(u)
            if r is None:
                raise UnitKindError(f"{u} is neither rational nor a root of unity")
            return r
    if isinstance(u, int) and not isinstance(u, bool):
        u = Fraction(u)
    if isinstance(u, Fraction):
        if u == 0:
            raise UnitKindError("zero is not a unit")
        return u
    if isinstance(u, FqElem):
        if u.is_zero():
            raise UnitKindError("zero is not a unit")
        return u
    if isinstance(u, (RootOfUnity, FormalUnit)):
        return u
    raise UnitKindError(f"unsupported unit {u!r}")


def _kind(u: Unit) -> str:
    if isinstance(u, (RootOfUnity, Fraction)):
        return "number"
    if isinstance(u, FqElem):
        return f"fq{u.p}"
    return f"formal{id(u.family)}"


def coprime_base(values: Sequence[int]) -> list[int]:
    """Pairwise coprime integers > 1 generating every value multiplicatively."""
    base: list[int] = []
    for v in values:
        todo = [abs(v)]
        while todo:
            x = todo.pop()
            if x <= 1:
                continue
            for i, b in enumerate(base):
                g = gcd(x, b)
                if g > 1:
                    base.pop(i)
                    todo.extend([b // g, g, x // g])
                    break
            else:
                base.append(x)
    return sorted(base)


def _valuation(x: int, b: int) -> int:
    k = 0
    while x % b == 0:
        x //= b
        k += 1
    return k


def _vectors(units: Sequence[Unit]) -> tuple[list[list[int]], list[list[int]]]:
    """(unit rows, modulus rows) in a common coordinate system."""
    if not units:
        return [], []
    kinds = {_kind(u) for u in units}
    if len(kinds) > 1:
        raise UnitKindError("incomparable unit kinds in one tuple")
    kind = kinds.pop()
    if kind.startswith("formal"):
        fam = units[0].family
        n = len(fam.names)
        rows = [[1 if j == u.index else 0 for j in range(n)] for u in units]
        return rows, [list(r) for r in fam.relations.basis]
    if kind.startswith("fq"):
        fracs = [Fraction(u.dlog(), u.ctx.q - 1) for u in units]
        m = lcm(*(f.denominator for f in fracs))
        return [[int(f * m)] for f in fracs], [[m]]
    # roots of unity and rationals
    tors: list[Fraction] = []
    ints: list[int] = []
    for u in units:
        if isinstance(u, RootOfUnity):
            tors.append(Fraction(u.num, u.den))
        else:
            tors.append(Fraction(1, 2) if u < 0 else Fraction(0))
            ints += [u.numerator, u.denominator]
    base = coprime_base(ints)
    m = lcm(*(t.denominator for t in tors))
    rows = []
    for u, t in zip(units, tors):
        if isinstance(u, RootOfUnity):
            free = [0] * len(base)
        else:
            free = [_valuation(abs(u.numerator), b) - _valuation(u.denominator, b) for b in base]
        rows.append(free + [int(t * m)])
    return rows, [[0] * len(base) + [m]]


def relation_lattice(g: Sequence[Unit], h: Sequence[Unit] = ()) -> ExponentLattice:
    """HNF lattice ``{v in Z^n : g^v in <h>}``."""
    g = [_normalize(u) for u in g]
    h = [_normalize(u) for u in h]
    n = len(g)
    if n == 0:
        return ExponentLattice(0, ())
    rows, mods = _vectors(g + h)
    kern = integer_kernel(rows + mods)
    return ExponentLattice(n, hnf(v[:n] for v in kern))


mtp = relation_lattice


def is_mult_independent(g: Sequence[Unit], b: Sequence[Unit] = ()) -> bool:
    return relation_lattice(g, b).is_zero()


def mcl_member(a: Unit, A: Sequence[Unit], B: Sequence[Unit] = ()) -> bool:
    """Whether some positive power of ``a`` lies in ``<A u B>``."""
    return not relation_lattice([a], list(A) + list(B)).is_zero()


def mult_basis(A: Sequence[Unit], B: Sequence[Unit] = ()) -> list[Unit]:
    """Greedy left-to-right multiplicative basis of ``A`` over ``B``."""
    chosen: list[Unit] = []
    for a in A:
        if not mcl_member(a, chosen, B):
            chosen.append(a)
    return chosen


def unit_str(u: Unit) -> str:
    return str(_normalize(u))
