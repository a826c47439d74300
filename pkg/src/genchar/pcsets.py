"""Concrete pc-sets ``T = V \\ S`` and finite presentations of definable sets.

``V`` and every member of ``S`` are algebraic sets given as lists of
irreducible components.  The closure of ``T`` keeps the components of ``V``
that are not contained in any member of ``S``; rank is the largest component
dimension of the closure and degree the number of components attaining it.

Intersections of components are resolved exactly when the result is empty,
one of the two components, or a linear variety; anything else raises
``UnresolvedComponentError``.  Linear arrangements are therefore closed under
every operation here.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence, Union

from .errors import GencharError, ParseError, PreconditionError, UnresolvedComponentError
from .finite_field import FqElem
from .ideals import NEG_INF, Ideal
from .mpoly import MPoly
from .polyparse import parse_fq, parse_polys
from .rank import BOTTOM, Atom, Descriptor, DisjointUnion, Empty, Ordinal2, Union as UnionNode

VERIFIED = "verified"
ASSERTED = "asserted"
UNRESOLVED = "unresolved"

SUBSET = "subset"  # almost a subset
EQUAL = "equal"  # almost equal
DISJOINT = "disjoint"  # almost disjoint
MIXED = "mixed"
REL_SYMBOLS = {SUBSET: "⊂̃", EQUAL: "∼", DISJOINT: "⊥̃", MIXED: "mixed"}

Rank = Union[int, float]


# -- components ------------------------------------------------------------------------


def _is_linear(gb: Sequence[MPoly]) -> bool:
    return all(g.total_degree() <= 1 for g in gb)


def _linear_in_some_variable(f: MPoly) -> bool:
    """``f = a*x_i + b`` with ``a, b`` free of ``x_i`` and coprime, for some i."""
    for i in range(f.nvars):
        if f.degree_in(i) != 1:
            continue
        a_terms, b_terms = {}, {}
        for e, c in f.terms.items():
            if e[i]:
                a_terms[e[:i] + (0,) + e[i + 1:]] = c
            else:
                b_terms[e] = c
        a = MPoly(f.nvars, a_terms)
        if a.is_constant() or _coprime(a, MPoly(f.nvars, b_terms)):
            return True
    return False


def _coprime(a: MPoly, b: MPoly) -> bool:
    if b.is_zero():
        return a.is_constant()
    if not all(isinstance(c, Fraction) for c in itertools.chain(a.terms.values(), b.terms.values())):
        return False
    import sympy

    gens = sympy.symbols(f"x1:{a.nvars + 1}")
    pa = sympy.Poly.from_dict({e: sympy.Rational(c.numerator, c.denominator) for e, c in a.terms.items()}, gens)
    pb = sympy.Poly.from_dict({e: sympy.Rational(c.numerator, c.denominator) for e, c in b.terms.items()}, gens)
    return pa.gcd(pb).total_degree() == 0


def irreducibility_check(gb: Sequence[MPoly]) -> bool:
    """Sufficient test for a prime ideal with irreducible zero set over an algebraically closed field.

    Accepts linear ideals (points and linear varieties) and principal ideals
    whose generator has degree one in some variable with coprime coefficients.
    """
    if _is_linear(gb):
        return True
    return len(gb) == 1 and _linear_in_some_variable(gb[0])


@dataclass(frozen=True, eq=False)
class Component:
    """An irreducible closed set given by its reduced Groebner basis."""

    nvars: int
    key: tuple[MPoly, ...]
    flag: str
    dim: int
    linear: bool

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Component) and self.nvars == other.nvars and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.nvars, self.key))

    @property
    def ideal(self) -> Ideal:
        return _ideal(self)

    @property
    def prime(self) -> bool:
        return self.flag == VERIFIED

    def sort_key(self) -> tuple:
        return (-self.dim, str(self))

    def __str__(self) -> str:
        if not self.key:
            return f"K^{self.nvars}"
        return "V(" + ", ".join(g.format("x") for g in self.key) + ")"


_IDEALS: dict[Component, Ideal] = {}
_COMPONENTS: dict[tuple[int, tuple[MPoly, ...]], Component] = {}


def _ideal(c: Component) -> Ideal:
    out = _IDEALS.get(c)
    if out is None:
        out = _IDEALS[c] = Ideal(c.nvars, list(c.key))
    return out


def component(nvars: int, gens: Sequence[MPoly], flag: str | None = None) -> Component | None:
    """The component cut out by ``gens``; ``None`` when the zero set is empty.

    ``flag`` is ``"verified"`` (the check must succeed), ``"asserted"`` (taken
    on trust) or ``None`` (verified when the check succeeds, else unresolved).
    """
    ideal = Ideal(nvars, list(gens))
    if ideal.is_unit():
        return None
    key = tuple(g.monic() for g in ideal.groebner())
    cached = _COMPONENTS.get((nvars, key))
    checked = cached.flag == VERIFIED if cached is not None else irreducibility_check(key)
    if flag == VERIFIED and not checked:
        raise GencharError(f"irreducibility of V({', '.join(map(str, key))}) could not be verified")
    if flag not in (None, VERIFIED, ASSERTED):
        raise ParseError(f"unknown irreducibility flag {flag!r}")
    final = VERIFIED if checked else (ASSERTED if flag == ASSERTED else UNRESOLVED)
    if cached is not None and cached.flag == final:
        return cached
    dim = ideal.dim()
    comp = Component(nvars, key, final, int(dim), _is_linear(key))
    if cached is None or final == VERIFIED:
        _COMPONENTS[(nvars, key)] = comp
    return comp


def whole_space(n: int) -> Component:
    return component(n, [])  # type: ignore[return-value]


def _require_resolved(c: Component) -> None:
    if c.flag == UNRESOLVED:
        raise UnresolvedComponentError(f"irreducibility of {c} is neither verified nor asserted")


_SUBSET: dict[tuple[Component, Component], bool] = {}


def comp_subset(c: Component, d: Component) -> bool:
    """Whether the zero set of ``c`` lies inside the zero set of ``d``."""
    if c == d:
        return True
    hit = _SUBSET.get((c, d))
    if hit is None:
        if c.dim > d.dim:
            hit = False
        elif c.dim == d.dim and c.prime and d.prime:
            hit = False  # equal dimension inside an irreducible set forces equality
        else:
            hit = _member_all(c, d)
        _SUBSET[(c, d)] = hit
    return hit


def _member_all(c: Component, d: Component) -> bool:
    ideal = c.ideal
    test = ideal.contains if c.prime else ideal.radical_contains
    return all(test(g) for g in d.key)


_MEET: dict[tuple[Component, Component], tuple[Component, ...]] = {}


def comp_meet(c: Component, d: Component) -> tuple[Component, ...]:
    """Irreducible components of the intersection, when resolvable."""
    if c == d:
        return (c,)
    hit = _MEET.get((c, d))
    if hit is not None:
        return hit
    total = component(c.nvars, list(c.key) + list(d.key))
    if total is None:
        out: tuple[Component, ...] = ()
    elif total == c or comp_subset(c, d):
        out = (c,)
    elif total == d or comp_subset(d, c):
        out = (d,)
    elif total.linear:
        out = (total,)
    else:
        raise UnresolvedComponentError(f"cannot resolve the intersection of {c} and {d}")
    _MEET[(c, d)] = _MEET[(d, c)] = out
    return out


def comp_product(c: Component, d: Component) -> Component:
    n = c.nvars + d.nvars
    gens = [g.embed(n, 0) for g in c.key] + [g.embed(n, c.nvars) for g in d.key]
    flags = {c.flag, d.flag}
    flag = None if UNRESOLVED in flags else (VERIFIED if flags == {VERIFIED} else ASSERTED)
    out = component(n, gens, flag if flag != VERIFIED else None)
    assert out is not None
    if flags == {VERIFIED} and out.flag != VERIFIED:
        # a product of irreducible varieties over an algebraically closed field is irreducible
        out = Component(out.nvars, out.key, VERIFIED, out.dim, out.linear)
        _COMPONENTS[(n, out.key)] = out
    return out


# -- algebraic sets ---------------------------------------------------------------------


def _irredundant(comps: Iterable[Component]) -> tuple[Component, ...]:
    uniq = sorted(set(comps), key=Component.sort_key)
    out: list[Component] = []
    for c in uniq:
        if not any(comp_subset(c, d) for d in out):
            out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class AlgSet:
    """A finite union of irreducible components with no containments among them."""

    nvars: int
    components: tuple[Component, ...]

    @classmethod
    def of(cls, nvars: int, comps: Iterable[Component | None]) -> "AlgSet":
        comps = [c for c in comps if c is not None]
        for c in comps:
            if c.nvars != nvars:
                raise ValueError("component in the wrong ambient dimension")
        return cls(nvars, _irredundant(comps))

    @classmethod
    def empty(cls, nvars: int) -> "AlgSet":
        return cls(nvars, ())

    @classmethod
    def whole(cls, nvars: int) -> "AlgSet":
        return cls(nvars, (whole_space(nvars),))

    @classmethod
    def from_gens(cls, nvars: int, *gen_lists: Sequence[MPoly]) -> "AlgSet":
        return cls.of(nvars, (component(nvars, g) for g in gen_lists))

    def is_empty(self) -> bool:
        return not self.components

    def rank_deg(self) -> tuple[Rank, int]:
        if not self.components:
            return NEG_INF, 0
        r = max(c.dim for c in self.components)
        return r, sum(1 for c in self.components if c.dim == r)

    def top_components(self) -> tuple[Component, ...]:
        r, _ = self.rank_deg()
        return tuple(c for c in self.components if c.dim == r)

    def contains_component(self, c: Component) -> bool:
        """``c`` inside this set; needs ``c`` irreducible."""
        _require_resolved(c)
        return any(comp_subset(c, d) for d in self.components)

    def contains_set(self, other: "AlgSet") -> bool:
        return all(self.contains_component(c) for c in other.components)

    def union(self, other: "AlgSet") -> "AlgSet":
        return AlgSet.of(self.nvars, self.components + other.components)

    def meet(self, other: "AlgSet") -> "AlgSet":
        out: list[Component] = []
        for c in self.components:
            for d in other.components:
                out.extend(comp_meet(c, d))
        return AlgSet.of(self.nvars, out)

    def product(self, other: "AlgSet") -> "AlgSet":
        return AlgSet.of(
            self.nvars + other.nvars,
            (comp_product(c, d) for c in self.components for d in other.components),
        )

    def contains_point(self, pt: Sequence[Any]) -> bool:
        return any(all(g.evaluate(pt) == 0 for g in c.key) for c in self.components)

    def __str__(self) -> str:
        if not self.components:
            return "empty"
        return " u ".join(str(c) for c in self.components)


# -- pc-sets -----------------------------------------------------------------------------


@dataclass(frozen=True)
class PcSet:
    """The set ``V`` minus the union of the members of ``S``."""

    V: AlgSet
    S: tuple[AlgSet, ...] = ()
    closure_normalized: bool = field(default=False, compare=False)

    @property
    def nvars(self) -> int:
        return self.V.nvars

    @classmethod
    def algebraic(cls, V: AlgSet) -> "PcSet":
        return cls(V, (), True)

    def normalized(self) -> "PcSet":
        if self.closure_normalized:
            return self
        return PcSet(pc_closure(self), self.S, True)

    def contains_point(self, pt: Sequence[Any]) -> bool:
        return self.V.contains_point(pt) and not any(W.contains_point(pt) for W in self.S)

    def __str__(self) -> str:
        if not self.S:
            return str(self.V)
        return str(self.V) + "".join(f" \\ ({W})" for W in self.S)


PcLike = Union[PcSet, Sequence[PcSet]]


def _pieces(T: PcLike) -> tuple[PcSet, ...]:
    return (T,) if isinstance(T, PcSet) else tuple(T)


def pc_closure(T: PcLike) -> AlgSet:
    """Zariski closure: components of ``V`` not contained in any member of ``S``."""
    pieces = _pieces(T)
    if not pieces:
        raise ValueError("closure of an empty union needs an ambient dimension")
    out: list[Component] = []
    for piece in pieces:
        if piece.closure_normalized:
            out.extend(piece.V.components)
            continue
        for c in piece.V.components:
            _require_resolved(c)
            if not any(W.contains_component(c) for W in piece.S):
                out.append(c)
    return AlgSet.of(pieces[0].nvars, out)


def pc_rank_deg(T: PcLike) -> tuple[Rank, int]:
    return pc_closure(T).rank_deg()


def rank_of(T: PcLike) -> Rank:
    return pc_rank_deg(T)[0]


def _meet(T: PcSet, U: PcSet) -> PcSet:
    return PcSet(T.V.meet(U.V), T.S + U.S).normalized()


def pc_op(T: PcSet, U: PcSet, op: str) -> PcSet:
    """One of ``cap``, ``capdot``, ``dotminus``, ``times`` (or the symbols)."""
    op = _OP_NAMES.get(op, op)
    if op == "times":
        W1 = AlgSet.whole(U.nvars)
        W0 = AlgSet.whole(T.nvars)
        S = tuple(W.product(W1) for W in T.S) + tuple(W0.product(W) for W in U.S)
        return PcSet(T.V.product(U.V), S).normalized()
    if T.nvars != U.nvars:
        raise ValueError("pc-sets in different ambient spaces")
    if op == "cap":
        return _meet(T, U)
    if op == "capdot":
        return PcSet(T.V.meet(pc_closure(U)), T.S).normalized()
    if op == "dotminus":
        return PcSet(T.V, T.S + (pc_closure(U),)).normalized()
    raise ValueError(f"unknown pc operation {op!r}")


_OP_NAMES = {"∩": "cap", "∩̇": "capdot", "∸": "dotminus", "×": "times", "x": "times"}


def meet(T: PcLike, U: PcLike) -> tuple[PcSet, ...]:
    """Intersection of finite unions of pc-sets, piece by piece."""
    return tuple(_meet(a, b) for a in _pieces(T) for b in _pieces(U))


def capdot(T: PcLike, U: PcLike) -> tuple[PcSet, ...]:
    V = pc_closure(U)
    return tuple(PcSet(a.V.meet(V), a.S).normalized() for a in _pieces(T))


def dotminus(T: PcLike, U: PcLike) -> tuple[PcSet, ...]:
    V = pc_closure(U)
    return tuple(PcSet(a.V, a.S + (V,)).normalized() for a in _pieces(T))


def _almost_subset(rT: Rank, dT: int, rU: Rank, rI: Rank, dI: int) -> bool:
    return rT == rU == rI and dI == dT


def pc_rel(T: PcLike, U: PcLike) -> str:
    """``subset``, ``equal``, ``disjoint`` or ``mixed`` for sets of equal rank."""
    rT, dT = pc_rank_deg(T)
    rU, dU = pc_rank_deg(U)
    if rT != rU:
        raise PreconditionError(f"ranks differ ({rT} vs {rU})")
    rI, dI = pc_rank_deg(meet(T, U))
    fwd = _almost_subset(rT, dT, rU, rI, dI)
    back = _almost_subset(rU, dU, rT, rI, dI)
    if fwd and back:
        return EQUAL
    if fwd:
        return SUBSET
    if rI < rT:
        return DISJOINT
    return MIXED


def top_component_rel(T: PcLike, U: PcLike) -> str:
    """The same relation decided from top components of the closures alone."""
    A, B = pc_closure(T), pc_closure(U)
    if A.rank_deg()[0] != B.rank_deg()[0]:
        raise PreconditionError("ranks differ")
    ta, tb = set(A.top_components()), set(B.top_components())
    if ta == tb:
        return EQUAL
    if ta <= tb:
        return SUBSET
    if not ta & tb:
        return DISJOINT
    return MIXED


# -- finite presentations -----------------------------------------------------------------

Label = tuple


@dataclass(frozen=True)
class FinitePresentation:
    nvars: int
    labels: tuple[Label, ...]
    fibers: tuple[PcSet, ...]
    annotation: tuple[int, int | None] | None = None

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.fibers):
            raise ValueError("one label per fiber")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")

    @classmethod
    def of(cls, fibers: Sequence[PcSet], labels: Sequence[Label] | None = None,
           annotation: tuple[int, int | None] | None = None) -> "FinitePresentation":
        if not fibers and labels is None:
            raise ValueError("an empty presentation needs an ambient dimension")
        labels = [(i + 1,) for i in range(len(fibers))] if labels is None else [tuple(l) for l in labels]
        n = fibers[0].nvars
        return cls(n, tuple(labels), tuple(f.normalized() for f in fibers), annotation)

    def items(self) -> Iterator[tuple[Label, PcSet]]:
        return zip(self.labels, self.fibers)

    def ranks(self) -> list[tuple[Rank, int]]:
        return [pc_rank_deg(f) for f in self.fibers]

    def max_rank(self) -> Rank:
        return max((r for r, _ in self.ranks()), default=NEG_INF)

    def primary(self) -> list[int]:
        r = self.max_rank()
        if r == NEG_INF:
            return []
        return [i for i, (ri, _) in enumerate(self.ranks()) if ri == r]

    def union(self) -> tuple[PcSet, ...]:
        return self.fibers

    def _replace(self, labels: list[Label], fibers: list[PcSet]) -> "FinitePresentation":
        return FinitePresentation(self.nvars, tuple(labels), tuple(fibers), self.annotation)


def _nonempty(items: Iterable[tuple[Label, PcSet]]) -> list[tuple[Label, PcSet]]:
    return [(l, f) for l, f in items if rank_of(f) != NEG_INF]


def _offending_pair(P: FinitePresentation) -> tuple[int, int] | None:
    prim = P.primary()
    for i in prim:
        for j in prim:
            if i != j and pc_rel(P.fibers[i], P.fibers[j]) == MIXED:
                return i, j
    return None


def is_essentially_disjoint(P: FinitePresentation) -> bool:
    prim = P.primary()
    return all(
        pc_rel(P.fibers[i], P.fibers[j]) in (EQUAL, DISJOINT) for i, j in itertools.combinations(prim, 2)
    )


def refine_essentially_disjoint(P: FinitePresentation) -> FinitePresentation:
    """Split fibers until every two maximal-rank fibers are almost equal or almost disjoint.

    The first offending pair ``(a, b)`` in label order has ``T_a`` replaced by
    ``T_a capdot T_b`` (label ``a + (0,)``) and ``T_a dotminus T_b`` (label
    ``a + (1,)``); empty fibers are dropped.
    """
    cur = P._replace(*map(list, zip(*_nonempty(P.items())))) if _nonempty(P.items()) else P._replace([], [])
    while True:
        pair = _offending_pair(cur)
        if pair is None:
            return cur
        i, j = pair
        a, b = cur.fibers[i], cur.fibers[j]
        split = _nonempty([
            (cur.labels[i] + (0,), pc_op(a, b, "capdot")),
            (cur.labels[i] + (1,), pc_op(a, b, "dotminus")),
        ])
        items = list(cur.items())
        items[i:i + 1] = split
        cur = cur._replace([l for l, _ in items], [f for _, f in items])


def primary_quotient(P: FinitePresentation) -> list[list[Label]]:
    """Almost-equality classes of the maximal-rank fibers, in label order."""
    if not is_essentially_disjoint(P):
        raise PreconditionError("presentation is not essentially disjoint")
    classes: list[list[int]] = []
    for i in P.primary():
        for cls in classes:
            if pc_rel(P.fibers[cls[0]], P.fibers[i]) == EQUAL:
                cls.append(i)
                break
        else:
            classes.append([i])
    return [[P.labels[i] for i in cls] for cls in classes]


def is_geometric(P: FinitePresentation) -> bool:
    if not is_essentially_disjoint(P):
        return False
    return all(pc_rank_deg(P.fibers[i])[1] == 1 for i in P.primary())


def _split_along_components(T: PcSet) -> list[PcSet]:
    tops = pc_closure(T).top_components()
    out = []
    done: list[Component] = []
    for c in tops:
        piece = PcSet(T.V.meet(AlgSet(T.nvars, (c,))), T.S + tuple(AlgSet(T.nvars, (d,)) for d in done))
        out.append(piece.normalized())
        done.append(c)
    out.append(PcSet(T.V, T.S + (AlgSet.of(T.nvars, tops),)).normalized())
    return out


def refine_geometric(P: FinitePresentation) -> FinitePresentation:
    """Split primary fibers along their top components until each has exactly one."""
    cur = refine_essentially_disjoint(P)
    while True:
        bad = next((i for i in cur.primary() if pc_rank_deg(cur.fibers[i])[1] > 1), None)
        if bad is None:
            return cur
        pieces = _nonempty(
            (cur.labels[bad] + (k,), f) for k, f in enumerate(_split_along_components(cur.fibers[bad]))
        )
        items = list(cur.items())
        items[bad:bad + 1] = pieces
        cur = refine_essentially_disjoint(cur._replace([l for l, _ in items], [f for _, f in items]))


def presentation_gr_gd(P: FinitePresentation) -> tuple[Ordinal2, int]:
    """Geometric rank and degree read off a geometric presentation."""
    if not is_geometric(P):
        raise PreconditionError("presentation is not geometric")
    r = P.max_rank()
    if r == NEG_INF:
        return BOTTOM, 0
    rF, dF = P.annotation if P.annotation is not None else (0, None)
    gd = dF if dF is not None else len(primary_quotient(P))
    return Ordinal2(int(r), rF), gd


def presentation_descriptor(P: FinitePresentation) -> Descriptor:
    """Symbolic descriptor of a geometric presentation.

    Each almost-equality class becomes a nested union of its fiber atoms with
    the overlap degree computed from the concrete intersection; classes and
    lower-rank fibers are combined by a disjoint union.
    """
    if P.annotation is not None:
        r = P.max_rank()
        if r == NEG_INF:
            return Empty()
        rF, dF = P.annotation
        return Atom(int(r), 1, rF, dF if dF is not None else len(primary_quotient(P)))
    index = {l: i for i, l in enumerate(P.labels)}
    prim = set(P.primary())
    children: list[Descriptor] = []
    for cls in primary_quotient(P):
        members = [P.fibers[index[l]] for l in cls]
        node: Descriptor = _fiber_atom(members[0])
        acc: list[PcSet] = [members[0]]
        for f in members[1:]:
            overlap = pc_rank_deg(meet(acc, f))[1]
            node = UnionNode((node, _fiber_atom(f)), overlap)
            acc.append(f)
        children.append(node)
    for i, f in enumerate(P.fibers):
        if i not in prim and rank_of(f) != NEG_INF:
            children.append(_fiber_atom(f))
    return DisjointUnion(tuple(children)) if children else Empty()


def _fiber_atom(T: PcSet) -> Atom:
    r, d = pc_rank_deg(T)
    return Atom(int(r), d, 0, 1)


# -- sampling -----------------------------------------------------------------------------


def linear_points(c: Component, grid: Sequence[int] = (-1, 0, 1, 2), cap: int = 64) -> list[tuple[Fraction, ...]]:
    """Points of a linear component from integer values of its free coordinates."""
    if not c.linear:
        raise UnresolvedComponentError(f"{c} is not linear")
    pivots = {}
    for g in c.key:
        lead = g.lead_monomial()
        pivots[lead.index(1)] = g
    free = [i for i in range(c.nvars) if i not in pivots]
    out = []
    for vals in itertools.islice(itertools.product(grid, repeat=len(free)), cap):
        pt: list[Any] = [Fraction(0)] * c.nvars
        for i, v in zip(free, vals):
            pt[i] = Fraction(v)
        for i, g in pivots.items():
            rest = g - MPoly.var(i, c.nvars) * g.lead_coeff()
            pt[i] = -rest.evaluate(pt) / g.lead_coeff()
        out.append(tuple(pt))
    return out


def sample_points(T: PcLike, grid: Sequence[int] = (-1, 0, 1, 2)) -> list[tuple[Fraction, ...]]:
    """Grid points on every linear component of every ``V`` and ``S`` member involved."""
    seen: set[tuple[Fraction, ...]] = set()
    for piece in _pieces(T):
        comps = list(piece.V.components) + [c for W in piece.S for c in W.components]
        for c in comps:
            if c.linear:
                seen.update(linear_points(c, grid))
    return sorted(seen)


def union_contains(T: PcLike, pt: Sequence[Any]) -> bool:
    return any(piece.contains_point(pt) for piece in _pieces(T))


# -- the linear-arrangement corpus -----------------------------------------------------------


def _lin(n: int, *texts: str) -> Component:
    c = component(n, parse_polys(list(texts), n, "x") if texts else [])
    assert c is not None
    return c


def _alg(n: int, *comps: Component) -> AlgSet:
    return AlgSet.of(n, comps)


def linear_corpus() -> list[PcSet]:
    """About fifty pc-sets built from coordinate subspaces and rational hyperplanes."""
    out: list[PcSet] = []

    def add(V: AlgSet, *S: AlgSet) -> None:
        out.append(PcSet(V, tuple(S)).normalized())

    # ambient dimension 1
    K1, o1, p1 = _lin(1), _lin(1, "x1"), _lin(1, "x1 - 1")
    add(_alg(1, K1))
    add(_alg(1, o1))
    add(_alg(1, o1, p1))
    add(_alg(1, K1), _alg(1, o1))
    add(_alg(1, K1), _alg(1, o1, p1))

    # ambient dimension 2
    K2 = _lin(2)
    O, P = _lin(2, "x1", "x2"), _lin(2, "x1 - 1", "x2")
    A1, A2 = _lin(2, "x2"), _lin(2, "x1")
    D, E = _lin(2, "x1 - x2"), _lin(2, "x1 + x2 - 1")
    for c in (A1, A2, D, E, O, P):
        add(_alg(2, c))
    add(_alg(2, A1, A2))
    add(_alg(2, A1, D))
    add(_alg(2, A1, E))
    add(_alg(2, A1), _alg(2, O))
    add(_alg(2, A1, A2), _alg(2, O))
    add(_alg(2, A1, P))
    add(_alg(2, A1), _alg(2, P))
    add(_alg(2, D), _alg(2, O))
    add(_alg(2, E, O))
    add(_alg(2, O, P))
    add(_alg(2, K2))
    add(_alg(2, K2), _alg(2, A1))
    add(_alg(2, K2), _alg(2, A1, A2))
    add(_alg(2, A1, A2, D), _alg(2, A2))
    add(_alg(2, O), _alg(2, A1))

    # ambient dimension 3
    K3 = _lin(3)
    O3 = _lin(3, "x1", "x2", "x3")
    Q = _lin(3, "x1 - 1", "x2 - 1", "x3 - 1")
    X1, X2, X3 = _lin(3, "x2", "x3"), _lin(3, "x1", "x3"), _lin(3, "x1", "x2")
    H1, H3 = _lin(3, "x1"), _lin(3, "x3")
    H = _lin(3, "x1 + x2 + x3 - 1")
    Dg = _lin(3, "x1 - x2", "x2 - x3")
    M = _lin(3, "x1 - x2", "x3")
    for c in (X1, X2, Dg, H1, H3, H, O3, Q):
        add(_alg(3, c))
    add(_alg(3, X1, X2))
    add(_alg(3, X1, X2, X3))
    add(_alg(3, X1), _alg(3, O3))
    add(_alg(3, X1, M), _alg(3, O3))
    add(_alg(3, H1, H3))
    add(_alg(3, H3), _alg(3, X1))
    add(_alg(3, H3), _alg(3, X1, X2))
    add(_alg(3, H1, H3), _alg(3, X2))
    add(_alg(3, H, X3))
    add(_alg(3, H, H3))
    add(_alg(3, K3))
    add(_alg(3, K3), _alg(3, H3))
    add(_alg(3, Dg, Q))
    add(_alg(3, Dg), _alg(3, Q))
    add(_alg(3, H3, Dg))
    add(_alg(3, X3, Q))
    return out


# -- JSON files ------------------------------------------------------------------------------


def _parse_label(item: Any) -> Any:
    if isinstance(item, str) and item.strip().startswith("fq("):
        return parse_fq(item)
    if isinstance(item, (int, str)):
        return item
    raise ParseError(f"unsupported label entry {item!r}")


def _parse_component(n: int, data: Any) -> Component | None:
    if isinstance(data, list):
        data = {"gens": data}
    if not isinstance(data, dict) or "gens" not in data:
        raise ParseError("a component is an object with a 'gens' list")
    gens = parse_polys(list(data["gens"]), n, "x") if data["gens"] else []
    return component(n, gens, data.get("irreducible"))


def _parse_algset(n: int, data: Any) -> AlgSet:
    if not isinstance(data, list):
        raise ParseError("an algebraic set is a list of components")
    return AlgSet.of(n, (_parse_component(n, c) for c in data))


def presentation_from_json(data: dict | str) -> FinitePresentation:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    try:
        n = int(data["ambient"])
        fibers, labels = [], []
        for i, fib in enumerate(data["fibers"]):
            V = _parse_algset(n, fib["V"])
            S = tuple(_parse_algset(n, W) for W in fib.get("S", []))
            fibers.append(PcSet(V, S))
            labels.append(tuple(_parse_label(x) for x in fib.get("label", [i + 1])))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GencharError):
            raise
        raise ParseError(f"malformed presentation: {exc}") from None
    ann = data.get("annotation")
    annotation = None
    if ann is not None and (ann.get("rF") not in (None, 0) or ann.get("dF") is not None):
        annotation = (int(ann.get("rF") or 0), None if ann.get("dF") is None else int(ann["dF"]))
    if not fibers:
        return FinitePresentation(n, (), (), annotation)
    return FinitePresentation.of(fibers, labels, annotation)


def load_presentation(path: str) -> FinitePresentation:
    with open(path, encoding="utf-8") as fh:
        return presentation_from_json(fh.read())


def _component_json(c: Component) -> dict:
    return {"gens": [g.format("x") for g in c.key], "irreducible": c.flag}


def pcset_json(T: PcSet) -> dict:
    return {
        "V": [_component_json(c) for c in T.V.components],
        "S": [[_component_json(c) for c in W.components] for W in T.S],
    }


def presentation_json(P: FinitePresentation) -> dict:
    out: dict[str, Any] = {
        "ambient": P.nvars,
        "fibers": [dict(label=[label_item_json(x) for x in l], **pcset_json(f)) for l, f in P.items()],
    }
    if P.annotation is not None:
        out["annotation"] = {"rF": P.annotation[0], "dF": P.annotation[1]}
    return out


def label_item_json(x: Any) -> Any:
    if isinstance(x, FqElem):
        return x.fq_str()
    return x if isinstance(x, (int, str)) else str(x)


def label_str(label: Label) -> str:
    return "(" + ",".join(str(x) for x in label) + ")"


def rank_str(r: Rank) -> str:
    return "-inf" if r == NEG_INF else str(int(r))
