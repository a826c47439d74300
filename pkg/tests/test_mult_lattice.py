from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from genchar.cyclotomic import RootOfUnity
from genchar.finite_field import FqElem
from genchar.mult_lattice import is_mult_independent, mcl_member, mult_basis, relation_lattice

Z = RootOfUnity


def test_relation_lattice_examples():
    assert str(relation_lattice([Z(1, 3), Z(1, 6)])) == "[[1,4],[0,6]]"
    assert str(relation_lattice([Z(1, 5)])) == "[[5]]"
    assert str(relation_lattice([FqElem.from_int(7, 2), FqElem.from_int(7, 4)])) == "[[1,1],[0,3]]"


def test_independence_examples():
    assert not is_mult_independent([Z(1, 3)])
    assert is_mult_independent([Fraction(2)])
    assert not is_mult_independent([Fraction(2), Fraction(8)])


def test_mcl_examples():
    assert mcl_member(Z(1, 6), [Z(1, 3)])
    # torsion lies in every multiplicative closure: zeta5^5 = 1
    assert mcl_member(Z(1, 5), [Z(1, 3)])
    assert mcl_member(Fraction(2), [Fraction(2)])
    assert not mcl_member(Fraction(3), [Fraction(2)])
    assert mcl_member(Fraction(4), [Fraction(8)])


def test_mult_basis_examples():
    assert mult_basis([Z(1, 3), Z(1, 6), Z(1, 2)]) == []
    assert mult_basis([Fraction(2), Fraction(3), Fraction(6)]) == [Fraction(2), Fraction(3)]
    assert mult_basis([]) == []


def test_rational_relations():
    assert str(relation_lattice([Fraction(2), Fraction(4), Fraction(3, 2)])) == "[[2,-1,0]]"
    assert str(relation_lattice([Fraction(-1)])) == "[[2]]"
    assert str(relation_lattice([Fraction(6), Fraction(2), Fraction(3)])) == "[[1,-1,-1]]"


def _value(u, v):
    out = Fraction(1)
    for x, k in zip(u, v):
        out *= x**k
    return out


rationals = st.sampled_from([Fraction(2), Fraction(3), Fraction(4), Fraction(6), Fraction(1, 2), Fraction(-2), Fraction(9, 4), Fraction(-1)])


@given(st.lists(rationals, min_size=1, max_size=4))
def test_rational_lattice_is_the_relation_lattice(g):
    lat = relation_lattice(g)
    assert all(_value(g, v) == 1 for v in lat.basis)
    for v in itertools.product(range(-2, 3), repeat=len(g)):
        assert (_value(g, v) == 1) == (v in lat)


@given(st.lists(st.builds(Z, st.integers(0, 11), st.integers(1, 12)), min_size=1, max_size=3))
def test_torsion_lattice_has_full_rank(g):
    lat = relation_lattice(g)
    assert lat.rank == len(g)
    assert not is_mult_independent(g)
    assert mult_basis(g) == []


@given(st.lists(rationals, min_size=1, max_size=4))
def test_basis_is_independent_and_spans(A):
    basis = mult_basis(A)
    assert is_mult_independent(basis)
    assert all(mcl_member(a, basis) for a in A)
