from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from genchar.character import CharContext
from genchar.cyclotomic import CycloNum, RootOfUnity
from genchar.mann import (
    STANDARD_VALUES,
    MannEquation,
    axiom_instance,
    d_bound,
    genericity_check,
    mann_solve,
)

Z = RootOfUnity


def test_d_bound_examples():
    assert d_bound(1) == 2
    assert d_bound(2) == 6
    assert d_bound(4) == 30
    with pytest.raises(ValueError):
        d_bound(0)


def test_mann_examples():
    assert mann_solve([1, 1]).as_set() == {(Z(1, 6), Z(5, 6)), (Z(5, 6), Z(1, 6))}
    assert mann_solve([3]).as_set() == set()
    assert mann_solve([2, -1]).as_set() == {(Z(0, 1), Z(0, 1))}


def test_equation_validation():
    with pytest.raises(ValueError):
        MannEquation((1, 0))
    with pytest.raises(ValueError):
        MannEquation(())


def test_d2_is_complete_up_to_order_60():
    for c in [(1, 1), (1, -1), (2, -1), (1, Fraction(1, 2)), (-1, -1)]:
        found = {tuple(Fraction(r.num, r.den) for r in s) for s in mann_solve(c)}
        assert found == O.mann_brute(c, 60)


def test_genericity_examples():
    assert genericity_check([Z(1, 12)]).generic
    res = genericity_check([Fraction(2)])
    assert not res.generic and res.witness == Fraction(2)
    assert genericity_check([CycloNum.rational(1) + CycloNum.from_root(Z(1, 3))]).generic


def test_axiom_examples():
    res = axiom_instance(CharContext(7), 2, [(1, 1)], 1)
    assert res.holds and res.solutions == 2
    vac = axiom_instance(CharContext(2), 2, [(1, 1)], 3)
    assert vac.holds and vac.solutions == 0
    one = axiom_instance(CharContext(5), 1, [(1,)], 2)
    assert one.holds and one.solutions == 1


@given(st.lists(st.sampled_from(STANDARD_VALUES), min_size=1, max_size=3))
def test_solutions_are_nondegenerate_and_bounded(c):
    sols = mann_solve(c)
    for s in sols:
        assert all(sols.bound_used % r.den == 0 for r in s)
        terms = [(q, Fraction(r.num, r.den)) for q, r in zip(c, s)] + [(Fraction(-1), Fraction(0))]
        assert O.vanishes(terms) and O.nondegenerate(terms)
