from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from genchar.cyclotomic import CycloNum, RootOfUnity
from genchar.lattice import ExponentLattice, contains, hnf, kernel_mod, lattice_index
from genchar.mpoly import MPoly

small = st.integers(-6, 6)


def test_hnf_examples():
    assert hnf([[2, 4], [1, 3]]) == ((1, 1), (0, 2))
    assert hnf([[1, 0], [0, 1]]) == ((1, 0), (0, 1))
    assert hnf([[0, 0], [0, 0]]) == ()


def test_kernel_mod_examples():
    assert kernel_mod([2, 1], 6) == ((1, 4), (0, 6))
    assert kernel_mod([0], 5) == ((1,),)
    assert kernel_mod([1], 1) == ((1,),)


def _span_contains(rows, v):
    return contains(hnf(rows), v)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_hnf_spans_the_same_lattice(rows):
    h = hnf(rows)
    assert all(_span_contains(rows, r) for r in h)
    assert all(contains(h, r) for r in rows)
    # echelon shape with positive pivots
    pivots = [next(i for i, x in enumerate(r) if x) for r in h]
    assert pivots == sorted(set(pivots))
    assert all(r[p] > 0 for r, p in zip(h, pivots))


@given(st.lists(st.integers(0, 11), min_size=1, max_size=3), st.integers(1, 12))
def test_kernel_mod_matches_the_box(a, m):
    basis = kernel_mod(a, m)
    assert all(sum(x * y for x, y in zip(v, a)) % m == 0 for v in basis)
    box = sum(1 for v in itertools.product(range(m), repeat=len(a)) if sum(x * y for x, y in zip(v, a)) % m == 0)
    assert lattice_index(basis) * box == m ** len(a)


def test_exponent_lattice_printing():
    lat = ExponentLattice.from_generators(2, [[1, 4], [0, 6]])
    assert str(lat) == "[[1,4],[0,6]]"
    assert lat.rank == 2 and (2, 8) in lat and (1, 0) not in lat
    assert str(ExponentLattice.from_generators(2, [])) == "[]"


def test_mpoly_eval_examples():
    x = MPoly.var(0, 1)
    z3 = CycloNum.from_root(RootOfUnity(1, 3))
    assert (x * x + x + 1).evaluate([z3]).is_zero()
    x1, x2 = MPoly.var(0, 2), MPoly.var(1, 2)
    assert (x1 * x2).evaluate([Fraction(2), Fraction(3)]) == 6
    z6, z65 = CycloNum.from_root(RootOfUnity(1, 6)), CycloNum.from_root(RootOfUnity(5, 6))
    assert (x1 + x2).evaluate([z6, z65]) == CycloNum.rational(1)
