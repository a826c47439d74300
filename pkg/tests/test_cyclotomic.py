from __future__ import annotations

import cmath
from math import gcd, lcm

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from genchar.cyclotomic import (
    CycloNum,
    RootOfUnity,
    as_root_of_unity,
    cyclo_op,
    cyclo_reduce,
    cyclotomic_poly,
)
from genchar.errors import GencharError

Z = lambda a, m: RootOfUnity(a, m)  # noqa: E731
C = lambda a, m: CycloNum.from_root(RootOfUnity(a, m))  # noqa: E731

roots = st.builds(RootOfUnity, st.integers(0, 23), st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12]))
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
raws = st.lists(st.tuples(coeffs, roots), min_size=0, max_size=4)
cyclos = raws.map(cyclo_reduce)


def numeric(x: CycloNum) -> complex:
    return sum(float(c) * cmath.exp(2j * cmath.pi * j / x.conductor) for j, c in enumerate(x.coeffs))


def test_reduce_examples():
    assert cyclo_reduce([(1, Z(0, 1)), (1, Z(1, 3)), (1, Z(2, 3))]).is_zero()
    z6 = cyclo_reduce([(1, Z(1, 6))])
    assert z6.conductor == 3 and z6.coeffs == (1, 1)
    assert cyclo_reduce([(1, Z(k, 5)) for k in range(1, 5)]) == -1


def test_op_examples():
    assert cyclo_op(C(1, 3), C(2, 3), "×") == 1
    one_plus = CycloNum.rational(1) + C(1, 3)
    assert cyclo_op(one_plus, one_plus, "÷") == 1
    assert cyclo_op(C(1, 6), C(5, 6), "+") == 1
    with pytest.raises(GencharError):
        cyclo_op(one_plus, CycloNum.rational(0), "/")


def test_as_root_of_unity_examples():
    assert as_root_of_unity(CycloNum.rational(1) + C(1, 3)) == Z(1, 6)
    assert as_root_of_unity(CycloNum.rational(2)) is None
    assert as_root_of_unity(CycloNum.rational(0)) is None
    assert as_root_of_unity(CycloNum.rational(-1)) == Z(1, 2)


def test_cyclotomic_poly_examples():
    assert cyclotomic_poly(1).format(["x"]) == "x - 1"
    assert cyclotomic_poly(3).format(["x"]) == "x^2 + x + 1"
    assert cyclotomic_poly(6).format(["x"]) == "x^2 - x + 1"


@pytest.mark.parametrize("k", range(1, 106, 7))
def test_cyclotomic_poly_matches_sympy(k):
    x = sympy.Symbol("x")
    want = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(k, x)).all_coeffs())]
    got = cyclotomic_poly(k)
    dense = [0] * (max(e[0] for e in got.terms) + 1)
    for e, c in got.terms.items():
        dense[e[0]] = c
    assert dense == want


@given(cyclos, cyclos, cyclos)
def test_field_laws(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if not b.is_zero():
        assert (a / b) * b == a


@given(raws)
def test_canonical_form_matches_numeric_value(raw):
    a = cyclo_reduce(raw)
    direct = sum(float(c) * cmath.exp(2j * cmath.pi * r.num / r.den) for c, r in raw)
    assert abs(numeric(a) - direct) < 1e-9
    assert a.conductor % 4 != 2
    assert cyclo_reduce(reversed(raw)) == a
    assert (a - a).is_zero()


@given(cyclos, cyclos, st.integers(1, 200))
def test_galois_is_a_ring_map(a, b, u):
    L = lcm(a.conductor, b.conductor)
    if gcd(u, L) != 1:
        return
    assert (a + b).galois(u) == a.galois(u) + b.galois(u)
    assert (a * b).galois(u) == a.galois(u) * b.galois(u)


@given(roots)
def test_roots_round_trip(r):
    assert as_root_of_unity(CycloNum.from_root(r)) == r
    assert abs(numeric(CycloNum.from_root(r)) - cmath.exp(2j * cmath.pi * r.num / r.den)) < 1e-9
