from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from genchar.finite_field import FqElem, all_elements, conway_coeffs, conway_poly, format_univariate, fq_dlog, fq_embed

FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (7, 1), (7, 2)]


def test_conway_examples():
    assert format_univariate(conway_poly(2, 1)) == "x + 1"
    assert format_univariate(conway_poly(2, 2)) == "x^2 + x + 1"
    assert format_univariate(conway_poly(7, 1)) == "x + 4"


@pytest.mark.parametrize("p,n", sorted(O.CONWAY))
def test_conway_matches_published_table(p, n):
    assert tuple(conway_coeffs(p, n)) == O.CONWAY[(p, n)]


def test_dlog_examples():
    g = FqElem.gen(2, 2)
    assert fq_dlog(g) == 1
    assert fq_dlog(g + FqElem.one(2)) == 2
    assert fq_dlog(FqElem.one(2)) == 0


def test_embed_examples():
    assert fq_embed(FqElem.one(2), 2) == FqElem.one(2)
    g4, g16 = FqElem.gen(2, 2), FqElem.gen(2, 4)
    img = fq_embed(g4, 4)
    assert img == g16**5
    assert img.coeffs == (0, 1, 1, 0)
    # C(2,2) vanishes at the image
    assert img * img + img + FqElem.one(2) == FqElem.zero(2)
    assert fq_embed(FqElem.zero(2), 4).is_zero()


def test_canonical_form_lives_in_the_minimal_subfield():
    x = fq_embed(FqElem.from_int(7, 3), 2)
    assert x.degree == 2 and x.canonical().degree == 1 and x == FqElem.from_int(7, 3)
    assert hash(x) == hash(FqElem.from_int(7, 3))


def test_formatting():
    assert FqElem(7, 2, [3, 1]).fq_str() == "fq(7,2,[3,1])"


field_elems = st.sampled_from(FIELDS).flatmap(lambda f: st.lists(st.integers(0, f[0] - 1), min_size=f[1], max_size=f[1]).map(lambda c: FqElem(f[0], f[1], c)))


@given(field_elems, st.data())
def test_field_laws(a, data):
    b = FqElem(a.p, a.degree, data.draw(st.lists(st.integers(0, a.p - 1), min_size=a.degree, max_size=a.degree)))
    assert a + b == b + a and a * b == b * a
    assert (a + b) - b == a
    if not a.is_zero():
        assert a * a.inverse() == FqElem.one(a.p)
        # logs are taken in the minimal subfield
        assert FqElem.from_log(a.p, a.canonical().degree, fq_dlog(a)) == a
    # Frobenius is additive and multiplicative
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()


@given(field_elems)
def test_embedding_is_a_homomorphism(a):
    n = 2 * a.degree
    if a.p**n > 2**12:
        return
    b = a.frobenius() + FqElem.one(a.p)
    assert fq_embed(a * b, n) == fq_embed(a, n) * fq_embed(b, n)
    assert fq_embed(a + b, n) == fq_embed(a, n) + fq_embed(b, n)
    if not a.is_zero():
        assert fq_embed(a, n).order() == a.order()


@pytest.mark.parametrize("p,n", FIELDS)
def test_element_orders_divide_the_group_order(p, n):
    elems = [x for x in all_elements(p, n) if not x.is_zero()]
    assert len(elems) == p**n - 1
    assert all((p**n - 1) % x.order() == 0 for x in elems)
    assert max(x.order() for x in elems) == p**n - 1
