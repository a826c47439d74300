from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from genchar.character import CharContext, chi, chi_preimage, chi_root, verify_character
from genchar.cyclotomic import CycloNum, RootOfUnity
from genchar.finite_field import FqElem, fq_embed

C7, C2 = CharContext(7), CharContext(2)


def test_chi_examples():
    assert chi(C7, FqElem.zero(7)) == 0
    assert chi(C7, FqElem.one(7)) == 1
    assert chi_root(C2, FqElem.gen(2, 2)) == RootOfUnity(1, 3)
    assert chi_root(C7, FqElem.from_int(7, 3)) == RootOfUnity(1, 6)
    assert chi_root(C7, FqElem.from_int(7, 2)) == RootOfUnity(1, 3)


def test_preimage_examples():
    assert chi_preimage(C7, RootOfUnity(1, 6)) == FqElem.from_int(7, 3)
    assert chi_preimage(C2, RootOfUnity(1, 2)) is None
    assert chi_preimage(C7, RootOfUnity(0, 1)) == FqElem.one(7)


def test_verify_character_examples():
    assert verify_character(C2, 4).passed
    assert verify_character(CharContext(3), 2).passed
    assert chi(C7, FqElem.from_int(7, 2)) * chi(C7, FqElem.from_int(7, 4)) == CycloNum.rational(1)


def test_minus_one_is_fixed_in_odd_characteristic():
    assert chi_root(C7, FqElem.from_int(7, -1)) == RootOfUnity(1, 2)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 3), st.integers(0, 10**6))
def test_preimage_inverts_chi(p, n, k):
    if p**n > 400:
        return
    ctx = CharContext(p)
    a = FqElem.from_log(p, n, k)
    r = chi_root(ctx, a)
    assert chi_preimage(ctx, r) == a
    assert chi_root(ctx, fq_embed(a, 2 * n)) == r if p ** (2 * n) <= 2**12 else True
    assert r.den % p != 0
