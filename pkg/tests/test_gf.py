"""Field arithmetic: defining relations, orders, subfields, embeddings."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympgen import gf
from sympgen.errors import (
    CompositeCharacteristic,
    DivisionByZero,
    NoEmbedding,
    ReducibleModulus,
)

FIELDS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49]


def test_make_ext_field_f8():
    F8 = gf.make_ext_field(2, 3, (1, 1, 0, 1))
    assert (F8.p, F8.f, F8.q) == (2, 3, 8)


def test_make_ext_field_prime():
    F3 = gf.make_ext_field(3, 1, (0, 1))
    assert F3.q == 3 and F3.is_prime_field


def test_reducible_modulus_rejected():
    # t^3+t^2+t+1 = (t+1)(t^2+1) over F_2
    with pytest.raises(ReducibleModulus):
        gf.make_ext_field(2, 3, (1, 1, 1, 1))


def test_composite_characteristic_rejected():
    with pytest.raises(CompositeCharacteristic):
        gf.make_ext_field(4, 1, (0, 1))


def test_defining_relation_f8():
    F8 = gf.make_ext_field(2, 3, (1, 1, 0, 1))
    a = F8.gen()
    assert a**3 == a + 1
    assert a**7 == 1


def test_prime_field_inverse():
    F3 = gf.standard_field(3)
    assert F3.elem(2).inv() == 2


def test_division_by_zero():
    F5 = gf.standard_field(5)
    with pytest.raises(DivisionByZero):
        F5.elem(0).inv()


@pytest.mark.parametrize("q", FIELDS)
def test_unit_group_order(q):
    ctx = gf.standard_field(q)
    for b in ctx.units():
        assert b ** (q - 1) == 1
        order = gf.mult_order(b).value()
        assert (q - 1) % order == 0


@pytest.mark.parametrize("q", FIELDS)
def test_frobenius_additive_multiplicative(q):
    import random

    ctx = gf.standard_field(q)
    rng = random.Random(q)
    for _ in range(200):
        a = ctx.elem(rng.randrange(q))
        b = ctx.elem(rng.randrange(q))
        assert (a + b) ** ctx.p == a**ctx.p + b**ctx.p
        assert (a * b) ** ctx.p == a**ctx.p * b**ctx.p


def test_subfield_degree_zero():
    assert gf.subfield_degree(gf.standard_field(9).elem(0)) == 1


def test_subfield_degree_f9_generator():
    F9 = gf.standard_field(9)
    b = F9.gen()
    assert b**3 != b
    assert gf.subfield_degree(b) == 2


def test_subfield_degree_cube_in_f8():
    F8 = gf.standard_field(8, "table1")
    a = F8.gen()
    assert gf.subfield_degree(a**3) == 3


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_subfield_degree_frobenius_characterisation(q):
    import sympy

    ctx = gf.standard_field(q)
    for b in ctx.elements():
        d = gf.subfield_degree(b)
        assert ctx.pow(b.val, ctx.p**d) == b.val
        for e in sympy.divisors(d)[:-1]:
            assert ctx.pow(b.val, ctx.p**e) != b.val


def test_mult_order_one():
    assert gf.mult_order(gf.standard_field(7).elem(1)).value() == 1


def test_mult_order_primitive_f8():
    F8 = gf.standard_field(8)
    assert gf.mult_order(F8.mult_generator()).value() == 7


def test_minimal_field_gamma_primitive():
    # an element of order q+1 = 5 in F_16 generates F_16 over F_2
    F16 = gf.standard_field(16)
    gamma = F16.mult_generator() ** 3  # order (16-1)*... 15/gcd -> order 5
    assert gf.mult_order(gamma).value() == 5
    assert gf.subfield_degree(gamma) == 4


def test_campoN_bound_values():
    assert gf.campoN_bound(3, 3, 2) == 9
    assert gf.campoN_bound(2, 2, 2) == 4


def test_campoN_exact_count_q9_cubes():
    # count b in F_9^* whose cube generates a proper subfield
    F9 = gf.standard_field(9)
    count = sum(1 for b in F9.units() if gf.subfield_degree(b**3) < 2)
    assert count <= gf.campoN_bound(3, 3, 2)


def test_embed_f2_f4():
    F2, F4 = gf.standard_field(2), gf.standard_field(4)
    e = gf.embed(F2, F4)
    assert e(F2.elem(0)) == 0 and e(F2.elem(1)) == 1


def test_embed_f4_f16_root():
    F4, F16 = gf.standard_field(4), gf.standard_field(16)
    e = gf.embed(F4, F16)
    img = e(F4.gen())
    assert img**2 + img + 1 == 0


def test_embed_degree_mismatch():
    with pytest.raises(NoEmbedding):
        gf.embed(gf.standard_field(4), gf.standard_field(8))


@pytest.mark.parametrize("small,big", [(2, 4), (2, 16), (4, 16), (3, 9)])
def test_embed_is_homomorphism_exhaustive(small, big):
    s, b = gf.standard_field(small), gf.standard_field(big)
    e = gf.embed(s, b)
    images = {e(x).val for x in s.elements()}
    assert len(images) == small  # injective
    for x in s.elements():
        for y in s.elements():
            assert e(x + y) == e(x) + e(y)
            assert e(x * y) == e(x) * e(y)


def test_sigma_trace_identity_f64():
    # sigma of order q+1=9 over F_8: a = sigma + sigma^8 lands in the embedded
    # F_8 and satisfies a^3 + a = sigma^3 + sigma^-3
    F8 = gf.standard_field(8, "G7")
    F64 = gf.standard_field(64)
    e = gf.embed(F8, F64)
    g = F64.mult_generator()
    sigma = g**7  # order 63/7 = 9
    assert gf.mult_order(sigma).value() == 9
    a = sigma + sigma**8
    small_images = {e(x).val: x for x in F8.elements()}
    assert a.val in small_images
    assert a**3 + a == sigma**3 + sigma**-3


def test_field_spec_roundtrip():
    for q in FIELDS:
        ctx = gf.standard_field(q)
        assert gf.parse_field_spec(ctx.spec_string) == ctx


def test_bundled_moduli_irreducible():
    for (q, _tag), coeffs in gf.bundled_moduli().items():
        p, f = gf._split_prime_power(q)
        ctx = gf.make_ext_field(p, f, tuple(c % p for c in coeffs))
        assert ctx.q == q


@given(st.sampled_from(FIELDS), st.data())
@settings(max_examples=60, deadline=None)
def test_field_axioms_random(q, data):
    ctx = gf.standard_field(q)
    a = ctx.elem(data.draw(st.integers(0, q - 1)))
    b = ctx.elem(data.draw(st.integers(0, q - 1)))
    c = ctx.elem(data.draw(st.integers(0, q - 1)))
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + (-a) == 0
    if b != 0:
        assert (a / b) * b == a
