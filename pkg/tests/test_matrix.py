"""Exact linear algebra: elimination, charpoly cross-checks, invariants."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympgen import gf
from sympgen.errors import SingularMatrix
from sympgen.matrix import (
    Mat,
    char_poly,
    char_poly_berkowitz,
    eigenspace,
    in_span,
    paper_commutator,
    similarity_invariants,
)
from sympgen.poly import Poly, is_self_reciprocal

F2 = gf.standard_field(2)
F3 = gf.standard_field(3)
F5 = gf.standard_field(5)


def rand_mat(ctx, n, rng):
    return Mat(ctx, [[rng.randrange(ctx.q) for _ in range(n)] for _ in range(n)])


def test_identity_inverse():
    assert Mat.identity(F5, 4).inverse() == Mat.identity(F5, 4)


def test_mul_inverse_roundtrip():
    rng = random.Random(0)
    for q in [2, 3, 4, 5, 9]:
        ctx = gf.standard_field(q)
        for _ in range(10):
            m = rand_mat(ctx, 5, rng)
            if m.det() == 0:
                continue
            assert m * m.inverse() == Mat.identity(ctx, 5)


def test_singular_inverse_raises():
    with pytest.raises(SingularMatrix):
        Mat(F3, [[1, 2], [2, 1]]).inverse()  # det = 1-4 = 0 mod 3


def test_kernel_j_squared_plus_identity():
    # with n = 2: J^2 = -I, so J^2 + I = 0 and the kernel is everything
    J = Mat(F3, [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]])
    k = (J * J + Mat.identity(F3, 4)).kernel()
    assert len(k) == 4


def test_det_multiplicative():
    rng = random.Random(1)
    for _ in range(20):
        a, b = rand_mat(F5, 4, rng), rand_mat(F5, 4, rng)
        assert (a * b).det() == a.det() * b.det()


def test_rank_kernel_dimension():
    rng = random.Random(2)
    for _ in range(20):
        m = rand_mat(F3, 5, rng)
        assert m.rank() + len(m.kernel()) == 5
        for v in m.kernel():
            assert all(x == 0 for x in m.apply(v))


def test_char_poly_identity():
    assert char_poly(Mat.identity(F3, 3)) == Poly(F3, [-1, 1]) ** 3


def test_char_poly_companion():
    # companion matrix of t^3 + 2t + 1 over F_5
    c = Mat(F5, [[0, 0, -1], [1, 0, -2], [0, 1, 0]])
    assert char_poly(c) == Poly(F5, [1, 2, 0, 1])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_char_poly_cross_check(q):
    ctx = gf.standard_field(q)
    rng = random.Random(q)
    for n in [1, 2, 3, 5, 8, 12]:
        m = rand_mat(ctx, n, rng)
        assert char_poly(m) == char_poly_berkowitz(m)


def test_char_poly_det_and_trace_coeffs():
    rng = random.Random(3)
    for _ in range(10):
        m = rand_mat(F5, 4, rng)
        cp = char_poly(m)
        assert cp.degree == 4 and cp.is_monic()
        assert cp.coeffs[0] == m.det().val  # (-1)^n det, n even
        assert F5.neg(cp.coeffs[3]) == m.trace().val


def test_eigenspace_identity():
    assert len(eigenspace(Mat.identity(F5, 3), 1)) == 3


def test_eigenspace_in_extension():
    # rotation [[0,-1],[1,0]] over F_3 has eigenvalues +-i in F_9
    m = Mat(F3, [[0, -1], [1, 0]])
    F9 = gf.standard_field(9)
    e = gf.embed(F3, F9)
    i_val = next(v for v in F9.elements() if v * v == -1 + F9.elem(0))
    space = eigenspace(m, i_val, embedding=e)
    assert len(space) == 1


def test_similarity_invariants_identity():
    assert similarity_invariants(Mat.identity(F3, 2)) == [Poly(F3, [-1, 1])] * 2


def test_similarity_invariants_companion():
    c = Mat(F5, [[0, -1], [1, -1]])  # companion of t^2 + t + 1
    assert similarity_invariants(c) == [Poly(F5, [1, 1, 1])]


@pytest.mark.parametrize("q", [2, 3, 5, 9])
def test_similarity_invariants_product_is_charpoly(q):
    ctx = gf.standard_field(q)
    rng = random.Random(q + 100)
    for n in [2, 3, 5, 7]:
        m = rand_mat(ctx, n, rng)
        invs = similarity_invariants(m)
        prod = Poly.one(ctx)
        for p in invs:
            prod = prod * p
        assert prod == char_poly(m)
        # divisibility chain
        for a, b in zip(invs, invs[1:]):
            assert (b % a).is_zero()


def test_similarity_invariants_conjugation_invariant():
    rng = random.Random(7)
    m = rand_mat(F5, 5, rng)
    while True:
        g = rand_mat(F5, 5, rng)
        if g.det() != 0:
            break
    assert similarity_invariants(m) == similarity_invariants(g * m * g.inverse())


def test_paper_commutator_involution_case():
    # when x^2 = I the paper convention agrees with x^-1 y^-1 x y
    x = Mat(F5, [[0, 1], [1, 0]])
    rng = random.Random(11)
    while True:
        y = rand_mat(F5, 2, rng)
        if y.det() != 0:
            break
    assert paper_commutator(x, y) == x.inverse() * y.inverse() * x * y
    assert paper_commutator(Mat.identity(F5, 2), y) == Mat.identity(F5, 2)


def test_symplectic_charpoly_self_reciprocal():
    # random symplectic-ish check via J-conjugation: charpoly(M) vs M^-T
    rng = random.Random(13)
    n = 3
    J = Mat(F5, [[0] * n + [-1 if i == j else 0 for j in range(n)] for i in range(n)]
            + [[1 if i == j else 0 for j in range(n)] + [0] * n for i in range(n)])
    assert J.transpose() == -J
    # build symplectic matrices as products of symplectic transvections is
    # overkill here; instead verify the reciprocity property on the J itself
    assert is_self_reciprocal(char_poly(J))


def test_dump_format():
    m = Mat(F3, [[1, 2], [0, 1]])
    lines = m.dump().splitlines()
    assert lines[0] == "2 2 3^1/0,1"
    assert lines[1] == "1,2"


@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_charpoly_similarity_property(q, n, data):
    ctx = gf.standard_field(q)
    entries = data.draw(st.lists(st.integers(0, ctx.q - 1),
                                 min_size=2 * n * n, max_size=2 * n * n))
    m = Mat(ctx, [entries[i * n:(i + 1) * n] for i in range(n)])
    g = Mat(ctx, [entries[n * n + i * n:n * n + (i + 1) * n] for i in range(n)])
    if g.det() == 0:
        return
    assert char_poly(m) == char_poly(g * m * g.inverse())


def test_in_span():
    basis = [(1, 0, 2), (0, 1, 1)]
    assert in_span(basis, (1, 1, 0), F3)  # = b1 + b2 over F_3: (1,1,3)=(1,1,0)
    assert not in_span(basis, (0, 0, 1), F3)
