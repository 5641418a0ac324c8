"""Group orders, element orders, prime sets, certificates, closure BFS."""

import random

import pytest

from sympgen import gf
from sympgen.errors import BadParam
from sympgen.grouporder import (
    OVERFLOW,
    Certificate,
    PrimeSet,
    closure_bfs,
    element_order,
    lps_certificate,
    naive_element_order,
    order_sl,
    order_sp,
    varpi,
    varpi_group,
)
from sympgen.matrix import Mat

F2 = gf.standard_field(2)
F3 = gf.standard_field(3)


def test_order_sp_4_2():
    fi = order_sp(4, 2)
    assert fi.value() == 47_377_612_800
    assert fi.factors == {2: 16, 3: 5, 5: 2, 7: 1, 17: 1}


def test_order_sl_1():
    assert order_sl(1, 7).factors == {}


def test_prime_set_sp_12_2():
    assert list(varpi_group("sp", 6, 2)) == [2, 3, 5, 7, 11, 13, 17, 31]


def test_order_sl_divides_order_sp():
    for n, q in [(4, 2), (5, 3), (6, 4), (9, 2)]:
        assert order_sl(n, q).divides(order_sp(n, q))


def test_order_sl_small_value():
    assert order_sl(2, 3).value() == 24
    assert order_sl(3, 5).value() == 372_000


def test_element_order_of_unipotent():
    # Jordan block sizes 2 and 1 over F_2: minimal polynomial (t-1)^2, order 2
    m = Mat(F2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert element_order(m).value() == 2


def test_element_order_mixed():
    m = Mat(F3, [[1, 1], [0, 1]])
    assert element_order(m).value() == 3
    c = Mat(F3, [[0, -1], [1, -1]])  # order 3 semisimple (t^2+t+1 | t^3-1)
    assert element_order(c).value() == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_element_order_matches_naive(q):
    ctx = gf.standard_field(q)
    rng = random.Random(q)
    checked = 0
    for _ in range(60):
        m = Mat(ctx, [[rng.randrange(ctx.q) for _ in range(4)] for _ in range(4)])
        if m.det() == 0:
            continue
        o = element_order(m).value_unchecked()
        if o <= 10**4:
            assert naive_element_order(m) == o
            checked += 1
    assert checked > 10


def test_varpi_identity_empty():
    assert len(varpi(Mat.identity(F3, 3))) == 0


def test_closure_bfs_trivial():
    assert closure_bfs([Mat.identity(F3, 2)]) == 1


@pytest.mark.parametrize("q,expected", [(3, 24), (4, 60), (5, 120), (7, 336)])
def test_closure_bfs_sl2(q, expected):
    ctx = gf.standard_field(q)
    gens = [Mat(ctx, [[1, 1], [0, 1]]), Mat(ctx, [[1, 0], [1, 1]])]
    if ctx.f > 1:
        # transvections over the full field need a field generator too
        w = ctx.gen()
        gens += [Mat(ctx, [[1, w], [0, 1]]), Mat(ctx, [[1, 0], [w, 1]])]
    assert closure_bfs(gens) == order_sl(2, q).value()


def test_closure_bfs_overflow():
    ctx = gf.standard_field(5)
    gens = [Mat(ctx, [[1, 1], [0, 1]]), Mat(ctx, [[1, 0], [1, 1]])]
    assert closure_bfs(gens, cap=10) == OVERFLOW


def test_lps_certificate_ranges():
    with pytest.raises(BadParam):
        lps_certificate([], ("sl", 4, 3))
    with pytest.raises(BadParam):
        lps_certificate([], ("sl", 6, 2))
    with pytest.raises(BadParam):
        lps_certificate([], ("sp", 3, 3))


def test_lps_certificate_empty_inconclusive():
    assert lps_certificate([], ("sp", 4, 3)) == Certificate.Inconclusive


def test_prime_set_semantics():
    a = PrimeSet([3, 2, 2])
    b = PrimeSet([5])
    assert list(a.union(b)) == [2, 3, 5]
    assert a.issubset(a.union(b))
    assert a.to_json() == [2, 3]
