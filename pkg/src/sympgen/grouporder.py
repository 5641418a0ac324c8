"""Group orders, element orders, prime-divisor sets, and closure oracles.

|Sp_2n(q)| and |SL_n(q)| are kept factored; every q^d - 1 term is factored
through its cyclotomic decomposition so nothing large ever reaches the
integer-factoring backend.  Element orders come from the characteristic
polynomial: the semisimple part is the lcm of ord(t mod f) over the
irreducible factors f, the unipotent part is the p-power covering the
largest multiplicity; the result is verified by explicit powering.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import BadParam, ShapeMismatch, SingularMatrix
from .factorint import FactoredInt, factor_q_pow_minus_one, multiplicative_order
from .gf import _split_prime_power
from .matrix import Mat, char_poly
from .poly import Poly, factor


class PrimeSet:
    """A sorted set of primes with set semantics."""

    __slots__ = ("primes",)

    def __init__(self, primes=()):
        self.primes = tuple(sorted(set(primes)))

    @classmethod
    def of(cls, fi: FactoredInt) -> "PrimeSet":
        return cls(fi.primes())

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self.primes + other.primes)

    def issubset(self, other: "PrimeSet") -> bool:
        return set(self.primes) <= set(other.primes)

    def __eq__(self, other):
        return isinstance(other, PrimeSet) and self.primes == other.primes

    def __hash__(self):
        return hash(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __repr__(self):
        return "{" + ", ".join(str(p) for p in self.primes) + "}"

    def to_json(self):
        return list(self.primes)


def order_sp(n: int, q: int) -> FactoredInt:
    """|Sp_2n(q)| = q^{n^2} * prod_{i=1..n} (q^{2i} - 1), factored."""
    if n < 1 or q < 2:
        raise BadParam("need n >= 1 and a prime power q")
    p, f = _split_prime_power(q)
    result = FactoredInt({p: f * n * n})
    for i in range(1, n + 1):
        result = result * factor_q_pow_minus_one(p, f * 2 * i)
    return result


def order_sl(n: int, q: int) -> FactoredInt:
    """|SL_n(q)| = q^{n(n-1)/2} * prod_{i=2..n} (q^i - 1), factored."""
    if n < 1 or q < 2:
        raise BadParam("need n >= 1 and a prime power q")
    p, f = _split_prime_power(q)
    result = FactoredInt({p: f * n * (n - 1) // 2} if n > 1 else {})
    for i in range(2, n + 1):
        result = result * factor_q_pow_minus_one(p, f * i)
    return result


def _poly_t_order(f_poly: Poly) -> FactoredInt:
    """Multiplicative order of t modulo an irreducible polynomial != t."""
    F = f_poly.field
    d = f_poly.degree
    group = factor_q_pow_minus_one(F.p, F.f * d)
    t = Poly.t(F)
    one = Poly.one(F)

    def power(n):
        return t.powmod(n, f_poly) if n else one

    return multiplicative_order(None, group, power)


def element_order(g: Mat, verify: bool = True) -> FactoredInt:
    """Exact order of an invertible matrix via its characteristic polynomial."""
    F = g.field
    cp = char_poly(g)
    if cp.coeffs[0] == 0:
        raise SingularMatrix("zero determinant")
    order = FactoredInt.one()
    max_mult = 1
    for irr, mult in factor(cp):
        max_mult = max(max_mult, mult)
        if irr == Poly(F, [-1, 1]):  # t - 1 contributes only via multiplicity
            continue
        order = order.lcm(_poly_t_order(irr))
    # unipotent part: least p-power k with g^(N0 * p^k) = I; the bound from
    # charpoly multiplicities caps the search (minpoly may need less)
    semis = order.value_unchecked()
    if max_mult > 1:
        base = g ** semis
        k = 0
        while not base.is_identity():
            base = base ** F.p
            k += 1
        if k:
            order = order * FactoredInt({F.p: k})
    if verify:
        n_val = order.value_unchecked()
        ident = Mat.identity(F, g.rows)
        assert (g ** n_val).is_identity()
        for prime in order.primes():
            assert not (g ** (n_val // prime)) == ident
    return order


def naive_element_order(g: Mat, cap: int = 10**4):
    """Order by direct iteration; None if it exceeds cap."""
    ident = Mat.identity(g.field, g.rows)
    cur = g
    for k in range(1, cap + 1):
        if cur == ident:
            return k
        cur = cur * g
    return None


def varpi(g: Mat) -> PrimeSet:
    """Prime divisors of the order of g."""
    return PrimeSet.of(element_order(g))


def varpi_group(kind: str, n: int, q: int) -> PrimeSet:
    if kind == "sp":
        return PrimeSet.of(order_sp(n, q))
    if kind == "sl":
        return PrimeSet.of(order_sl(n, q))
    raise BadParam(f"unknown group kind {kind}")


class Certificate(Enum):
    Certified = "Certified"
    ExceptionPossible = "ExceptionPossible"
    Inconclusive = "Inconclusive"


def lps_certificate(witnesses, target, obstruction_inconsistent=None) -> Certificate:
    """Prime-set generation certificate.

    target is ("sp", n, q) or ("sl", n, q).  For Sp with n and q both even,
    the prime-set equality alone leaves the Omega^- exception open; pass
    obstruction_inconsistent=True (no invariant quadratic form exists) to
    upgrade to Certified.
    """
    kind, n, q = target
    if kind == "sl":
        if n < 5 or (n, q) == (6, 2):
            raise BadParam("prime-set certificate needs SL_n, n >= 5, (n,q) != (6,2)")
    elif kind == "sp":
        if n < 4:
            raise BadParam("prime-set certificate needs Sp_2n, n >= 4")
    else:
        raise BadParam(f"unknown group kind {kind}")
    goal = varpi_group(kind, n, q)
    got = PrimeSet()
    for w in witnesses:
        got = got.union(varpi(w))
    if not got.issubset(goal):
        raise ShapeMismatch("witness order has primes outside the target group")
    if set(got) != set(goal):
        return Certificate.Inconclusive
    if kind == "sp" and n % 2 == 0 and q % 2 == 0:
        if obstruction_inconsistent is True:
            return Certificate.Certified
        return Certificate.ExceptionPossible
    return Certificate.Certified


OVERFLOW = "Overflow"


def closure_bfs(gens, cap: int = 5 * 10**6):
    """Exact size of the generated matrix group, or OVERFLOW past cap."""
    if not gens:
        return 1
    shape = (gens[0].rows, gens[0].cols)
    for g in gens:
        if (g.rows, g.cols) != shape or g.rows != g.cols:
            raise ShapeMismatch("generators must be square and same shape")
    ident = Mat.identity(gens[0].field, gens[0].rows)
    seen = {ident.data}
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = m * g
                key = prod.data
                if key not in seen:
                    seen.add(key)
                    if len(seen) > cap:
                        return OVERFLOW
                    new.append(prod)
        frontier = new
    return len(seen)
