"""Exact arithmetic in F_p and F_{p^f}.

Elements are stored packed: the residue c0 + c1*w + ... + c_{f-1}*w^{f-1}
(w the modulus root) is the integer c0 + c1*p + ... + c_{f-1}*p^{f-1}.
A FieldCtx owns all arithmetic on packed values; FieldElem is a thin
operator-overloading wrapper used at API boundaries.

Extension fields precompute discrete-log (and, in odd characteristic,
addition) tables, which keeps the dense linear algebra downstream fast.
"""

from __future__ import annotations

import functools

import sympy

from .errors import (
    BadParam,
    CompositeCharacteristic,
    DivisionByZero,
    MixedFields,
    NoEmbedding,
    ReducibleModulus,
    ZeroElement,
)
from .factorint import FactoredInt, factor_q_pow_minus_one, multiplicative_order

_TABLE_LIMIT = 1 << 16


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, constant term first),
# used only for modulus validation and table construction
# ---------------------------------------------------------------------------

def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _pmod(res, mod, p)


def _pmod(a, mod, p):
    a = _ptrim(list(a))
    d = len(mod) - 1
    lead_inv = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= d:
        coef = (a[-1] * lead_inv) % p
        shift = len(a) - 1 - d
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _ptrim(a)
    return a


def _ppowmod(a, e, mod, p):
    result = [1]
    base = _pmod(a, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a = _pmod(a, b, p)
        a, b = b, a
    return a


def _is_irreducible_fp(mod, p):
    """Rabin test for a monic polynomial over F_p."""
    f = len(mod) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    t = [0, 1]
    for r in {f // d for d in sympy.primefactors(f)}:
        h = _ppowmod(t, p**r, mod, p)
        if len(_pgcd(mod, _psub(h, t, p), p)) > 1:
            return False
    h = _ppowmod(t, p**f, mod, p)
    return not _psub(h, t, p)


# ---------------------------------------------------------------------------
# FieldCtx
# ---------------------------------------------------------------------------

class FieldCtx:
    """The field F_{p^f} presented by a monic irreducible modulus over F_p."""

    def __init__(self, p: int, f: int, modulus):
        if p < 2 or not sympy.isprime(p):
            raise CompositeCharacteristic(f"characteristic {p} is not prime")
        if f < 1:
            raise BadParam("extension degree must be >= 1")
        if f == 1:
            modulus = (0, 1) if modulus is None else tuple(c % p for c in modulus)
        else:
            if modulus is None:
                raise BadParam("extension fields need an explicit modulus")
            modulus = tuple(c % p for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise BadParam("modulus must be monic of degree f")
        if f > 1 and not _is_irreducible_fp(list(modulus), p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus
        self.is_prime_field = f == 1
        self.zero = 0
        self.one = 1
        if not self.is_prime_field:
            self._build_tables()

    # -- representation ----------------------------------------------------

    def coeffs(self, a: int):
        """Packed value -> length-f coefficient tuple (constant term first)."""
        p = self.p
        return tuple((a // p**i) % p for i in range(self.f))

    def from_coeffs(self, coeffs) -> int:
        p = self.p
        if len(coeffs) > self.f:
            raise BadParam("too many coefficients")
        return sum((c % p) * p**i for i, c in enumerate(coeffs))

    def elem(self, v) -> "FieldElem":
        if isinstance(v, FieldElem):
            if v.ctx is not self:
                raise MixedFields("element from a different field")
            return v
        if isinstance(v, int):
            if self.is_prime_field:
                return FieldElem(self, v % self.p)
            if 0 <= v < self.q:
                return FieldElem(self, v)
            # negative / large integers are taken mod p into the prime field
            return FieldElem(self, v % self.p)
        raise BadParam(f"cannot coerce {v!r}")

    def scalar(self, v) -> int:
        """Coerce an int or FieldElem to a packed value."""
        return self.elem(v).val

    def gen(self) -> "FieldElem":
        """The residue of t (prime fields: 1)."""
        return FieldElem(self, self.p if self.f > 1 else 1)

    def elements(self):
        return (FieldElem(self, v) for v in range(self.q))

    def units(self):
        return (FieldElem(self, v) for v in range(1, self.q))

    # -- tables ------------------------------------------------------------

    def _raw_mul(self, a, b):
        mod, p = list(self.modulus), self.p
        prod = _pmulmod(list(self.coeffs(a)), list(self.coeffs(b)), mod, p)
        return self.from_coeffs(prod)

    def _raw_add(self, a, b):
        p = self.p
        return self.from_coeffs([(x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def _build_tables(self):
        q = self.q
        if q > _TABLE_LIMIT:
            self._exp = self._log = self._add_table = None
            return
        # discrete-log tables on the lexicographically least generator
        gen = None
        for cand in range(2, q):
            if self._order_bruteforce_ok(cand):
                gen = cand
                break
        assert gen is not None
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._raw_mul(cur, gen)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log
        self._mult_gen = gen
        if self.p == 2:
            self._add_table = None
        else:
            add_table = [0] * (q * q)
            for a in range(q):
                ca = self.coeffs(a)
                for b in range(a, q):
                    s = self.from_coeffs([(x + y) % self.p
                                          for x, y in zip(ca, self.coeffs(b))])
                    add_table[a * q + b] = s
                    add_table[b * q + a] = s
            self._add_table = add_table

    def _order_bruteforce_ok(self, a):
        """True iff a generates the multiplicative group (table-build helper)."""
        n = self.q - 1
        for prime in sympy.primefactors(n):
            if self._raw_pow(a, n // prime) == 1:
                return False
        return True

    def _raw_pow(self, a, e):
        result, base = 1, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    # -- arithmetic on packed values --------------------------------------

    def add(self, a, b):
        if self.is_prime_field:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        return self._raw_add(a, b)

    def neg(self, a):
        if self.is_prime_field:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_coeffs([(-c) % self.p for c in self.coeffs(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.is_prime_field:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._raw_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.is_prime_field:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.is_prime_field:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._raw_pow(a, e % (self.q - 1))

    def mult_generator(self) -> "FieldElem":
        """Lexicographically least multiplicative generator."""
        if not self.is_prime_field and self._exp is not None:
            return FieldElem(self, self._mult_gen)
        for v in range(2, self.q):
            if self._is_generator(v):
                return FieldElem(self, v)
        return FieldElem(self, 1)  # F_2

    def _is_generator(self, v):
        for prime in sympy.primefactors(self.q - 1):
            if self.pow(v, (self.q - 1) // prime) == 1:
                return False
        return True

    # -- text forms --------------------------------------------------------

    @property
    def spec_string(self) -> str:
        return f"{self.p}^{self.f}/" + ",".join(str(c) for c in self.modulus)

    def elem_string(self, a) -> str:
        if self.is_prime_field:
            return str(a)
        parts = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*w" if c != 1 else "w")
            else:
                parts.append(f"{c}*w^{i}" if c != 1 else f"w^{i}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"FieldCtx({self.spec_string})"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))


class FieldElem:
    """A field element: a FieldCtx plus a packed residue value."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val: int):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise MixedFields("operands from different fields")
            return other.val
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.val, self.ctx.inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(v, self.ctx.inv(self.val)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.val))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.val, e))

    def inv(self):
        return FieldElem(self.ctx, self.ctx.inv(self.val))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.val == other.val
        if isinstance(other, int):
            return self.val == self.ctx.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.val))

    def __bool__(self):
        return self.val != 0

    @property
    def coeffs(self):
        return self.ctx.coeffs(self.val)

    def __repr__(self):
        return self.ctx.elem_string(self.val)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def make_ext_field(p: int, f: int, modulus=None) -> FieldCtx:
    """Build F_{p^f}; the modulus is a coefficient list, constant term first."""
    return FieldCtx(p, f, modulus)


def parse_field_spec(spec: str) -> FieldCtx:
    """Parse "p^f/c0,c1,...,cf" (bare "p" means the prime field)."""
    if "/" not in spec:
        p = int(spec)
        return FieldCtx(p, 1, None)
    head, _, tail = spec.partition("/")
    p_str, _, f_str = head.partition("^")
    p, f = int(p_str), int(f_str or "1")
    modulus = tuple(int(c) for c in tail.split(","))
    return FieldCtx(p, f, modulus)


def subfield_degree(b: FieldElem) -> int:
    """Smallest d | f with b in F_{p^d}."""
    ctx = b.ctx
    for d in sorted(sympy.divisors(ctx.f)):
        if ctx.pow(b.val, ctx.p**d) == b.val:
            return d
    raise AssertionError("unreachable: b is always in F_{p^f}")


def mult_order(b: FieldElem) -> FactoredInt:
    """Exact multiplicative order as a FactoredInt."""
    if b.val == 0:
        raise ZeroElement("zero has no multiplicative order")
    ctx = b.ctx
    group = factor_q_pow_minus_one(ctx.p, ctx.f)
    return multiplicative_order(b.val, group, lambda n: ctx.pow(b.val, n))


def campoN_bound(s: int, p: int, f: int) -> int:
    """Upper bound s*p*(p^floor(f/2) - 1)/(p - 1) for subfield-collapse counts."""
    if f <= 1 or s < 2:
        raise BadParam("bound requires f > 1 and s >= 2")
    return s * p * (p ** (f // 2) - 1) // (p - 1)


class Embedding:
    """Field homomorphism F_{p^e} -> F_{p^f} (e | f), fixing F_p."""

    def __init__(self, small: FieldCtx, big: FieldCtx, root_val: int):
        self.small = small
        self.big = big
        self.root = root_val
        # image of w^i for each power of the small generator
        self._powers = [big.pow(root_val, i) for i in range(small.f)]

    def __call__(self, elem) -> FieldElem:
        if isinstance(elem, FieldElem):
            if elem.ctx != self.small:
                raise MixedFields("element not from the embedding's source field")
            val = elem.val
        else:
            val = self.small.scalar(elem)
        big = self.big
        acc = 0
        for c, img in zip(self.small.coeffs(val), self._powers):
            acc = big.add(acc, big.mul(c % big.p, img))
        return FieldElem(big, acc)

    def map_matrix(self, mat):
        from .matrix import Mat
        rows = [[self(FieldElem(self.small, v)).val for v in row] for row in mat.rows_raw()]
        return Mat(self.big, rows)


def embed(small: FieldCtx, big: FieldCtx) -> Embedding:
    """Deterministic embedding: first root of small.modulus in big (ascending packed order)."""
    if small.p != big.p or big.f % small.f != 0:
        raise NoEmbedding(f"no embedding {small!r} -> {big!r}")
    mod = small.modulus
    for v in range(big.q):
        acc = 0
        for i, c in enumerate(mod):
            acc = big.add(acc, big.mul(c % big.p, big.pow(v, i)))
        if acc == 0:
            return Embedding(small, big, v)
    raise NoEmbedding("modulus has no root in the target field")


# ---------------------------------------------------------------------------
# bundled moduli
# ---------------------------------------------------------------------------

# (q, tag) -> coefficient list of the minimal polynomial of a over F_p,
# constant term first (integer coefficients, reduced mod p on use).
# tag None is the default modulus for that q.
_MODULI: dict[tuple[int, str | None], tuple[int, ...]] = {
    # table of minimal polynomials used by the n=5/6/7/11 exceptional fields
    (8, "table1"): (1, 1, 0, 1),          # t^3+t+1
    (16, "table1"): (1, 0, 0, 1, 1),      # t^4+t^3+1
    (32, "table1"): (1, 0, 1, 0, 0, 1),   # t^5+t^2+1
    (64, "table1"): (1, 1, 0, 0, 0, 0, 1),  # t^6+t+1
    (9, "table1"): (-1, 1, 1),            # t^2+t-1
    # table of minimal polynomials used by the n=9 exceptional fields
    (16, "table2"): (1, 1, 0, 0, 1),      # t^4+t+1
    (32, "table2"): (1, 0, 0, 1, 0, 1),   # t^5+t^3+1
    (64, "table2"): (1, 1, 0, 0, 0, 0, 1),  # t^6+t+1
    (128, "table2"): (1, 0, 0, 1, 0, 0, 0, 1),  # t^7+t^3+1
}

# inline minimal polynomials, keyed by the lemma/section that names them
_MODULI.update({
    (4, "main5"): (1, 1, 1), (25, "main5"): (1, 1, 1),            # t^2+t+1
    (4, "main7"): (1, 1, 1), (8, "main7"): (1, 1, 0, 1),
    (16, "main7"): (1, 1, 0, 0, 1),                               # t^f+t+1
    (4, "main9"): (1, 1, 1), (8, "main9"): (1, 1, 0, 1),
    (4, "main11"): (1, 1, 1),
    (9, "main6"): (-1, -1, 1),                                    # t^2-t-1
    (25, "main6"): (-8, 1, 1), (49, "main6"): (-8, 1, 1),         # t^2+t-8
    (27, "main6"): (-1, -1, 0, 1),                                # t^3-t-1
    (9, "7ex"): (-1, -1, 1),                                      # t^2-t-1
    (9, "main8"): (-1, -1, 1), (25, "main8"): (1, 1, 1),
    (9, "M=H"): (-1, 1, 1),                                       # t^2+t-1
    (9, "9ex"): (-17, 0, 1), (25, "9ex"): (-17, 0, 1), (49, "9ex"): (-17, 0, 1),
    (27, "9ex"): (1, -1, 0, 1),                                   # t^3-t+1
    (9, "11ex"): (-1, 1, 1),                                      # t^2+t-1
    (25, "11ex"): (2, 0, 1), (49, "11ex"): (2, 0, 1),             # t^2+2
    (27, "11ex"): (1, -1, 0, 1),
    (9, "main10"): (2, 1, 1), (25, "main10"): (2, 1, 1),          # t^2+t+2
    (9, "main12"): (-2, 0, 1), (25, "main12"): (-2, 0, 1),        # t^2-2
    (9, "main14"): (-1, 1, 1), (25, "main14"): (2, 0, 1),
    (9, "pno213"): (-2, 0, 1), (25, "pno213"): (-2, 0, 1),
    (49, "pno213"): (3, -1, 1),                                   # t^2-t+3
    (27, "pno213"): (1, -1, 0, 1),
    (8, "G7"): (1, 1, 0, 1),                                      # t^3+t+1
})


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree f over F_p.

    "Least" compares the packed integer c0 + c1*p + ... of the non-leading
    coefficients, ascending.
    """
    if f == 1:
        return (0, 1)
    for packed in range(p**f):
        coeffs = [(packed // p**i) % p for i in range(f)] + [1]
        if coeffs[0] != 0 and _is_irreducible_fp(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("irreducible polynomial always exists")


def bundled_moduli():
    """All (q, tag) -> modulus entries, for the CLI `fields` listing."""
    return dict(sorted(_MODULI.items(), key=lambda kv: (kv[0][0], kv[0][1] or "")))


def modulus_for(q: int, tag: str | None = None) -> tuple[int, ...]:
    p, f = _split_prime_power(q)
    if tag is not None and (q, tag) in _MODULI:
        return tuple(c % p for c in _MODULI[(q, tag)])
    return default_modulus(p, f)


@functools.lru_cache(maxsize=None)
def standard_field(q: int, tag: str | None = None) -> FieldCtx:
    """F_q with the bundled modulus for (q, tag), or the default modulus."""
    p, f = _split_prime_power(q)
    return FieldCtx(p, f, modulus_for(q, tag))


@functools.lru_cache(maxsize=None)
def _split_prime_power(q: int) -> tuple[int, int]:
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise BadParam(f"{q} is not a prime power")
    ((p, f),) = factors.items()
    return p, f
