"""Registry of named re-checks of the computational assertions.

Every claim is a named, parameterized computation with an expected outcome;
:func:`run_claim` executes one, :func:`run_all` executes a glob-filtered set
in parallel and emits a JSON-serializable report.  The module also houses the
admissible-parameter search (:func:`search_parameter`) and the quadratic-form
obstruction solver for even characteristic.
"""

from __future__ import annotations

import fnmatch
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as _dcfield
from functools import lru_cache

from .anchors import ANCHORS
from .errors import (BadParam, OddCharacteristic, UnknownClaim, UnknownLemma)
from .gf import (FieldCtx, FieldElem, campoN_bound, default_modulus, embed,
                 make_ext_field, mult_order, standard_field, subfield_degree)
from .matrix import (Mat, char_poly, eigenspace, in_span, paper_commutator,
                     same_span, similarity_invariants)
from .poly import Poly
from .grouporder import (Certificate, PrimeSet, element_order,
                         lps_certificate, varpi, varpi_group)
from .construct import (GeneratorPair, build, g3_displayed, hat_embed_bottom,
                        phat_base_change, restriction_matrix, small_r,
                        tau_of, theta_matrix, expected_a_matrices,
                        block_decomposition, _iv)


# ---------------------------------------------------------------------------
# word ASTs
# ---------------------------------------------------------------------------

def gen(name):
    return ("gen", name)


def mul(*ws):
    return ("mul",) + ws


def pw(w, k):
    return ("pow", w, k)


def cj(w, u):
    """w conjugated by u: u^-1 w u."""
    return ("conj", w, u)


def cm(w, u):
    return ("comm", w, u)


def inv(w):
    return ("inv", w)


X, Y, TAU = gen("x"), gen("y"), gen("tau")
XY = mul(X, Y)
COMM = cm(X, Y)


def eval_word(word, env):
    """Evaluate a word AST against an environment of named matrices."""
    op = word[0]
    if op == "gen":
        return env[word[1]]
    if op == "mul":
        acc = eval_word(word[1], env)
        for w in word[2:]:
            acc = acc * eval_word(w, env)
        return acc
    if op == "pow":
        return eval_word(word[1], env) ** word[2]
    if op == "conj":
        u = eval_word(word[2], env)
        return u.inverse() * eval_word(word[1], env) * u
    if op == "comm":
        return paper_commutator(eval_word(word[1], env), eval_word(word[2], env))
    if op == "inv":
        return eval_word(word[1], env).inverse()
    raise BadParam(f"unknown word node {op!r}")


# word shapes used by the generation witnesses
def word_xy_k_y(k):
    return mul(pw(XY, k), Y)


def word_comm_k_xy(k):
    return mul(pw(COMM, k), XY)


def word_commxy_k_xy(k):
    return mul(pw(mul(COMM, XY), k), XY)


def word_commxy_k_yx(k):
    return mul(pw(mul(COMM, XY), k), Y, X)


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _resolve_a(field: FieldCtx, aspec):
    if aspec is None:
        return field.elem(1)
    if isinstance(aspec, FieldElem):
        return aspec
    if isinstance(aspec, int):
        return field.elem(aspec % field.p)
    if aspec == "gen":
        return field.gen()
    if aspec == "primitive":
        return field.mult_generator()
    if isinstance(aspec, tuple) and aspec and aspec[0] == "minpoly":
        return root_of(field, aspec[1])
    raise BadParam(f"bad a-spec {aspec!r}")


def root_of(field: FieldCtx, coeffs):
    """Least root in the field of the integer-coefficient polynomial."""
    for b in field.elements():
        if _ipoly(field, b, coeffs) == 0:
            return b
    raise BadParam(f"no root of {coeffs} in {field!r}")


@lru_cache(maxsize=None)
def _pair(n, q, recipe="general", aspec=None, tag=None) -> GeneratorPair:
    field = standard_field(q, tag)
    a = _resolve_a(field, aspec)
    return build(recipe, n, q, a, field)


def _ipoly(field: FieldCtx, b, coeffs):
    """Evaluate an integer-coefficient polynomial at a field element."""
    bv = b.val if isinstance(b, FieldElem) else field.scalar(b)
    acc, powv = 0, 1
    for c in coeffs:
        acc = field.add(acc, field.mul(_iv(field, c), powv))
        powv = field.mul(powv, bv)
    return acc


def _poly_int(field: FieldCtx, coeffs) -> Poly:
    return Poly(field, [_iv(field, c) for c in coeffs])


def _expo(deg, exps):
    """Ascending 0/1 coefficient tuple from an exponent set (char-2 use)."""
    return tuple(1 if i in exps else 0 for i in range(deg + 1))


def s_restrict(g: Mat, space, ell: int) -> Mat:
    """Action of g on the last-ell coordinate subspace of V.

    If that subspace is g-invariant this is the plain restriction; otherwise
    g must fix the leading n-ell basis vectors of V pointwise, and the result
    is the induced action on the quotient of V by them.
    """
    n = space.n
    try:
        return restriction_matrix(g, space, list(range(n - ell + 1, n + 1)))
    except BadParam:
        pass
    gv = restriction_matrix(g, space, list(range(1, n + 1)))
    k = n - ell
    for j in range(k):
        col = gv.col_raw(j)
        if any(col[i] != (1 if i == j else 0) for i in range(n)):
            raise BadParam("leading basis vectors not fixed pointwise")
    rows = gv.rows_raw()
    return Mat(g.field, [[rows[i][j] for j in range(k, n)] for i in range(k, n)])


def v_restrict(g: Mat, space) -> Mat:
    return restriction_matrix(g, space, list(range(1, space.n + 1)))


def restrict_to_span(g: Mat, basis_cols) -> Mat:
    """Matrix of g on an arbitrary (independent) spanning set; BadParam if
    the span is not invariant."""
    field = g.field
    dim = len(basis_cols[0])
    B = Mat(field, [[col[i] for col in basis_cols] for i in range(dim)])
    cols = []
    for w in basis_cols:
        sol = B.solve(list(g.apply(tuple(w))))
        if sol is None:
            raise BadParam("span is not invariant")
        cols.append(sol)
    k = len(basis_cols)
    return Mat(field, [[cols[j][i] for j in range(k)] for i in range(k)])


def _vcombo(field, vectors_coeffs):
    """Linear combination of packed-value vectors: [(coeff, vec), ...]."""
    size = len(vectors_coeffs[0][1])
    out = [0] * size
    for c, w in vectors_coeffs:
        cv = c.val if isinstance(c, FieldElem) else field.scalar(c)
        for i in range(size):
            out[i] = field.add(out[i], field.mul(cv, w[i]))
    return tuple(out)


def _union_varpi(mats) -> PrimeSet:
    ps = PrimeSet()
    for m in mats:
        ps = ps.union(varpi(m))
    return ps


# ---------------------------------------------------------------------------
# quadratic-form obstruction solver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Obstruction:
    kind: str                      # "Inconsistent" | "FormFound"
    values: tuple = ()             # Q(e_i) packed values when a form exists

    def to_json(self):
        if self.kind == "FormFound":
            return {"kind": self.kind, "values": list(self.values)}
        return {"kind": self.kind}


def quadratic_form_obstruction(pair: GeneratorPair) -> Obstruction:
    """Solve for an invariant quadratic form with polar form J (q even).

    Unknowns are the 2n values Q(e_i); each generator image imposes
    Q(g e_j) = Q(e_j) with Q(sum c_i e_i) = sum c_i^2 Q(e_i) +
    sum_{i<i'} c_i c_i' J(e_i, e_i').
    """
    field = pair.field
    if field.p != 2:
        raise OddCharacteristic("the obstruction solver needs q even")
    n2 = 2 * pair.n
    J = pair.space.J
    rows = []
    for g in (pair.x, pair.y):
        for j in range(n2):
            c = g.col_raw(j)
            row = [field.mul(c[i], c[i]) for i in range(n2)]
            row[j] = field.sub(row[j], 1)
            rhs = 0
            for i in range(n2):
                if not c[i]:
                    continue
                for i2 in range(i + 1, n2):
                    if c[i2]:
                        rhs = field.add(rhs, field.mul(field.mul(c[i], c[i2]),
                                                       J[(i, i2)]))
            rows.append(row + [rhs])
    # Gaussian elimination over F_q
    nrows, ncols = len(rows), n2
    r = 0
    pivots = []
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        invp = field.inv(rows[r][col])
        rows[r] = [field.mul(invp, v) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [field.sub(rows[i][k], field.mul(f, rows[r][k]))
                           for k in range(ncols + 1)]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rows[i][ncols]:
            return Obstruction("Inconsistent")
    values = [0] * ncols
    for i, col in enumerate(pivots):
        values[col] = rows[i][ncols]
    return Obstruction("FormFound", tuple(values))


# ---------------------------------------------------------------------------
# admissible-parameter search
# ---------------------------------------------------------------------------

# Each condition set: characteristic requirement, excluded q values,
# non-vanishing polynomials (ascending integer coefficients, one per factor),
# and an optional subfield-generation requirement (expression coeffs, degree s).
# Parity-split lemmas carry separate "odd"/"even" branches.

_A3 = (0, 0, 0, 1)                # a^3
_A2 = (0, 0, 1)                   # a^2
_A1 = (0, 1)                      # a
_A4 = (0, 0, 0, 0, 1)             # a^4
_A6 = (0, 0, 0, 0, 0, 0, 1)       # a^6
_A3A = (0, 1, 0, 1)               # a^3 + a
_A4_2A3 = (0, 0, 0, 2, 1)         # a^3 (a + 2)

_G9_NZ = [(-1, 0, 0, 1),
          (512, 0, 0, -312, 0, 0, 92, 0, 0, -14, 0, 0, 1),
          (2, 0, 0, 1), (-27, 0, 0, 0, 0, 0, 1)]

CONDITIONS = {
    "M=H": {"char": "any", "nz": [(3, 0, 1), (4, 0, -1, 0, 1)],
            "sub": (_A2, 2)},
    "ex5": {"char": "any", "exclude_q": (2, 4, 25),
            "nz": [(-2, 0, 1), (3, 0, 1), (-27, 0, 0, 0, 0, 0, 4)],
            "sub": (_A6, 6)},
    "irr6": {"char": "any", "exclude_q": (2, 4),
             "nz": [(1, 0, 1), (5, 0, 5, 0, 1), (-5, 3, -5, 3, -1, 1),
                    (75, 0, 159, 0, 123, 0, 45, 0, 9, 0, 1),
                    (-4, 0, 1), (16, 0, -72, 0, 29, 0, -3, 0, 1),
                    (16, 80, -72, -48, 29, -5, -3, 3, 1, 1)],
             "sub": (_A2, 2)},
    "G72": {"char": "even",
            "nz": [(1, 1, 1), (1, 1, 0, 0, 1),
                   _expo(19, {0, 4, 5, 6, 7, 10, 12, 14, 15, 17, 19}),
                   (1, 1), (1, 1, 0, 1), (1, 0, 1, 1), (1, 1, 1, 1, 1),
                   _expo(13, {0, 2, 3, 6, 9, 11, 13})],
            "sub": (_A1, 1)},
    "K9": {"char": "odd",
           "nz": [(1, 0, 0, 1), (-8, 0, 0, 1), (-2, 0, 1), (2, -2, 1)],
           "sub": (_A3, 3)},
    "7ex": {"odd": {"extra": "K9", "nz": [(1, 1, 1)]},
            "even": {"extra": "G72", "nz": [(1, 0, 0, 1, 1)]}},
    "irr8": {"char": "any", "exclude_q": (2,),
             "nz": [(-108, 0, -128, 0, 5)]},
    "8podd": {"char": "odd", "exclude_q": (9,),
              "nz": [(-108, 0, -128, 0, 5), (1, 0, 0, 0, 4)],
              "sub": (_A4, 4)},
    "K9even": {"char": "even",
               "nz": [(1, 1), (1, 0, 1, 1),
                      (1, 1, 1), (1, 1, 1, 1, 1), (1, 0, 1, 0, 0, 1),
                      _expo(5, {0, 2, 3, 4, 5}),
                      _expo(12, {0, 2, 5, 7, 9, 10, 12}),
                      _expo(13, {0, 1, 3, 6, 8, 11, 13}),
                      _expo(13, {0, 1, 8, 10, 11, 12, 13}),
                      _expo(17, {0, 4, 5, 6, 8, 9, 10, 11, 13, 14, 15, 16, 17}),
                      _expo(33, {0, 2, 3, 4, 5, 6, 10, 11, 13, 14, 17, 21, 23,
                                 26, 28, 29, 30, 32, 33}),
                      (1, 1, 0, 0, 0, 0, 0, 1),
                      _expo(12, {0, 4, 5, 7, 8, 11, 12}),
                      _expo(13, {0, 1, 3, 4, 5, 6, 8, 12, 13}),
                      _expo(18, {0, 4, 6, 10, 11, 12, 14, 17, 18}),
                      (1, 1, 0, 1)],
               "sub": (_A3A, 3)},
    "K9odd": {"char": "odd",
              "nz": [(2, 1), (-2, 1), (4, 8, 7), (2, 0, 1), (-4, 0, 0, 1),
                     (-3, -1, 1), (1, 1, 1), (2, -1, 0, 1),
                     (12, -12, 9, -3, 1)],
              "sub": (_A4_2A3, 4)},
    "9ex": {"odd": {"extra": "K9odd", "nz": [(-1, 0, 1), (1, 0, 1, 1)]},
            "even": {"extra": "K9even", "nz": []}},
    "G9": {"char": "odd", "nz": _G9_NZ, "sub": (_A3, 3)},
    "G9-10": {"char": "odd",
              "nz": [(-1, 0, 0, 1), (2, 0, 0, 3), (-2, 0, -1, 1),
                     (4, 0, -2, -4, 1, 1, 1), (8, 0, 0, 1),
                     (-8, 0, 0, 0, 0, 0, 1)],
              "sub": (_A3, 3)},
    "G9-12": {"char": "odd",
              "nz": [(-1, 0, 0, 1), (1, 1), (-1, 0, 0, 2),
                     (8, 0, 0, 4, 0, 0, 1), (2, -1, 0, 1),
                     (1, -1, 1, 1, 1, 0, 1)],
              "sub": (_A3, 3)},
    "G9-14": {"char": "odd",
              "nz": [(-1, 0, 0, 1), (1, 0, 0, 3), (8, 0, 0, 1),
                     (-2, 0, -1, 1), (4, 0, -2, -4, 1, 1, 1),
                     (-2, 0, 0, 5), (-8, 0, 0, 0, 0, 0, 1)],
              "sub": (_A3, 3)},
    "G11": {"char": "even",
            "nz": [(1, 1), (1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 0, 1),
                   _expo(8, {0, 4, 5, 7, 8}),
                   (1, 1, 1, 1, 1), (1, 0, 0, 1, 0, 1),
                   _expo(33, {0, 1, 2, 4, 8, 9, 10, 14, 15, 16, 19, 20, 26,
                              28, 30, 32, 33})],
            "sub": (_A1, 1)},
    "Gn11": {"char": "odd",
             "nz": [(2, 1), (2, 3), (4, 0, 3),
                    (1, 1), (2, 2, 1), (-1, 6, 2), (1, 0, 6),
                    (4, 1),
                    (-256, -1792, 4480, 4736, -14432, -27096, 16224, 93948,
                     -118296, -96779, 246067, -73173, -194153, 160134, 54118,
                     -30924, 42868, 541, -1295, 1710)],
             "sub": (_A4_2A3, 4)},
    "11ex": {"odd": {"extra": "Gn11", "nz": [(2, -1, 2)]},
             "even": {"extra": "G11", "nz": []}},
    "WSL6": {"char": "odd",
             "nz": _G9_NZ + [(1, 0, 0, 1), (729, 0, 0, 135, 0, 0, -1, 0, 0, 1),
                             (27, 0, 0, 1)],
             "sub": (_A3, 3)},
    "sigma-a": {"char": "even", "special": "sigma"},
}


def _sigma_of(field: FieldCtx, a: FieldElem):
    """Root of t^2 + a t + 1 of order q+1 in F_{q^2}, or None."""
    q = field.q
    big = make_ext_field(field.p, 2 * field.f,
                         default_modulus(field.p, 2 * field.f))
    em = embed(field, big)
    av = em(a).val
    for v in range(big.q):
        if big.add(big.add(big.mul(v, v), big.mul(av, v)), 1) == 0:
            if mult_order(FieldElem(big, v)).value() == q + 1:
                return FieldElem(big, v)
            return None
    return None


def _branch_conditions(lemma_id: str, p: int):
    cond = CONDITIONS.get(lemma_id)
    if cond is None:
        raise UnknownLemma(f"no condition set registered for {lemma_id!r}")
    if "odd" in cond:  # parity-split lemma
        branch = cond["odd"] if p > 2 else cond["even"]
        base = CONDITIONS[branch["extra"]]
        merged = dict(base)
        merged = {"char": base.get("char", "any"),
                  "exclude_q": base.get("exclude_q", ()),
                  "nz": list(base.get("nz", [])) + list(branch["nz"]),
                  "sub": base.get("sub")}
        return merged
    return {"char": cond.get("char", "any"),
            "exclude_q": cond.get("exclude_q", ()),
            "nz": cond.get("nz", []),
            "sub": cond.get("sub"),
            "special": cond.get("special")}


def _admissible(field: FieldCtx, a: FieldElem, cond) -> bool:
    if cond.get("special") == "sigma":
        return _sigma_of(field, a) is not None
    for coeffs in cond["nz"]:
        if _ipoly(field, a, coeffs) == 0:
            return False
    sub = cond.get("sub")
    if sub is not None:
        expr = FieldElem(field, _ipoly(field, a, sub[0]))
        if expr.val == 0 or subfield_degree(expr) != field.f:
            return False
    return True


def search_parameter(lemma_id: str, q: int, field: FieldCtx | None = None):
    """All admissible a in F_q^* for the lemma's conditions, enumerated as
    consecutive powers of the least multiplicative generator."""
    if field is None:
        field = standard_field(q)
    cond = _branch_conditions(lemma_id, field.p)
    if cond["char"] == "odd" and field.p == 2:
        return []
    if cond["char"] == "even" and (field.p != 2 or q == 2):
        return []
    if q in cond.get("exclude_q", ()):
        return []
    g = field.mult_generator()
    out = []
    cur = g
    for _ in range(q - 1):
        if _admissible(field, cur, cond):
            out.append(cur)
        cur = cur * g
    return out


def min_poly_coeffs(b: FieldElem):
    """Minimal polynomial of b over the prime field, ascending coefficients."""
    ctx = b.ctx
    d = subfield_degree(b)
    poly = Poly(ctx, [1])
    c = b
    for _ in range(d):
        poly = poly * Poly(ctx, [ctx.neg(c.val), 1])
        c = c ** ctx.p
    coeffs = []
    for v in (list(poly.coeffs) + [0] * (d + 1))[: d + 1]:
        if v >= ctx.p and ctx.f > 1:
            raise BadParam("minimal polynomial not over the prime field")
        coeffs.append(v % ctx.p)
    return tuple(coeffs)


# (lemma, q) -> a-specification the source text names, to be reproduced by
# search_parameter.  "gen" means the generator of the tagged standard field,
# i.e. the root of the bundled minimal polynomial; ints are prime-field values.
NAMED_A = {
    ("M=H", 3): 1, ("M=H", 5): 1, ("M=H", 7): 1, ("M=H", 11): 1,
    ("M=H", 13): 1, ("M=H", 4): "primitive", ("M=H", 8): "primitive",
    ("M=H", 9): ("M=H", "gen"),
    ("ex5", 3): 1, ("ex5", 5): 1, ("ex5", 7): 1, ("ex5", 11): 1,
    ("ex5", 13): 1, ("ex5", 23): 2,
    ("ex5", 8): ("table1", "gen"), ("ex5", 16): ("table1", "gen"),
    ("ex5", 32): ("table1", "gen"), ("ex5", 64): ("table1", "gen"),
    ("ex5", 9): ("table1", "gen"),
    ("irr6", 5): 1, ("irr6", 7): 1, ("irr6", 11): 3, ("irr6", 13): 3,
    ("irr6", 17): 3, ("irr6", 19): 3, ("irr6", 23): 3, ("irr6", 29): 3,
    ("irr6", 31): 3, ("irr6", 37): 3, ("irr6", 41): 3,
    ("irr6", 8): ("table1", "gen"), ("irr6", 16): ("table1", "gen"),
    ("irr6", 32): ("table1", "gen"), ("irr6", 64): ("table1", "gen"),
    ("irr6", 25): ("main6", "gen"),
    ("irr6", 49): ("main6", "gen"), ("irr6", 27): ("main6", "gen"),
    ("7ex", 32): ("table1", "gen"), ("7ex", 64): ("table1", "gen"),
    ("7ex", 5): 1, ("7ex", 11): 1, ("7ex", 13): 1, ("7ex", 9): ("7ex", "gen"),
    ("irr8", 4): "primitive", ("irr8", 8): "primitive",
    ("8podd", 7): 2, ("8podd", 25): ("main8", "gen"),
    ("K9even", 16): ("table2", "gen"), ("K9even", 32): ("table2", "gen"),
    ("K9even", 64): ("table2", "gen"), ("K9even", 128): ("table2", "gen"),
    ("9ex", 11): 4, ("9ex", 13): 4, ("9ex", 17): 4, ("9ex", 19): 4,
    ("9ex", 23): 4, ("9ex", 9): ("9ex", "gen"), ("9ex", 25): ("9ex", "gen"),
    ("9ex", 49): ("9ex", "gen"), ("9ex", 27): ("9ex", "gen"),
    ("G11", 8): ("table1", "gen"), ("G11", 16): ("table1", "gen"),
    ("G11", 32): ("table1", "gen"), ("G11", 64): ("table1", "gen"),
    ("11ex", 11): 1, ("11ex", 13): 1, ("11ex", 17): 1, ("11ex", 19): 1,
    ("11ex", 23): 1, ("11ex", 29): 1, ("11ex", 7): 2,
    ("11ex", 9): ("11ex", "gen"), ("11ex", 25): ("11ex", "gen"),
    ("11ex", 49): ("11ex", "gen"), ("11ex", 27): ("11ex", "gen"),
    ("G9", 3): -1, ("G9", 5): -1,
    ("G9-10", 3): -1, ("G9-10", 5): -1, ("G9-10", 11): -1, ("G9-10", 13): -1,
    ("G9-10", 17): -1, ("G9-10", 19): -1, ("G9-10", 23): -1,
    ("G9-10", 9): ("main10", "gen"), ("G9-10", 25): ("main10", "gen"),
    ("G9-12", 7): -2, ("G9-12", 11): 4, ("G9-12", 13): 4, ("G9-12", 17): 4,
    ("G9-12", 19): 4, ("G9-12", 23): 4,
    ("G9-12", 9): ("main12", "gen"), ("G9-12", 25): ("main12", "gen"),
    ("G9-14", 3): -1, ("G9-14", 5): -1, ("G9-14", 11): -1, ("G9-14", 13): -1,
    ("G9-14", 17): -1, ("G9-14", 19): -1, ("G9-14", 23): -1,
    ("G9-14", 9): ("main14", "gen"), ("G9-14", 25): ("main14", "gen"),
    ("WSL6", 11): -2, ("WSL6", 13): -2, ("WSL6", 17): 4, ("WSL6", 19): 4,
    ("WSL6", 23): 4, ("WSL6", 29): 4, ("WSL6", 31): 4, ("WSL6", 37): 4,
    ("WSL6", 9): ("pno213", "gen"), ("WSL6", 25): ("pno213", "gen"),
    ("WSL6", 49): ("pno213", "gen"), ("WSL6", 27): ("pno213", "gen"),
    ("sigma-a", 8): ("G7", "gen"),
}


def named_a_value(lemma_id: str, q: int) -> FieldElem:
    """The a named by the source for (lemma, q), as an element of the
    default standard field for q."""
    spec = NAMED_A[(lemma_id, q)]
    field = standard_field(q)
    if isinstance(spec, int):
        return field.elem(spec % field.p)
    if spec == "primitive":
        return field.mult_generator()
    tag, _ = spec
    tagged = standard_field(q, tag)
    target = min_poly_coeffs(tagged.gen())
    for b in field.units():
        if min_poly_coeffs(b) == target:
            return b
    raise BadParam(f"no root of the named minimal polynomial for {lemma_id}, q={q}")


def named_a_reproduced(lemma_id: str, q: int) -> bool:
    want = named_a_value(lemma_id, q)
    return any(b == want for b in search_parameter(lemma_id, q))


def subfield_failure_count(lemma_id: str, q: int) -> int | None:
    """Number of a in F_q^* failing the lemma's minimal-field condition,
    or None when the lemma has no such condition."""
    field = standard_field(q)
    cond = _branch_conditions(lemma_id, field.p)
    sub = cond.get("sub")
    if sub is None:
        return None
    count = 0
    for b in field.units():
        expr = FieldElem(field, _ipoly(field, b, sub[0]))
        if expr.val == 0 or subfield_degree(expr) != field.f:
            count += 1
    return count


# ---------------------------------------------------------------------------
# claim registry machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    fn: object
    params: dict = _dcfield(default_factory=dict)

    @property
    def paper_ref(self):
        return {"label": self.anchor, "quote": ANCHORS[self.anchor]}


@dataclass(frozen=True)
class ClaimResult:
    id: str
    status: str                    # Pass | Fail | OpenQuestionResolved
    expected: object
    computed: object
    wall_time: float
    paper_ref: dict
    detail: str = ""

    def to_json(self, stable=False):
        out = {"id": self.id, "status": self.status,
               "expected": self.expected, "computed": self.computed,
               "wall_time_ms": 0 if stable else round(self.wall_time * 1000, 3),
               "paper_ref": self.paper_ref}
        if self.detail:
            out["detail"] = self.detail
        return out


_REGISTRY: dict[str, Claim] = {}


def claim(cid: str, anchor: str, **params):
    if anchor not in ANCHORS:
        raise BadParam(f"unknown anchor {anchor!r}")

    def deco(fn):
        if cid in _REGISTRY:
            raise BadParam(f"duplicate claim id {cid!r}")
        _REGISTRY[cid] = Claim(cid, anchor, fn, params)
        return fn
    return deco


def _canon(v):
    if isinstance(v, PrimeSet):
        return v.to_json()
    if isinstance(v, Poly):
        return v.text
    if isinstance(v, Mat):
        return v.dump()
    if isinstance(v, FieldElem):
        return v.ctx.elem_string(v.val)
    if isinstance(v, Obstruction):
        return v.to_json()
    if isinstance(v, Certificate):
        return v.value
    if isinstance(v, dict):
        return {str(k): _canon(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_canon(x) for x in v]
    return v


def run_claim(cid: str) -> ClaimResult:
    cl = _REGISTRY.get(cid)
    if cl is None:
        raise UnknownClaim(f"no claim registered with id {cid!r}")
    start = time.perf_counter()
    try:
        out = cl.fn()
        expected = _canon(out["expected"])
        computed = _canon(out["computed"])
        if out.get("resolved"):
            status = ("OpenQuestionResolved" if expected == computed else "Fail")
            detail = out.get("detail", "")
        else:
            status = "Pass" if expected == computed else "Fail"
            detail = out.get("detail", "") if status != "Pass" else ""
    except Exception as exc:      # a crashed check is a failed check
        expected, computed = "no error", f"{type(exc).__name__}: {exc}"
        status, detail = "Fail", "claim raised"
    return ClaimResult(cid, status, expected, computed,
                       time.perf_counter() - start, cl.paper_ref, detail)


def claim_ids():
    return sorted(_REGISTRY)


def run_all(filter: str = "*", threads: int | None = None):
    ids = sorted(i for i in _REGISTRY if fnmatch.fnmatch(i, filter))
    if threads is None:
        threads = int(os.environ.get("SYMPGEN_THREADS", "0")) or (os.cpu_count() or 1)
    threads = max(1, min(threads, len(ids) or 1))
    if threads == 1:
        results = [run_claim(i) for i in ids]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_claim, ids))
    return results


def report_json(results, stable=True) -> str:
    payload = [r.to_json(stable=stable) for r in results]
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# generation-witness table (shared with the CLI `certify` subcommand)
# ---------------------------------------------------------------------------

# (n, q) -> (recipe, aspec, tag, L, word builder)
DEFAULT_WORDS = {
    (6, 2): ("general", 1, None, [1, 3, 4, 7, 11], word_comm_k_xy),
    (7, 2): ("general", 1, None, [1, 2, 3, 7, 8, 13, 14], word_commxy_k_xy),
    (8, 2): ("general", 1, None, [1, 14, 15, 18, 23, 25, 28], word_xy_k_y),
    (9, 2): ("general", 1, None, [6, 7, 8, 11, 13, 16, 19, 20, 31], word_xy_k_y),
    (11, 2): ("general", 1, None, [1, 3, 4, 5, 8, 9, 13, 15, 16, 22, 29, 33],
              word_xy_k_y),
    (6, 4): ("general", "gen", None, [2, 3, 5, 6, 15, 37], word_xy_k_y),
    (4, 3): ("general", 1, None, None, None),
    (5, 4): ("n5", "gen", "main5", [4, 7, 10, 12, 21], word_xy_k_y),
    (5, 25): ("n5", "gen", "main5", [1, 6, 11, 12, 13, 14], word_xy_k_y),
    (6, 3): ("n6alt", 1, None, [3, 4, 11, 13, 19], word_xy_k_y),
    (6, 9): ("n6alt", "gen", "main6", [1, 3, 7, 9, 11, 12, 26], word_xy_k_y),
    (7, 3): ("general", 1, None, [1, 3, 7, 9, 10, 19, 39], word_xy_k_y),
    (7, 4): ("general", "gen", "main7", [1, 7, 10, 13, 16, 20, 43], word_xy_k_y),
    (7, 7): ("general", 1, None, [1, 4, 5, 8, 12, 13, 27, 47], word_xy_k_y),
    (7, 8): ("general", "gen", "main7", [1, 3, 5, 10, 14, 15, 18], word_xy_k_y),
    (7, 16): ("general", "gen", "main7", [3, 4, 11, 13, 19, 24, 27], word_xy_k_y),
    (8, 3): ("n8alt", 1, None, [3, 4, 7, 9, 10, 11, 24, 27], word_xy_k_y),
    (8, 5): ("n8alt", 1, None, [3, 9, 10, 13, 14, 15, 34], word_xy_k_y),
    (8, 9): ("n8alt", "gen", "main8", [4, 6, 7, 8, 11, 15, 20, 54], word_xy_k_y),
    (9, 3): ("general", 1, None, [3, 4, 6, 7, 11, 14, 23, 37, 38],
             word_commxy_k_yx),
    (9, 4): ("general", "gen", "main9", [1, 3, 4, 5, 7, 9, 14, 24, 53, 89],
             word_xy_k_y),
    (9, 5): ("general", 1, None, [5, 6, 7, 8, 9, 10, 11, 18, 126], word_xy_k_y),
    (9, 7): ("general", 1, None, [3, 6, 7, 8, 16, 17, 20, 41, 126], word_xy_k_y),
    (9, 8): ("general", "gen", "main9", [3, 10, 13, 15, 18, 19, 25, 31, 53],
             word_xy_k_y),
    (10, 7): ("general", 1, None, [1, 3, 5, 6, 9, 12, 22, 31, 65], word_xy_k_y),
    (11, 3): ("general", 1, None, [1, 4, 6, 8, 10, 11, 12, 16, 20, 28, 35],
              word_xy_k_y),
    (11, 4): ("general", "gen", "main11",
              [3, 5, 7, 8, 9, 12, 13, 15, 16, 18, 64], word_xy_k_y),
    (11, 5): ("general", 1, None, [1, 3, 9, 14, 15, 16, 18, 20, 31, 46, 88],
              word_xy_k_y),
    (12, 3): ("general", 1, None,
              [4, 5, 13, 16, 17, 24, 28, 35, 37, 87, 89], word_xy_k_y),
    (12, 5): ("general", 1, None,
              [3, 5, 6, 8, 12, 13, 14, 15, 18, 25, 34, 47], word_xy_k_y),
    (14, 7): ("general", 1, None,
              [3, 5, 6, 7, 8, 10, 14, 17, 19, 20, 29, 32, 56], word_xy_k_y),
}


def _lset_outcome(n, q, recipe, aspec, tag, L, word_fn):
    pair = _pair(n, q, recipe, aspec, tag)
    env = {"x": pair.x, "y": pair.y}
    got = _union_varpi(eval_word(word_fn(k), env) for k in L)
    return {"expected": varpi_group("sp", n, q), "computed": got}


def certify_pair(n: int, q: int, aspec=None) -> Certificate:
    """Run the default generation certificate for (n, q)."""
    key = (n, q)
    if key not in DEFAULT_WORDS or DEFAULT_WORDS[key][3] is None:
        raise UnknownLemma(f"no default witness words for n={n}, q={q}")
    recipe, default_a, tag, L, word_fn = DEFAULT_WORDS[key]
    pair = _pair(n, q, recipe, aspec if aspec is not None else default_a, tag)
    env = {"x": pair.x, "y": pair.y}
    witnesses = [eval_word(word_fn(k), env) for k in L]
    obstruction = None
    if q % 2 == 0 and n % 2 == 0:
        obstruction = quadratic_form_obstruction(pair).kind == "Inconsistent"
    return lps_certificate(witnesses, ("sp", n, q),
                           obstruction_inconsistent=obstruction)


# ---------------------------------------------------------------------------
# claims: prime-set unions over the full symplectic groups
# ---------------------------------------------------------------------------

def _register_lset(cid, anchor, n, q):
    recipe, aspec, tag, L, word_fn = DEFAULT_WORDS[(n, q)]

    @claim(cid, anchor, n=n, q=q)
    def _c(n=n, q=q, recipe=recipe, aspec=aspec, tag=tag, L=L, word_fn=word_fn):
        return _lset_outcome(n, q, recipe, aspec, tag, L, word_fn)


@claim("prop-q2-n6", "q=2-L67", n=6, q=2)
def _prop_q2_n6():
    out = _lset_outcome(6, 2, "general", 1, None, [1, 3, 4, 7, 11],
                        word_comm_k_xy)
    obstruction = quadratic_form_obstruction(_pair(6, 2, "general", 1))
    out["expected"] = [out["expected"], "Inconsistent"]
    out["computed"] = [out["computed"], obstruction.kind]
    return out


@claim("prop-q2-n8", "q=2-L8", n=8, q=2)
def _prop_q2_n8():
    out = _lset_outcome(8, 2, "general", 1, None, [1, 14, 15, 18, 23, 25, 28],
                        word_xy_k_y)
    obstruction = quadratic_form_obstruction(_pair(8, 2, "general", 1))
    out["expected"] = [out["expected"], "Inconsistent"]
    out["computed"] = [out["computed"], obstruction.kind]
    return out


_register_lset("prop-q2-n7", "q=2-L67", 7, 2)
_register_lset("prop-q2-n9", "q=2-L9", 9, 2)
_register_lset("prop-q2-n11", "q=2-L11", 11, 2)
_register_lset("lemma-q4", "q4-L", 6, 4)
_register_lset("main5-q4", "main5", 5, 4)
_register_lset("main5-q25", "main5", 5, 25)
_register_lset("main6-q3", "main6", 6, 3)
_register_lset("main6-q9", "main6", 6, 9)
_register_lset("main7-q3", "main7", 7, 3)
_register_lset("main7-q4", "main7", 7, 4)
_register_lset("main7-q7", "main7", 7, 7)
_register_lset("main7-q8", "main7", 7, 8)
_register_lset("main7-q16", "main7", 7, 16)
_register_lset("main8-q3", "main8", 8, 3)
_register_lset("main8-q5", "main8", 8, 5)
_register_lset("main8-q9", "main8", 8, 9)
_register_lset("main9-q3", "main9", 9, 3)
_register_lset("main9-q4", "main9", 9, 4)
_register_lset("main9-q5", "main9", 9, 5)
_register_lset("main9-q7", "main9", 9, 7)
_register_lset("main9-q8", "main9", 9, 8)
_register_lset("main10-q7", "main10-q7", 10, 7)
_register_lset("main11-q3", "main11", 11, 3)
_register_lset("main11-q4", "main11", 11, 4)
_register_lset("main11-q5", "main11", 11, 5)
_register_lset("main12-q3", "main12", 12, 3)
_register_lset("main12-q5", "main12", 12, 5)
_register_lset("main14-q7", "main14-q7", 14, 7)


@claim("prop-q2-sl9", "q=2-sl9")
def _prop_q2_sl9():
    pair = _pair(12, 2, "general", 1)
    tau = tau_of(pair)
    env = {"x": pair.x, "y": pair.y, "tau": tau}
    g = eval_word(mul(TAU, cj(TAU, mul(Y, Y, X)), cj(TAU, Y)), env)
    ty = eval_word(cj(TAU, Y), env)
    tyyx = eval_word(cj(TAU, mul(Y, Y, X)), env)
    got = _union_varpi(s_restrict((g ** k) * ty * tyyx, pair.space, 9)
                       for k in [2, 4, 8, 11, 12])
    return {"expected": varpi_group("sl", 9, 2), "computed": got}


@claim("G7-q8", "G7-q8")
def _g7_q8():
    pair = _pair(10, 8, "general", "gen", "G7")
    tau = tau_of(pair)
    x, y = pair.x, pair.y

    def q(u):
        return s_restrict(u.inverse() * tau * u, pair.space, 7)
    g1, g2, g3, g4 = (s_restrict(tau, pair.space, 7), q(y), q(y * x),
                      q(y * y * x))
    base = g4 * g1 * g3
    got = _union_varpi((base ** k) * g2 for k in [6, 19, 26, 37])
    return {"expected": varpi_group("sl", 7, 8), "computed": got}


@claim("remark-q7", "q7-L")
def _remark_q7():
    pair = _pair(13, 7, "general", 1)
    tau = tau_of(pair)
    x, y = pair.x, pair.y

    def cjm(u):
        return u.inverse() * tau * u
    base = (tau * cjm(y) ** 2 * cjm(y * x * y) * cjm(y * x * y * y)
            * cjm(y * x))
    tail = (cjm(y * y) * cjm((y * x) ** 2) * cjm((y * x) ** 2 * y)
            * cjm((y * x) ** 2 * y * y))
    got = _union_varpi(s_restrict((base ** k) * tail, pair.space, 9)
                       for k in [1, 7, 11, 15, 22])
    return {"expected": varpi_group("sl", 9, 7), "computed": got}


def _wsl6_instance(q, aspec, I):
    pair = _pair(13, q, "general", aspec)
    F, x, y = pair.field, pair.x, pair.y
    a = pair.a
    r1 = hat_embed_bottom(F, 13, small_r(F, a, 1, 1))
    r2 = hat_embed_bottom(F, 13, small_r(F, a, 2, 1))
    r3 = x.inverse() * r1 * x
    r4 = (y * x).inverse() * r1 * (y * x)
    displayed_ok = (s_restrict(r3, pair.space, 6) == small_r(F, a, 3, 1)
                    and s_restrict(r4, pair.space, 6) == small_r(F, a, 4, 1))
    y2 = y * y
    g = r1 * r2 * r4 * (y2.inverse() * r2 * y2) * (y2.inverse() * r4 * y2)
    tail = (y.inverse() * r4 * y) * (y.inverse() * r3 * y) * r2
    got = _union_varpi(s_restrict((g ** k) * tail, pair.space, 6) for k in I)
    return {"expected": [varpi_group("sl", 6, q), True],
            "computed": [got, displayed_ok]}


@claim("WSL6-q3", "WSL6")
def _wsl6_q3():
    return _wsl6_instance(3, -1, [1, 3, 34])


@claim("WSL6-q5", "WSL6")
def _wsl6_q5():
    return _wsl6_instance(5, -1, [1, 2, 7, 15])


@claim("WSL6-q7", "WSL6")
def _wsl6_q7():
    return _wsl6_instance(7, 1, [1, 7, 32])


@claim("phat-centralizes", "Phat")
def _phat_centralizes():
    ok = True
    for q, aspec in [(5, -1), (13, -2)]:
        F = standard_field(q)
        a = _resolve_a(F, aspec)
        P = phat_base_change(F, a, 13)
        for i in (1, 2):
            for beta in (1, 2, q - 1):
                R = hat_embed_bottom(F, 13, small_r(F, a, i, beta))
                if P * R != R * P:
                    ok = False
    return {"expected": True, "computed": ok}


# ---------------------------------------------------------------------------
# claims: characteristic polynomials, traces, eigenvectors
# ---------------------------------------------------------------------------

def _n4_instances():
    return [(3, 1, None), (5, 2, None), (9, "gen", "M=H")]


@claim("charpoly-n4", "charpoly-n4")
def _charpoly_n4():
    exp, got = [], []
    for q, aspec, tag in _n4_instances():
        pair = _pair(4, q, "general", aspec, tag)
        F = pair.field
        exp.append(_poly_int(F, (1, 2, 1, 2, 4, 2, 1, 2, 1)))
        got.append(char_poly(pair.commutator()))
    return {"expected": exp, "computed": got}


@claim("main4-chi-xy", "chi-xy-n4")
def _main4_chi_xy():
    exp, got = [], []
    for q, aspec, tag in _n4_instances():
        pair = _pair(4, q, "general", aspec, tag)
        F, a = pair.field, pair.a.val
        a2p1 = F.add(F.mul(a, a), 1)
        exp.append(Poly(F, [1, F.neg(a), 0, a, F.neg(a2p1), a, 0, F.neg(a), 1]))
        got.append(char_poly(pair.x * pair.y))
    return {"expected": exp, "computed": got}


@claim("main4-w-eigenvectors", "w-n4")
def _main4_w():
    results = []
    for q, aspec, tag in _n4_instances():
        pair = _pair(4, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        c = pair.commutator()
        ai = pair.a.inv().val
        w1 = sp.vector([(1, 1), (F.neg(ai), 3), (F.neg(ai), -3)])
        w2 = tuple(pair.x.apply(w1))
        wb1 = sp.vector([(1, 3), (pair.a.val, -1), (-1, -3)])
        wb2 = tuple(pair.x.transpose().apply(wb1))
        results.append([
            same_span(eigenspace(c, -1), [w1, w2], F),
            same_span(eigenspace(c.transpose(), -1), [wb1, wb2], F)])
    return {"expected": [[True, True]] * len(results), "computed": results}


@claim("main4-cube-dim6", "cube-n4")
def _main4_cube():
    results = []
    for q, aspec, tag in _n4_instances():
        pair = _pair(4, q, "general", aspec, tag)
        F, p = pair.field, pair.field.p
        c = pair.commutator()
        es = eigenspace(c ** 3, -1)
        a = pair.a.val
        # parametrized family: (x1,x2,x3,x4,x5,-x4-x5, a x5 + x3, x6)
        basis = []
        for free in range(6):
            v = [0] * 8
            slot = [0, 1, 2, 3, 4, 7][free]
            v[slot] = 1
            v[5] = F.sub(v[5], F.add(v[3], v[4]))
            v[6] = F.add(v[6], F.add(F.mul(a, v[4]), v[2]))
            basis.append(tuple(v))
        minus_i = Mat.identity(F, 8).scale(F.neg(1))
        results.append([len(es), same_span(es, basis, F),
                        (c ** (3 * p)) == minus_i])
    return {"expected": [[6, True, True]] * len(results), "computed": results}


@claim("main4-c-order-q3", "c-order-n4")
def _main4_c_order_q3():
    got = []
    for aspec in (1, -1):
        pair = _pair(4, 3, "general", aspec)
        c = pair.commutator()
        got.append(element_order((c ** 2) * pair.y).value())
    return {"expected": [78, 78], "computed": got, "resolved": True,
            "detail": "C read as the commutator of the generator pair"}


@claim("main4-c-order-q5", "main4-q")
def _main4_c_order_q5():
    got = []
    for aspec, k in [(1, 2), (-1, 2), (2, 3), (-2, 3)]:
        pair = _pair(4, 5, "general", aspec)
        c = pair.commutator()
        got.append(element_order((c ** k) * pair.y).value())
    return {"expected": [186] * 4, "computed": got, "resolved": True,
            "detail": "C read as the commutator of the generator pair"}


def _n5_instances():
    return [(7, 1, None), (23, 2, None), (9, "gen", "table1")]


@claim("main5-chi-eta", "chi-eta-n5")
def _main5_chi_eta():
    exp, got = [], []
    for q, aspec, tag in _n5_instances():
        pair = _pair(5, q, "n5", aspec, tag)
        F = pair.field
        a2 = F.mul(pair.a.val, pair.a.val)
        expect = ((_poly_int(F, (1, 1, 1)) ** 2)
                  * Poly(F, [_iv(F, -1), F.neg(a2), 0, 1])
                  * Poly(F, [_iv(F, -1), 0, a2, 1]))
        exp.append(expect)
        got.append(char_poly(pair.y * tau_of(pair)))
    return {"expected": exp, "computed": got}


@claim("main5-tau-dim8", "tau-n5")
def _main5_tau():
    results = []
    for q, aspec, tag in _n5_instances():
        pair = _pair(5, q, "n5", aspec, tag)
        F = pair.field
        tau = tau_of(pair)
        results.append([char_poly(tau) == Poly(F, [F.neg(1), 1]) ** 10,
                        len(eigenspace(tau, 1)) == 8])
    return {"expected": [[True, True]] * len(results), "computed": results}


@claim("main5-trace", "subfield5")
def _main5_trace():
    results = []
    for q, aspec, tag in _n5_instances():
        pair = _pair(5, q, "n5", aspec, tag)
        F = pair.field
        a2 = F.mul(pair.a.val, pair.a.val)
        xy = pair.x * pair.y
        results.append([
            (xy ** 5).trace().val == _ipoly(F, pair.a, (-1, 0, -5)),
            (xy ** 8).trace().val == _ipoly(F, pair.a, (-5, 0, -8))])
    return {"expected": [[True, True]] * len(results), "computed": results}


def _n6_instances():
    return [(5, 1, None), (9, "gen", "main6"), (8, "gen", "table1")]


@claim("main6-chi-comm", "chi-comm-n6")
def _main6_chi_comm():
    exp, got = [], []
    for q, aspec, tag in _n6_instances():
        pair = _pair(6, q, "n6alt", aspec, tag)
        F = pair.field
        exp.append((_poly_int(F, (1, 1)) ** 4)
                   * (_poly_int(F, (1, -1, 1, -1, 1)) ** 2))
        got.append(char_poly(pair.commutator()))
    return {"expected": exp, "computed": got}


@claim("trace6", "trace6")
def _trace6():
    results = []
    for q, aspec, tag in _n6_instances():
        pair = _pair(6, q, "n6alt", aspec, tag)
        F, a = pair.field, pair.a.val
        c = pair.commutator()
        results.append([
            pair.y.trace().val == _iv(F, -3),
            (pair.x * pair.y).trace().val == a,
            c.trace().val == _iv(F, -2),
            (c * pair.x * pair.y).trace().val == F.neg(a)])
    return {"expected": [[True] * 4] * len(results), "computed": results}


@claim("main6-tau-dim10", "tau-n6")
def _main6_tau():
    results = []
    for q, aspec, tag in _n6_instances():
        pair = _pair(6, q, "n6alt", aspec, tag)
        F = pair.field
        tau = pair.commutator() ** 5
        results.append([char_poly(tau) == _poly_int(F, (1, 1)) ** 12,
                        len(eigenspace(tau, -1)) == 10])
    return {"expected": [[True, True]] * len(results), "computed": results}


def _omega_roots(field):
    """Primitive cube roots of unity in the field or its quadratic extension,
    together with the embedding used (None when they lie in the field)."""
    if field.q % 3 == 1:
        roots = [b for b in field.units()
                 if b.val != 1 and (b * b * b).val == 1]
        return roots, None
    big = make_ext_field(field.p, 2 * field.f,
                         default_modulus(field.p, 2 * field.f))
    em = embed(field, big)
    roots = [b for b in big.units() if b.val != 1 and (b * b * b).val == 1]
    return roots, em


def _vanishing_equiv(n, q, recipe, eta_word, quotient, cond_odd, cond_even):
    """Over every a in F_q^*: chi_eta is divided by `quotient`, and the
    cofactor vanishes at a primitive cube root of unity exactly when the
    stated polynomial in a vanishes."""
    field = standard_field(q)
    roots, em = _omega_roots(field)
    ok = True
    for a in field.units():
        try:
            pair = build(recipe, n, q, a, field)
        except BadParam:
            continue
        env = {"x": pair.x, "y": pair.y}
        chi = char_poly(eval_word(eta_word, env))
        quot = _poly_int(field, quotient[0])
        for extra in quotient[1:]:
            quot = quot * _poly_int(field, extra)
        rem = chi % quot
        if not rem.is_zero():
            ok = False
            continue
        f = chi // quot
        cond = cond_even if field.p == 2 else cond_odd
        stated_zero = _ipoly(field, a, cond) == 0
        if em is None:
            vals = [f.eval(w.val) for w in roots]
        else:
            fb = f.map_coeffs(lambda c: em(c).val, em.big)
            vals = [fb.eval(w.val) for w in roots]
        computed_zero = any(v.val == 0 for v in vals)
        if computed_zero != stated_zero:
            ok = False
    return ok


@claim("main7-chi-eta", "chi-eta-n7")
def _main7_chi_eta():
    eta = mul(Y, pw(XY, 3))
    results = []
    for q in (7, 13, 8):
        results.append(_vanishing_equiv(
            7, q, "general", eta, [(1, 1, 1)],
            cond_odd=(0, 1, 0, 1, 0, 1),     # a(a^2-a+1)(a^2+a+1)
            cond_even=(0, 1, 0, 0, 1, 1)))   # a(a^4+a^3+1)
    # eigenvector check where omega lies in F_q
    eig = []
    for q, aspec, tag in [(7, 1, None), (16, "gen", "main7")]:
        pair = _pair(7, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        h = eval_word(eta, {"x": pair.x, "y": pair.y})
        roots, _ = _omega_roots(F)
        for w in roots:
            s = sp.vector([(1, 4), (F.neg(w.val), -4)])
            sb = sp.vector([(1, 4), (w.val, -4)])
            eig.append(list(h.apply(s)) == [F.mul(w.val, t) for t in s])
            eig.append(list(h.transpose().apply(sb))
                       == [F.mul(w.val, t) for t in sb])
    return {"expected": [[True] * 3, [True] * len(eig)],
            "computed": [results, eig]}


@claim("main7-tau-charpoly", "tau-n7")
def _main7_tau():
    exp, got = [], []
    for q, aspec, tag in [(4, "gen", "main7"), (8, "gen", "main7"),
                          (16, "gen", "main7"), (7, 1, None), (5, 1, None),
                          (9, "gen", "7ex")]:
        pair = _pair(7, q, "general", aspec, tag)
        F = pair.field
        tau = tau_of(pair)
        if F.p == 2:
            a8 = F.pow(pair.a.val, 8)
            exp.append((_poly_int(F, (1, 1)) ** 10)
                       * (Poly(F, [1, a8, 1]) ** 2))
        else:
            exp.append(_poly_int(F, (-1, 1)) ** 14)
        got.append(char_poly(tau))
    return {"expected": exp, "computed": got}


@claim("main8-chi-eta", "chi-eta-n8")
def _main8_chi_eta():
    exp, got, eig = [], [], []
    for q, aspec, tag in [(5, 1, None), (7, 2, None), (9, "gen", "main8"),
                          (4, "primitive", None)]:
        pair = _pair(8, q, "n8alt", aspec, tag)
        F = pair.field
        c = pair.commutator()
        eta = pair.y * pair.y * (c ** 3) * pair.y * pair.y
        a2p1_2 = F.mul(_iv(F, 2), F.add(F.mul(pair.a.val, pair.a.val), 1))
        sext = Poly(F, [1, 1, a2p1_2, 1, a2p1_2, 1, 1])
        expect = ((_poly_int(F, (-1, 1)) ** 2) * (_poly_int(F, (1, 1)) ** 2)
                  * (_poly_int(F, (1, -1, 1)) ** 2) * _poly_int(F, (1, 1, 1))
                  * sext)
        exp.append(expect)
        got.append(char_poly(eta))
        sp = pair.space
        s = sp.vector([(1, 2), (1, 5), (-1, 7)])
        sb = sp.vector([(1, -2), (1, -5), (-1, -7)])
        m1 = _iv(F, -1)
        eig.append(list(eta.apply(s)) == [F.mul(m1, t) for t in s])
        eig.append(list(eta.transpose().apply(sb)) == [F.mul(m1, t) for t in sb])
    return {"expected": [exp, [True] * len(eig)], "computed": [got, eig]}


def _n8_even_data(q):
    pair = _pair(8, q, "n8alt", "primitive")
    F = pair.field
    a = pair.a.val
    m = F.mul
    a2, a4 = m(a, a), F.pow(a, 4)
    P = Mat(F, [[0, 0, 1, 0, 1, 1, 0, 0], [0, 0, 1, a2, 0, 0, a2, 0],
                [0, 0, 0, 0, 1, 0, a2, 0], [1, 0, 0, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0, 0],
                [0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, F.inv(a), a, 1]])
    t1 = Mat(F, [[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, a4, 0],
                 [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    t2 = Mat(F, [[1, 0, 0, 0, 0], [0, 1, a2, 0, m(a2, a)],
                 [0, a2, 1, a4, 0], [0, 0, 1, 1, a], [0, a, 0, m(a2, a), 1]])
    t3 = Mat(F, [[1, 0, 0, 0, 0], [a4, F.add(a2, 1), a2, 0, m(a2, a)],
                 [0, a2, F.add(a2, 1), a4, m(a2, a)], [0, 0, 0, 1, 0],
                 [m(a2, a), 0, 0, m(a2, a), 1]])
    t4 = Mat(F, [[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                 [0, 0, 1, 1, 0], [0, 0, 0, 0, 1]])
    return pair, P, (t1, t2, t3, t4)


@claim("main8-phat-conj", "P-n8")
def _main8_phat():
    results = []
    for q in (4, 8):
        pair, P, taus = _n8_even_data(q)
        F = pair.field
        a4 = F.pow(pair.a.val, 4)
        det_ok = P.det().val == a4
        Phat = Mat.block_diag([P, P.inverse().transpose()])
        tau = tau_of(pair)
        x, y = pair.x, pair.y

        def cjt(u):
            g = u.inverse() * tau * u
            return Phat.inverse() * g * Phat
        gens = [cjt(y * x * y * y), cjt(y * x * y * y * x),
                cjt((y * x) ** 3), cjt((y * x) ** 2 * y)]
        blocks = [s_restrict(g, pair.space, 5) for g in gens]
        match = [blocks[i] == taus[i] for i in range(4)]
        results.append([det_ok] + match)
    return {"expected": [[True] * 5] * 2, "computed": results,
            "detail": "computed determinant would be reported here on mismatch"}


@claim("main8-tau-relations", "tau-rel-n8")
def _main8_tau_relations():
    even = []
    for q in (4, 8):
        pair, _, taus = _n8_even_data(q)
        F = pair.field
        t1, t4 = taus[0], taus[3]
        a, a4 = pair.a.val, F.pow(pair.a.val, 4)
        even.append([
            char_poly(t1 * t4) == (_poly_int(F, (1, 1)) ** 3)
            * Poly(F, [1, a4, 1]),
            (t1 * t4).trace().val == F.add(a4, 1),
            paper_commutator(t1, t4).trace().val == F.pow(F.add(a, 1), 8)])
    odd = []
    for q, aspec, tag in [(7, 2, None), (25, "gen", "main8")]:
        pair = _pair(8, q, "n8alt", aspec, tag)
        F = pair.field
        tau = tau_of(pair)
        x, y = pair.x, pair.y

        def cjm(u):
            return u.inverse() * tau * u
        gens = [cjm(y * x), cjm(y * x * y), cjm(y * x * y * y),
                cjm((y * x) ** 2), cjm((y * x) ** 2 * y), cjm((y * x) ** 3),
                cjm(y * y * x * y * y)]
        four_a2 = F.mul(_iv(F, 4), F.mul(pair.a.val, pair.a.val))
        I5 = Mat.identity(F, 5)

        def E(i, j, c):
            rows = [[0] * 5 for _ in range(5)]
            rows[i - 1][j - 1] = c
            return Mat(F, rows)
        expected = [I5 + E(4, 5, four_a2) + E(4, 2, F.neg(four_a2)),
                    I5 + E(3, 4, F.neg(four_a2)),
                    I5 + E(2, 3, F.neg(four_a2)),
                    I5 + E(3, 5, F.neg(four_a2)),
                    I5 + E(2, 1, four_a2),
                    I5 + E(1, 2, four_a2),
                    I5 + E(5, 1, four_a2) + E(5, 4, F.neg(four_a2))]
        blocks = []
        for g in gens:
            gv = v_restrict(g, pair.space)
            # identity on the quotient V / E_5
            rows = gv.rows_raw()
            quot_ok = all(rows[i][j] == (1 if i == j else 0)
                          for i in range(5, 8) for j in range(5, 8))
            blocks.append((restriction_matrix_block(gv, 5), quot_ok))
        match = [blocks[i][0] == expected[i] and blocks[i][1]
                 for i in range(7)]
        t5, t6 = expected[4], expected[5]
        lam = F.mul(_iv(F, 2), F.add(F.mul(_iv(F, 8), F.pow(pair.a.val, 4)), 1))
        cp_ok = char_poly(t5 * t6) == ((_poly_int(F, (-1, 1)) ** 3)
                                       * Poly(F, [1, F.neg(lam), 1]))
        odd.append(match + [cp_ok])
    return {"expected": [[[True] * 3] * 2, [[True] * 8] * 2],
            "computed": [even, odd]}


def restriction_matrix_block(gv: Mat, k: int) -> Mat:
    """Leading k x k block, asserting the lower-left block vanishes."""
    rows = gv.rows_raw()
    n = gv.rows
    for i in range(k, n):
        for j in range(k):
            if rows[i][j]:
                raise BadParam("leading subspace is not invariant")
    return Mat(gv.field, [[rows[i][j] for j in range(k)] for i in range(k)])


@claim("main9-tau-charpoly", "tau-n9")
def _main9_tau():
    exp, got = [], []
    for q, aspec, tag in [(4, "gen", "main9"), (8, "gen", "main9"),
                          (16, "gen", "table2"), (7, 1, None), (5, 1, None),
                          (11, 4, None)]:
        pair = _pair(9, q, "general", aspec, tag)
        F = pair.field
        tau = tau_of(pair)
        if F.p == 2:
            b = F.add(F.pow(pair.a.val, 12), F.pow(pair.a.val, 4))
            exp.append((_poly_int(F, (1, 1)) ** 14) * (Poly(F, [1, b, 1]) ** 2))
        else:
            exp.append(_poly_int(F, (-1, 1)) ** 18)
        got.append(char_poly(tau))
    return {"expected": exp, "computed": got}


@claim("main9-ytau-even", "ytau-n9")
def _main9_ytau_even():
    results = []
    for q, aspec, tag in [(4, "gen", "main9"), (8, "gen", "main9")]:
        pair = _pair(9, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        tau = tau_of(pair)
        y9 = v_restrict(pair.y, sp)
        t9 = v_restrict(tau, sp)
        m = y9 * t9
        chi = char_poly(m)
        div = _poly_int(F, (1, 1)) * _poly_int(F, (1, 1, 1))
        ai = pair.a.inv().val
        s1 = [0] * 9
        for i in (0, 1, 2):
            s1[i] = 1
        for i in range(3, 9):
            s1[i] = ai
        sb1 = tuple([1, 1, 1] + [0] * 6)
        trace_val = F.pow(_ipoly(F, pair.a, (1, 1, 0, 1)), 4)
        inv = similarity_invariants(t9)
        inv_ok = (len(inv) == 7
                  and all(p == _poly_int(F, (1, 1)) for p in inv[:6])
                  and inv[6] == Poly(F, [1, trace_val, trace_val, 1]))
        # irreducibility witness: eigenvectors of eta = y^2 [x,y]^3 y^2 x
        c = pair.commutator()
        eta = pair.y * pair.y * (c ** 3) * pair.y * pair.y * pair.x
        s_eta = sp.vector([(1, 3), (1, -2), (1, -5)])
        sb_eta = sp.vector([(1, 2), (1, 5), (1, -3)])
        results.append([
            (chi % div).is_zero(),
            list(m.apply(tuple(s1))) == list(s1),
            list(m.transpose().apply(sb1)) == list(sb1),
            t9.trace().val == trace_val,
            inv_ok,
            list(eta.apply(s_eta)) == list(s_eta),
            list(eta.transpose().apply(sb_eta)) == list(sb_eta)])
    return {"expected": [[True] * 7] * 2, "computed": results}


@claim("des-tau-n9", "des-tau")
def _des_tau_n9():
    results = []
    for q, aspec in [(5, -1), (7, 1), (3, -1)]:
        pair = _pair(13, q, "general", aspec)
        F, sp, n = pair.field, pair.space, 13
        a = pair.a.val
        tau = tau_of(pair)
        x, y = pair.x, pair.y
        four_a = F.mul(_iv(F, 4), a)
        a2, a3 = F.mul(a, a), F.pow(a, 3)

        def check(g, b, plus, minus):
            for j in range(1, n + 1):
                img = list(g.apply(sp.basis_vector(j)))
                base = list(sp.basis_vector(j))
                coef = plus.get(j, minus.get(j))
                if coef is not None:
                    base = [F.add(base[i], F.mul(coef, b[i]))
                            for i in range(2 * n)]
                if img != base:
                    return False
            return True

        b1 = sp.vector([(a, n - 4), (-2, n - 1), (a, n)])
        ok1 = check(tau, b1, {n - 7: four_a},
                    {n - 3: F.neg(four_a), n - 2: F.neg(four_a)})
        tyx = (y * x).inverse() * tau * (y * x)
        b2 = sp.vector([(a, n - 6), (-2, n - 3), (F.neg(a), n - 1), (a2, n)])
        ok2 = check(tyx, b2, {n - 9: four_a, n - 4: four_a},
                    {n - 1: F.neg(F.mul(four_a, a)), n: F.neg(four_a)})
        tyx2 = ((y * x) ** 2).inverse() * tau * ((y * x) ** 2)
        b3 = sp.vector([(a, n - 7), (2, n - 4), (F.neg(a), n - 3),
                        (F.neg(a2), n - 1), (a3, n)])
        ok3 = check(tyx2, b3,
                    {n - 10: four_a, n - 6: four_a, n - 1: four_a},
                    {n - 3: F.neg(F.mul(four_a, a))})
        results.append([ok1, ok2, ok3])
    return {"expected": [[True] * 3] * 3, "computed": results}


@claim("main11-chi-eta", "chi-eta-n11")
def _main11_chi_eta():
    eta = mul(pw(COMM, 2), Y)
    results = []
    for q in (5, 7, 8):
        results.append(_vanishing_equiv(
            11, q, "general", eta, [(1, 0, 1), (1, 0, 1), (1, 1, 1)],
            cond_odd=(2, 1, 1, 2),      # (a+1)(2a^2-a+2)
            cond_even=(1, 0, 0, 1, 1, 1)))  # (a+1)(a^3+a^2+1)
    # eigenvector checks where omega is rational
    eig = []
    for q, aspec, tag in [(7, 2, None), (4, "gen", "main11")]:
        pair = _pair(11, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        h = eval_word(eta, {"x": pair.x, "y": pair.y})
        roots, _ = _omega_roots(F)
        for w in roots:
            wi = w.inv().val
            s = sp.vector([(1, 4), (F.neg(wi), -4)])
            sb = sp.vector([(1, 4), (wi, -4)])
            eig.append(list(h.apply(s)) == [F.mul(w.val, t) for t in s])
            eig.append(list(h.transpose().apply(sb))
                       == [F.mul(w.val, t) for t in sb])
    return {"expected": [[True] * 3, [True] * len(eig)],
            "computed": [results, eig]}


@claim("main11-tau-bireflection", "tau-n11")
def _main11_tau():
    odd = []
    for q, aspec, tag in [(5, 1, None), (7, 2, None), (9, "gen", "11ex")]:
        pair = _pair(11, q, "general", aspec, tag)
        F, sp, n = pair.field, pair.space, 11
        a = pair.a.val
        tau = tau_of(pair)
        u = sp.vector([(1, 7), (-1, 11)])
        four_a2 = F.mul(_iv(F, 4), F.mul(a, a))
        eight_a = F.mul(_iv(F, 8), a)
        ok = True
        for j in range(1, n + 1):
            img = list(tau.apply(sp.basis_vector(j)))
            base = list(sp.basis_vector(j))
            if j == 10:
                coef = eight_a
            elif j in (1, 2, 5, 9):
                coef = four_a2
            elif j in (3, 4, 6, 8):
                coef = F.neg(four_a2)
            else:
                coef = None
            if coef is not None:
                base = [F.add(base[i], F.mul(coef, u[i])) for i in range(2 * n)]
            if img != base:
                ok = False
        odd.append([ok, len(eigenspace(tau, 1)) == 2 * n - 2])
    even = []
    for q, aspec, tag in [(4, "gen", "main11"), (8, "gen", "table1")]:
        pair = _pair(11, q, "general", aspec, tag)
        F = pair.field
        tau = tau_of(pair)
        tv = v_restrict(tau, pair.space)
        xv = v_restrict(pair.x, pair.space)
        a8 = F.pow(pair.a.val, 8)
        even.append([
            char_poly(tv) == (_poly_int(F, (1, 1)) ** 9) * Poly(F, [1, a8, 1]),
            tv.trace().val == F.add(a8, 1),
            paper_commutator(xv, tv).trace().val
            == F.pow(F.add(pair.a.val, 1), 16)])
    return {"expected": [[[True, True]] * 3, [[True] * 3] * 2],
            "computed": [odd, even]}


# ---------------------------------------------------------------------------
# claims: small-group actions (eq. G3 family), sigma eigenvectors, theta
# ---------------------------------------------------------------------------

def _g3_check(pair, tau, basis_cols, eq, transpose=False):
    """The triple (tau, tau^y, tau^{y^2}) acts on the span of basis_cols as
    the displayed generator triple (as a multiset)."""
    y = pair.y
    trip = [tau, y.inverse() * tau * y,
            (y * y).inverse() * tau * (y * y)]
    if transpose:
        V = list(range(1, pair.n + 1))
        trip = [restriction_matrix(g, pair.space, V).transpose() for g in trip]
    disp = list(g3_displayed(pair.field, pair.a, eq))
    got = []
    for g in trip:
        try:
            got.append(restrict_to_span(g, basis_cols))
        except BadParam:
            return False
    for m in got:
        if m in disp:
            disp.remove(m)
        else:
            return False
    return True


@claim("G3-action", "G3")
def _g3_action():
    results = {}
    # eq G3: n=13, p>2
    for q, aspec in [(5, -1), (3, -1)]:
        pair = _pair(13, q, "general", aspec)
        F, sp, n = pair.field, pair.space, 13
        a = pair.a.val
        tau = tau_of(pair)
        y = pair.y
        ai = pair.a.inv().val
        u = sp.vector([(1, n - 5), (F.neg(F.mul(_iv(F, 2), ai)), n - 2),
                       (1, n - 1)])
        yu = tuple(y.apply(u))
        y2u = tuple(y.apply(yu))
        a3 = F.pow(a, 3)
        w1 = _vcombo(F, [(F.mul(_iv(F, 8), a), yu)])
        w3 = _vcombo(F, [(a3, u), (a, yu), (F.mul(a, a), y2u)])
        ok = _g3_check(pair, tau, [w1, u, w3], "G3")
        # transpose side, on the 9x9 restrictions to the last-9 subspace
        s9_idx = [sp.idx(i) for i in range(n - 8, n + 1)]

        def to_s9(v26):
            if any(c for j, c in enumerate(v26) if j not in s9_idx):
                return None
            return tuple(v26[j] for j in s9_idx)
        ub26 = sp.vector([(1, n - 6), (-1, n - 5), (-1, n - 1)])
        yT26 = y.transpose()
        yub26 = tuple(yT26.apply(ub26))
        y2ub26 = tuple(yT26.apply(yub26))
        ub, yub, y2ub = to_s9(ub26), to_s9(yub26), to_s9(y2ub26)
        v1 = _vcombo(F, [(F.mul(_iv(F, 8), a), y2ub)])
        v3 = _vcombo(F, [(a3, ub), (F.mul(a, a), yub), (a, y2ub)])
        trip = [s_restrict(g, sp, 9).transpose()
                for g in (tau, y.inverse() * tau * y,
                          (y * y).inverse() * tau * (y * y))]
        disp = list(g3_displayed(F, pair.a, "G3"))
        okT = ub is not None and yub is not None and y2ub is not None
        for g in trip if okT else []:
            try:
                m = restrict_to_span(g, [v1, ub, v3])
            except BadParam:
                okT = False
                break
            if m in disp:
                disp.remove(m)
            else:
                okT = False
        # charpoly of (tau tau^y)|S9
        g = tau * (y.inverse() * tau * y)
        s9 = s_restrict(g, sp, 9)
        lam = F.sub(F.mul(_iv(F, 64), a3), _iv(F, 2))
        cp_ok = char_poly(s9) == ((_poly_int(F, (-1, 1)) ** 7)
                                  * Poly(F, [1, lam, 1]))
        results[f"G3-q{q}"] = [ok, okT, cp_ok]
    # eq G39: n=7, p>2 (K9)
    for q, aspec, tag in [(5, 1, None), (9, "gen", "7ex")]:
        pair = _pair(7, q, "general", aspec, tag)
        F, sp, n = pair.field, pair.space, 7
        a = pair.a.val
        tau = tau_of(pair)
        y = pair.y
        u = sp.vector([(1, 3), (-1, 7)])
        yu = tuple(y.apply(u))
        y2u = tuple(y.apply(yu))
        a2 = F.mul(a, a)
        w1 = _vcombo(F, [(F.mul(_iv(F, 4), a2), u)])
        w2 = tuple(F.neg(t) for t in yu)
        w3 = _vcombo(F, [(a2, u), (1, yu), (F.neg(a), y2u)])
        ok = _g3_check(pair, tau, [w1, w2, w3], "G39")
        # transpose side on V-restrictions
        wb1 = [0] * n
        wb1[3] = a
        wb1[4] = F.neg(a)
        wb1[5] = _iv(F, -2)
        wb2 = [0] * n
        wb2[0] = a
        wb2[2] = F.neg(a)
        wb2[6] = a
        wb2[4] = _iv(F, 2)
        wb3 = [0] * n
        wb3[0] = a
        wb3[1] = a
        wb3[5] = a
        wb3[3] = F.neg(a2)
        wb3[4] = a2
        wb3[6] = _iv(F, -2)
        v1 = _vcombo(F, [(F.mul(_iv(F, 4), a2), tuple(wb1))])
        v2 = tuple(wb2)
        v3 = tuple(F.neg(F.add(wb2[i], F.mul(a, wb3[i]))) for i in range(n))
        okT = _g3_check(pair, tau, [v1, v2, v3], "G39", transpose=True)
        g = tau * ((y * y).inverse() * tau * (y * y))
        gv = v_restrict(g, sp)
        lam = F.add(F.mul(_iv(F, 16), F.pow(a, 3)), _iv(F, 2))
        cp_ok = char_poly(gv) == ((_poly_int(F, (-1, 1)) ** 5)
                                  * Poly(F, [1, F.neg(lam), 1]))
        results[f"G39-q{q}"] = [ok, okT, cp_ok]
    # eq 39: n=9, p>2 (K9odd)
    for q, aspec, tag in [(11, 4, None), (9, "gen", "9ex")]:
        pair = _pair(9, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        a = pair.a.val
        tau = tau_of(pair)
        y = pair.y
        ai = pair.a.inv().val
        u = sp.vector([(1, 5), (F.neg(F.mul(_iv(F, 2), ai)), 8), (1, 9)])
        yu = tuple(y.apply(u))
        y2u = tuple(y.apply(yu))
        a2 = F.mul(a, a)
        ap2 = F.add(a, _iv(F, 2))
        w1 = _vcombo(F, [(F.neg(F.mul(_iv(F, 2), a2)), u)])
        c1 = F.mul(F.mul(ap2, ap2), F.inv(F.mul(_iv(F, 4), a2)))
        c2 = F.mul(ap2, F.inv(F.mul(_iv(F, 2), a)))
        w3 = _vcombo(F, [(1, u), (c1, yu), (c2, y2u)])
        ok = _g3_check(pair, tau, [w1, yu, w3], "39")
        g = tau * ((y * y).inverse() * tau * (y * y))
        gv = v_restrict(g, sp)
        co = F.add(F.sub(F.mul(_iv(F, 2), F.pow(a, 4)), _iv(F, 2)),
                   F.mul(_iv(F, 4), F.pow(a, 3)))
        cp_ok = char_poly(gv) == ((_poly_int(F, (-1, 1)) ** 7)
                                  * Poly(F, [1, co, 1]))
        results[f"39-q{q}"] = [ok, cp_ok]
    # eq G311: n=11, p>2 (Gn11)
    for q, aspec, tag in [(11, 1, None), (9, "gen", "11ex")]:
        pair = _pair(11, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        a = pair.a.val
        tau = tau_of(pair)
        y = pair.y
        u = sp.vector([(1, 7), (-1, 11)])
        yu = tuple(y.apply(u))
        y2u = tuple(y.apply(yu))
        ap2 = F.add(a, _iv(F, 2))
        w2 = _vcombo(F, [(F.neg(F.mul(F.mul(_iv(F, 4), a), ap2)), yu)])
        c1 = F.mul(F.mul(ap2, ap2), F.inv(F.mul(_iv(F, 4), a)))
        c2 = F.mul(ap2, F.inv(_iv(F, 2)))
        w3 = _vcombo(F, [(a, u), (c1, yu), (F.neg(c2), y2u)])
        ok = _g3_check(pair, tau, [u, w2, w3], "G311")
        g = tau * ((y * y).inverse() * tau * (y * y))
        gv = v_restrict(g, sp)
        lam = F.mul(_iv(F, 2),
                    F.add(F.add(F.mul(_iv(F, 16), F.pow(a, 4)),
                                F.mul(_iv(F, 32), F.pow(a, 3))), 1))
        cp_ok = char_poly(gv) == ((_poly_int(F, (-1, 1)) ** 9)
                                  * Poly(F, [1, F.neg(lam), 1]))
        results[f"G311-q{q}"] = [ok, cp_ok]
    # eq SL3-5: n=5
    for q, aspec, tag in [(7, 1, None), (9, "gen", "table1")]:
        pair = _pair(5, q, "n5", aspec, tag)
        F, sp = pair.field, pair.space
        tau = tau_of(pair)
        a2 = F.mul(pair.a.val, pair.a.val)
        b1 = sp.vector([(F.neg(a2), 2)])
        b2 = sp.vector([(1, 3)])
        b3 = sp.vector([(1, 4)])
        results[f"SL3-5-q{q}"] = [_g3_check(pair, tau, [b1, b2, b3], "SL3-5")]
    expected = {k: [True] * len(v) for k, v in results.items()}
    return {"expected": expected, "computed": results}


@claim("s-sigma", "s-sigma")
def _s_sigma():
    results = []
    for q, tag in [(8, "G7"), (4, None)]:
        field = standard_field(q, tag)
        if tag:
            a = field.gen()
        else:
            found = search_parameter("sigma-a", q, field)
            a = found[0]
        pair = build("general", 10, q, a, field)
        sigma = _sigma_of(field, a)
        big = sigma.ctx
        em = embed(field, big)
        cb = em.map_matrix(pair.commutator())
        sp, n = pair.space, 10
        ok = [mult_order(sigma).value() == q + 1]
        for s in (sigma, sigma.inv()):
            si = s.inv()
            v = [0] * (2 * n)
            for coef, i in [(1, n - 7), (1, n - 4), (1, n - 1),
                            (s.val, n - 3), (s.val, n), (si.val, n - 2)]:
                v[sp.idx(i)] = big.add(v[sp.idx(i)], coef)
            ok.append(list(cb.apply(tuple(v)))
                      == [big.mul(s.val, t) for t in v])
            vb = [0] * (2 * n)
            for coef, i in [(1, n - 4), (big.add(1, si.val), n - 1), (1, n)]:
                vb[sp.idx(i)] = coef
            ok.append(list(cb.transpose().apply(tuple(vb)))
                      == [big.mul(s.val, t) for t in vb])
        if q != 8:
            tau = tau_of(pair)
            t7 = s_restrict(tau, sp, 7)
            b = field.add(field.pow(a.val, 24), field.pow(a.val, 8))
            ok.append(char_poly(t7) == ((_poly_int(field, (1, 1)) ** 5)
                                        * Poly(field, [1, b, 1])))
            ok.append(t7.trace().val
                      == field.pow(_ipoly(field, a, (1, 1, 0, 1)), 8))
        results.append(ok)
    return {"expected": [[True] * len(r) for r in results],
            "computed": results}


@claim("theta-charpoly", "theta")
def _theta_charpoly():
    exp, got = [], []
    for q, tag in [(4, None), (8, "table1"), (16, None)]:
        field = standard_field(q, tag)
        a = field.gen() if q > 2 else field.elem(1)
        th = theta_matrix(field, a, q)
        exp.append(_poly_int(field, (1, 0, 1)) * _poly_int(field, (1, 1, 1))
                   * Poly(field, [1, a.val, 1]))
        got.append(char_poly(th))
    return {"expected": exp, "computed": got}


def _block_orders(n, instances):
    results = []
    for q, aspec, tag in instances:
        pair = _pair(n, q, "general", aspec, tag)
        F, sp = pair.field, pair.space
        c = pair.commutator()
        decomp = block_decomposition(pair)
        eps, displayed = expected_a_matrices(F, n)
        ok = []
        for summand, (mat, order) in zip(decomp.a_summands, displayed):
            r = restriction_matrix(c, sp, summand)
            ok.append(r == mat)
            ok.append(element_order(r).value() == order)
        tau = tau_of(pair)
        ident_ok = True
        for summand in decomp.a_summands + decomp.b_summands:
            if not restriction_matrix(tau, sp, summand).is_identity():
                ident_ok = False
        ok.append(ident_ok)
        ok.append(restriction_matrix(c, sp, decomp.c_plus) == decomp.theta)
        results.append(ok)
    return {"expected": [[True] * len(r) for r in results],
            "computed": results}


@claim("block-orders-n10", "blocks")
def _block_orders_n10():
    return _block_orders(10, [(3, 1, None), (4, "gen", None)])


@claim("block-orders-n12", "blocks")
def _block_orders_n12():
    return _block_orders(12, [(2, 1, None), (3, 1, None)])


@claim("block-orders-n13", "blocks")
def _block_orders_n13():
    return _block_orders(13, [(3, 1, None), (7, 1, None)])


@claim("block-orders-n14", "blocks")
def _block_orders_n14():
    return _block_orders(14, [(3, 1, None), (5, 1, None)])


@claim("block-orders-n15", "blocks")
def _block_orders_n15():
    return _block_orders(15, [(2, 1, None), (3, 1, None)])


# ---------------------------------------------------------------------------
# claims: condition-set sanity (admissible a exists; named a passes)
# ---------------------------------------------------------------------------

_SANITY_SAMPLES = {
    "G9": [3, 5], "G9-10": [3, 9], "G9-12": [7, 9], "G9-14": [3, 9],
    "K9": [5, 9], "K9even": [16, 32], "K9odd": [11, 9],
    "G11": [8, 16], "Gn11": [11, 9],
}


_SANITY_ANCHORS = {"G9": "G9", "G9-10": "G9-10", "G9-12": "G9-12",
                   "G9-14": "G9-14", "K9": "K9", "K9even": "K9even",
                   "K9odd": "K9odd", "G11": "G11", "Gn11": "Gn11"}


def _register_sanity(lemma):
    qs = _SANITY_SAMPLES[lemma]

    @claim(lemma, _SANITY_ANCHORS[lemma])
    def _c(lemma=lemma, qs=qs):
        checks = {}
        for q in qs:
            checks[f"nonempty-q{q}"] = len(search_parameter(lemma, q)) > 0
        for (lem, q) in NAMED_A:
            if lem == lemma:
                checks[f"named-q{q}"] = named_a_reproduced(lemma, q)
        if lemma == "G9":
            checks["empty-q7"] = search_parameter("G9", 7) == []
        return {"expected": {k: True for k in checks}, "computed": checks}


for _lemma in _SANITY_SAMPLES:
    _register_sanity(_lemma)


# ---------------------------------------------------------------------------
# claims: even-characteristic quadratic-form obstructions
# ---------------------------------------------------------------------------

def _register_quadform(cid, anchor, instances):
    @claim(cid, anchor)
    def _c(instances=instances):
        got = []
        for n, q, recipe, aspec, tag in instances:
            got.append(quadratic_form_obstruction(
                _pair(n, q, recipe, aspec, tag)).kind)
        return {"expected": ["Inconsistent"] * len(instances), "computed": got}


_register_quadform("quadform-n4", "quadform-n4",
                   [(4, 4, "general", "primitive", None)])
_register_quadform("quadform-n5", "quadform-n5",
                   [(5, 4, "n5", "gen", "main5")])
_register_quadform("quadform-n6", "quadform-n6",
                   [(6, 8, "n6alt", "gen", "table1")])
_register_quadform("quadform-n7", "quadform-n7",
                   [(7, 4, "general", "gen", "main7")])
_register_quadform("quadform-n8", "quadform-n8",
                   [(8, 4, "n8alt", "primitive", None)])
_register_quadform("quadform-n9", "quadform-n9",
                   [(9, 4, "general", "gen", "main9")])
_register_quadform("quadform-n11", "quadform-n11",
                   [(11, 4, "general", "gen", "main11")])


# ---------------------------------------------------------------------------
# claims: subfield / trace identities
# ---------------------------------------------------------------------------

@claim("subfield", "subfield")
def _subfield_n4():
    results = []
    for q, aspec, tag in _n4_instances():
        pair = _pair(4, q, "general", aspec, tag)
        F = pair.field
        results.append([
            (pair.x * pair.y).trace().val == pair.a.val,
            _poly_int(F, (1, 1, 1)) in similarity_invariants(pair.y)])
    return {"expected": [[True, True]] * len(results), "computed": results}


@claim("subfield5", "subfield5")
def _subfield5():
    results = []
    for q, aspec, tag in _n5_instances():
        pair = _pair(5, q, "n5", aspec, tag)
        F = pair.field
        xy = pair.x * pair.y
        results.append([
            (xy ** 5).trace().val == _ipoly(F, pair.a, (-1, 0, -5)),
            (xy ** 8).trace().val == _ipoly(F, pair.a, (-5, 0, -8)),
            _poly_int(F, (1, 1, 1)) in similarity_invariants(pair.y)])
    return {"expected": [[True] * 3] * len(results), "computed": results}


@claim("subfield6", "subfield6")
def _subfield6():
    results = []
    for q, aspec, tag in _n6_instances():
        pair = _pair(6, q, "n6alt", aspec, tag)
        F = pair.field
        results.append([
            (pair.x * pair.y).trace().val == pair.a.val,
            _poly_int(F, (1, 1, 1)) in similarity_invariants(pair.y)])
    return {"expected": [[True, True]] * len(results), "computed": results}


@claim("subfield7", "subfield7")
def _subfield7():
    results = []
    for q, aspec, tag in [(7, 1, None), (9, "gen", "7ex"),
                          (8, "gen", "main7")]:
        pair = _pair(7, q, "general", aspec, tag)
        F = pair.field
        expect = F.add(pair.a.val, 1) if F.p == 2 else pair.a.val
        results.append([
            (pair.x * pair.y).trace().val == expect,
            _poly_int(F, (1, 1, 1)) in similarity_invariants(pair.y)])
    return {"expected": [[True, True]] * len(results), "computed": results}


@claim("subfield8", "subfield8")
def _subfield8():
    results = []
    for q, aspec, tag in [(7, 2, None), (25, "gen", "main8"),
                          (4, "primitive", None), (8, "primitive", None)]:
        pair = _pair(8, q, "n8alt", aspec, tag)
        F = pair.field
        xy = pair.x * pair.y
        if F.p == 2:
            ok = (xy ** 9).trace().val == F.mul(pair.a.val, pair.a.val)
        else:
            ok = (xy ** 8).trace().val == _ipoly(F, pair.a, (-1, 0, 8))
        results.append([ok,
                        _poly_int(F, (1, 1, 1))
                        in similarity_invariants(pair.y)])
    return {"expected": [[True, True]] * len(results), "computed": results}


@claim("subfield9-2", "subfield9-2")
def _subfield9_2():
    results = []
    for q, tag in [(4, "main9"), (8, "main9"), (16, "table2")]:
        pair = _pair(9, q, "general", "gen", tag)
        F = pair.field
        results.append(
            [((pair.x * pair.y) ** 3).trace().val
             == _ipoly(F, pair.a, (1, 1, 0, 1))])
    return {"expected": [[True]] * len(results), "computed": results}


@claim("subfield9-odd", "subfield9-odd")
def _subfield9_odd():
    results = []
    for q, aspec, tag in [(11, 4, None), (13, 4, None), (9, "gen", "9ex")]:
        pair = _pair(9, q, "general", aspec, tag)
        F = pair.field
        tau = tau_of(pair)
        ty = pair.y.inverse() * tau * pair.y
        results.append([(tau * ty).trace().val
                        == _ipoly(F, pair.a, (18, 0, 0, -8, -4))])
    return {"expected": [[True]] * len(results), "computed": results}


@claim("subfield11", "subfield11")
def _subfield11():
    results = []
    for q, aspec, tag in [(5, 1, None), (9, "gen", "11ex"),
                          (8, "gen", "table1")]:
        pair = _pair(11, q, "general", aspec, tag)
        F = pair.field
        expect = F.add(pair.a.val, 1) if F.p == 2 else pair.a.val
        results.append([(pair.x * pair.y).trace().val == expect])
    return {"expected": [[True]] * len(results), "computed": results}
