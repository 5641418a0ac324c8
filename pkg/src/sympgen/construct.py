"""Generator pairs (x, y) for Sp_2n(q) and the invariant-subspace machinery.

Coordinates follow the package-wide basis order e_1..e_n, e_{-1}..e_{-n};
signed indices +-i address basis vectors, and builders assign one image per
basis vector with a collision guard, so an index covered by two case rules
fails loudly instead of silently overwriting.

Recipes: "general" (n = 4 or n >= 6), "n5", "n6alt", "n8alt".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParam, NoTauDefined, OutOfRange
from .gf import FieldCtx, FieldElem, standard_field
from .matrix import Mat, paper_commutator

RECIPES = ("general", "n5", "n6alt", "n8alt")


@dataclass(frozen=True)
class SympSpace:
    n: int
    field: FieldCtx
    J: Mat

    @classmethod
    def make(cls, n: int, field: FieldCtx) -> "SympSpace":
        J = Mat.from_function(
            field, 2 * n, 2 * n,
            lambda i, j: (-1 if (i < n and j == i + n) else
                          (1 if (i >= n and j == i - n) else 0)))
        return cls(n=n, field=field, J=J)

    def idx(self, i: int) -> int:
        """Column index of the signed basis vector e_i (i in +-1..+-n)."""
        if not (0 < abs(i) <= self.n):
            raise OutOfRange(f"basis index {i} out of range for n={self.n}")
        return i - 1 if i > 0 else self.n - i - 1

    def basis_vector(self, i: int):
        v = [0] * (2 * self.n)
        v[self.idx(i)] = 1
        return tuple(v)

    def vector(self, terms):
        """Column vector from (coefficient, signed index) terms."""
        F = self.field
        v = [0] * (2 * self.n)
        for coeff, i in terms:
            j = self.idx(i)
            v[j] = F.add(v[j], F.scalar(coeff))
        return tuple(v)

    def is_symplectic(self, g: Mat) -> bool:
        return g.transpose() * self.J * g == self.J


class _Builder:
    """Accumulates images of signed basis vectors; one assignment each."""

    def __init__(self, space: SympSpace):
        self.space = space
        self.cols: dict[int, tuple] = {}

    def set(self, i: int, terms):
        j = self.space.idx(i)
        if j in self.cols:
            raise BadParam(f"basis vector e_{i} assigned twice")
        self.cols[j] = self.space.vector(terms)

    def fix(self, i: int):
        self.set(i, [(1, i)])

    def fix_pm(self, i: int):
        self.fix(i)
        self.fix(-i)

    def swap_pm(self, i: int, j: int):
        for s in (1, -1):
            self.set(s * i, [(1, s * j)])
            self.set(s * j, [(1, s * i)])

    def cycle_pm(self, i: int, j: int, k: int):
        for s in (1, -1):
            self.set(s * i, [(1, s * j)])
            self.set(s * j, [(1, s * k)])
            self.set(s * k, [(1, s * i)])

    def fill_identity(self):
        for i in range(1, self.space.n + 1):
            for s in (1, -1):
                j = self.space.idx(s * i)
                if j not in self.cols:
                    self.cols[j] = self.space.basis_vector(s * i)

    def build(self, total: bool = True) -> Mat:
        n2 = 2 * self.space.n
        if total and len(self.cols) != n2:
            missing = sorted(set(range(n2)) - set(self.cols))
            raise BadParam(f"unassigned basis columns {missing}")
        return Mat(self.space.field,
                   [[self.cols[j][i] for j in range(n2)] for i in range(n2)])


def _hatgl(space: SympSpace, a_mat: Mat) -> Mat:
    """diag(A, A^{-T}) acting on V + JV."""
    return Mat.block_diag([a_mat, a_mat.inverse().transpose()])


@dataclass(frozen=True)
class GeneratorPair:
    space: SympSpace
    x: Mat
    y: Mat
    n: int
    q: int
    a: FieldElem
    recipe: str

    @property
    def field(self) -> FieldCtx:
        return self.space.field

    def commutator(self) -> Mat:
        return paper_commutator(self.x, self.y)

    def validate(self) -> "GeneratorPair":
        ident = Mat.identity(self.field, 2 * self.n)
        if self.x * self.x != ident:
            raise BadParam("x^2 != I")
        if self.y ** 3 != ident:
            raise BadParam("y^3 != I")
        if not self.space.is_symplectic(self.x) or not self.space.is_symplectic(self.y):
            raise BadParam("generators do not preserve the symplectic form")
        return self


# ---------------------------------------------------------------------------
# the general recipe (n = 4 or n >= 6)
# ---------------------------------------------------------------------------

_ETA1 = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
_ETA2 = ((0, 0, 1), (0, 1, 1), (1, 0, 1))
_ETA3 = ((0, 1, 1), (1, 1, 0), (0, 0, 1))


def _x1_matrix(space: SympSpace, r: int) -> Mat:
    F = space.field
    b = _Builder(space)
    if r != 0:
        return Mat.identity(F, 2 * space.n)
    if F.p > 2:
        b.set(1, [(1, -2)])
        b.set(-2, [(1, 1)])
        b.set(2, [(-1, -1)])
        b.set(-1, [(-1, 2)])
    else:
        b.set(1, [(1, 1), (1, -1)])
        b.set(-1, [(1, -1)])
        b.set(2, [(1, -2)])
        b.set(-2, [(1, 2)])
    b.fill_identity()
    return b.build()


def _x2_action(n: int, field: FieldCtx, a: int) -> Mat:
    """The action A of x_2 on V; x_2 = diag(A, A^{-T})."""
    p = field.p
    m, r = divmod(n, 3)
    cols: dict[int, tuple] = {}

    def e(i, coeff=1):
        v = [0] * n
        v[i - 1] = field.scalar(coeff)
        return v

    def vsum(*vs):
        out = [0] * n
        for v in vs:
            out = [field.add(x, y) for x, y in zip(out, v)]
        return out

    def assign(i, vec):
        if i - 1 in cols:
            raise BadParam(f"x2: e_{i} assigned twice")
        cols[i - 1] = tuple(vec)

    if r == 0:
        assign(1, e(1))
        assign(2, e(2))
    elif r == 1:
        assign(1, e(2))
        assign(2, e(1))
        if n >= 7:
            assign(3, e(3))
    else:
        assign(1, e(4))
        assign(4, e(1))
        assign(2, e(3))
        assign(3, e(2))
    for j in range(0, m - 3):
        assign(3 * j + 5 + r, e(3 * j + 5 + r))
    if n >= 9:
        assign(n - 4, e(n - 4, -1 if n != 11 else 1))
    for j in range(0, m - 1):
        i1, i2 = 3 * j + 3 + r, 3 * j + 4 + r
        assign(i1, e(i2))
        assign(i2, e(i1))
    # gamma block on <e_{n-1}, e_n>
    transposed = n == 4 or (p == 2 and n in (7, 9, 11))
    if transposed:
        # gamma^T = [[-1, a], [0, 1]]
        assign(n - 1, e(n - 1, -1))
        assign(n, vsum(e(n - 1, a), e(n)))
    else:
        # gamma = [[-1, 0], [a, 1]]
        assign(n - 1, vsum(e(n - 1, -1), e(n, a)))
        assign(n, e(n))
    if len(cols) != n:
        missing = sorted(i + 1 for i in set(range(n)) - set(cols))
        raise BadParam(f"x2: unassigned columns {missing}")
    return Mat(field, [[cols[j][i] for j in range(n)] for i in range(n)])


def _y1_matrix(space: SympSpace, r: int) -> Mat:
    F = space.field
    if r == 0:
        return Mat.identity(F, 2 * space.n)
    b = _Builder(space)
    b.set(1, [(1, -1)])
    b.set(-1, [(-1, 1), (-1, -1)])
    b.fill_identity()
    return b.build()


def _mat_t(rows):
    """Transpose of a small tuple-of-tuples literal."""
    return tuple(zip(*rows))


def _y2_action(n: int, field: FieldCtx, q: int) -> Mat:
    """The action B of y_2 on V; y_2 = diag(B, B^{-T})."""
    p = field.p
    m, r = divmod(n, 3)
    cols: dict[int, tuple] = {}

    def assign(i, j):
        if i - 1 in cols:
            raise BadParam(f"y2: e_{i} assigned twice")
        v = [0] * n
        v[j - 1] = 1
        cols[i - 1] = tuple(v)

    for j in range(1, r + 1):
        assign(j, j)
    for j in range(0, m - 1):
        i1, i2, i3 = 3 * j + 1 + r, 3 * j + 2 + r, 3 * j + 3 + r
        assign(i1, i2)
        assign(i2, i3)
        assign(i3, i1)
    if n in (4, 8):
        eta = _ETA1
    elif p == 2 and n in (7, 9, 11):
        eta2 = Mat(field, _ETA2)
        eta = tuple(tuple(v for v in row)
                    for row in eta2.inverse().transpose().rows_raw())
    elif p > 2:
        eta = _ETA1
    elif q > 2:
        eta = _ETA2
    else:
        eta = _ETA3
    base = n - 3
    for jj in range(3):
        col = [0] * n
        for ii in range(3):
            col[base + ii] = field.scalar(eta[ii][jj])
        if base + jj in cols:
            raise BadParam(f"y2: e_{base + jj + 1} assigned twice")
        cols[base + jj] = tuple(col)
    if len(cols) != n:
        missing = sorted(i + 1 for i in set(range(n)) - set(cols))
        raise BadParam(f"y2: unassigned columns {missing}")
    return Mat(field, [[cols[j][i] for j in range(n)] for i in range(n)])


def build_general(n: int, q: int, a, field: FieldCtx | None = None) -> GeneratorPair:
    """The section-2 recipe: x = x1 x2, y = y1 y2."""
    if not (n == 4 or n >= 6):
        raise BadParam("general recipe needs n = 4 or n >= 6")
    if (n, q) == (4, 2):
        raise BadParam("(n, q) = (4, 2) is excluded")
    field = field or standard_field(q)
    if field.q != q:
        raise BadParam("field size mismatch")
    a_val = field.scalar(a)
    if a_val == 0:
        raise BadParam("a must be nonzero")
    space = SympSpace.make(n, field)
    r = n % 3
    x1 = _x1_matrix(space, r)
    x2 = _hatgl(space, _x2_action(n, field, a_val))
    y1 = _y1_matrix(space, r)
    y2 = _hatgl(space, _y2_action(n, field, q))
    assert x1 * x2 == x2 * x1
    assert y1 * y2 == y2 * y1
    pair = GeneratorPair(space=space, x=x1 * x2, y=y1 * y2, n=n, q=q,
                         a=FieldElem(field, a_val), recipe="general")
    return pair.validate()


# ---------------------------------------------------------------------------
# bespoke recipes
# ---------------------------------------------------------------------------

def build_n5(q: int, a, field: FieldCtx | None = None) -> GeneratorPair:
    if q <= 2:
        raise BadParam("n = 5 recipe needs q > 2")
    field = field or standard_field(q)
    a_val = field.scalar(a)
    if a_val == 0:
        raise BadParam("a must be nonzero")
    space = SympSpace.make(5, field)
    bx = _Builder(space)
    bx.swap_pm(1, 3)
    bx.fix_pm(2)
    # gamma^T on <e_4, e_5>, gamma on <e_-4, e_-5>
    bx.set(4, [(-1, 4)])
    bx.set(5, [(a_val, 4), (1, 5)])
    bx.set(-4, [(-1, -4), (a_val, -5)])
    bx.set(-5, [(1, -5)])
    by = _Builder(space)
    for i in (1, 5):
        by.set(i, [(1, -i)])
        by.set(-i, [(-1, i), (-1, -i)])
    by.cycle_pm(2, 3, 4)
    pair = GeneratorPair(space=space, x=bx.build(), y=by.build(), n=5, q=q,
                         a=FieldElem(field, a_val), recipe="n5")
    return pair.validate()


def build_n6_alt(q: int, a, field: FieldCtx | None = None) -> GeneratorPair:
    if q <= 2 or q == 4:
        raise BadParam("alternative n = 6 recipe needs q > 2, q != 4")
    field = field or standard_field(q)
    a_val = field.scalar(a)
    if a_val == 0:
        raise BadParam("a must be nonzero")
    space = SympSpace.make(6, field)
    bx = _Builder(space)
    bx.swap_pm(1, 2)
    bx.swap_pm(3, 4)
    # gamma on <e_5, e_6>, gamma^T on <e_-5, e_-6>
    bx.set(5, [(-1, 5), (a_val, 6)])
    bx.set(6, [(1, 6)])
    bx.set(-5, [(-1, -5)])
    bx.set(-6, [(a_val, -5), (1, -6)])
    by = _Builder(space)
    by.set(1, [(1, 3)])
    by.set(3, [(-1, 1), (-1, 3)])
    by.set(-1, [(-1, -1), (1, -3)])
    by.set(-3, [(-1, -1)])
    by.set(2, [(1, -2)])
    by.set(-2, [(-1, 2), (-1, -2)])
    by.cycle_pm(4, 5, 6)
    pair = GeneratorPair(space=space, x=bx.build(), y=by.build(), n=6, q=q,
                         a=FieldElem(field, a_val), recipe="n6alt")
    return pair.validate()


def build_n8_alt(q: int, a, field: FieldCtx | None = None) -> GeneratorPair:
    if q <= 2:
        raise BadParam("alternative n = 8 recipe needs q > 2")
    field = field or standard_field(q)
    a_val = field.scalar(a)
    if a_val == 0:
        raise BadParam("a must be nonzero")
    space = SympSpace.make(8, field)
    bx = _Builder(space)
    bx.swap_pm(1, 2)
    bx.swap_pm(4, 5)
    bx.fix_pm(3)
    # zeta on <e_6, e_7, e_8>, zeta^T on the negatives
    bx.set(6, [(-1, 6)])
    bx.set(7, [(-1, 7)])
    bx.set(8, [(a_val, 6), (1, 8)])
    bx.set(-6, [(-1, -6), (a_val, -8)])
    bx.set(-7, [(-1, -7)])
    bx.set(-8, [(1, -8)])
    by = _Builder(space)
    for i in (1, 8):
        by.set(i, [(1, -i)])
        by.set(-i, [(-1, i), (-1, -i)])
    by.cycle_pm(2, 3, 4)
    by.cycle_pm(5, 6, 7)
    pair = GeneratorPair(space=space, x=bx.build(), y=by.build(), n=8, q=q,
                         a=FieldElem(field, a_val), recipe="n8alt")
    return pair.validate()


def build(recipe: str, n: int, q: int, a, field: FieldCtx | None = None) -> GeneratorPair:
    if recipe == "general":
        return build_general(n, q, a, field)
    if recipe == "n5":
        if n != 5:
            raise BadParam("recipe n5 is for n = 5")
        return build_n5(q, a, field)
    if recipe == "n6alt":
        if n != 6:
            raise BadParam("recipe n6alt is for n = 6")
        return build_n6_alt(q, a, field)
    if recipe == "n8alt":
        if n != 8:
            raise BadParam("recipe n8alt is for n = 8")
        return build_n8_alt(q, a, field)
    raise BadParam(f"unknown recipe {recipe!r}")


# ---------------------------------------------------------------------------
# tau
# ---------------------------------------------------------------------------

def tau_exponent(recipe: str, n: int, p: int) -> int:
    if recipe == "n5":
        return 6
    if recipe == "n6alt":
        return 5
    if recipe == "n8alt":
        return 4 if p == 2 else 8
    if recipe == "general":
        if n == 7:
            return 8
        if n == 9:
            return 12
        if n == 11:
            return 8 if p == 2 else 16
        if n == 10 or n >= 12:
            if n == 14 and p > 2:
                return 24 * (1 - p)
            return 24
    raise NoTauDefined(f"no tau for recipe {recipe!r}, n={n}")


def tau_of(pair: GeneratorPair) -> Mat:
    e = tau_exponent(pair.recipe, pair.n, pair.field.p)
    return pair.commutator() ** e


# ---------------------------------------------------------------------------
# section-3 block decomposition (n = 10 or n >= 12, general recipe)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomp:
    """[x,y]-invariant decomposition: A_r summands, T(+-i) summands, C+-."""

    a_summands: tuple      # tuple of tuples of signed basis indices
    b_summands: tuple      # tuple of T(+-i) triples
    c_plus: tuple
    c_minus: tuple
    theta: Mat
    epsilon: int

    def all_subspaces(self):
        return self.a_summands + self.b_summands + (self.c_plus, self.c_minus)


def restriction_matrix(g: Mat, space: SympSpace, signed_basis) -> Mat:
    """Matrix of g restricted to the span of the listed basis vectors.

    Raises BadParam if the span is not g-invariant (nonzero residual outside
    the listed coordinates).
    """
    idxs = [space.idx(i) for i in signed_basis]
    idx_set = set(idxs)
    cols = []
    for i in signed_basis:
        img = g.col_raw(space.idx(i))
        for j, v in enumerate(img):
            if v and j not in idx_set:
                raise BadParam(f"span of {signed_basis} is not invariant")
        cols.append([img[j] for j in idxs])
    return Mat(g.field, [[cols[j][i] for j in range(len(idxs))]
                         for i in range(len(idxs))])


def theta_matrix(field: FieldCtx, a, q: int) -> Mat:
    """The matrix of [x,y] on C^+ in the listed basis: theta_1/2/3 by (p, q)."""
    av = field.scalar(a)
    p = field.p
    if p > 2:
        rows = [
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, -1],
            [0, 0, 0, -1, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, field.neg(av), -1, 0],
            [0, 1, 0, field.mul(av, av), av, 0],
        ]
    elif q > 2:
        a1 = field.add(av, 1)
        rows = [
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 1, 0, 1, av, a1],
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 1, 1],
            [0, a1, 0, 0, av, av],
        ]
    else:
        rows = [
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 1],
            [0, 1, 0, 0, 0, 1],
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 1, 1, 1],
            [0, 1, 0, 0, 0, 0],
        ]
    return Mat(field, rows)


def _esum(field: FieldCtx, size: int, plus, minus, eps_entries, eps: int) -> Mat:
    """Matrix from E_{i,j} index lists (1-based): plus - minus + eps*eps_entries."""
    rows = [[0] * size for _ in range(size)]
    for i, j in plus:
        rows[i - 1][j - 1] = field.add(rows[i - 1][j - 1], 1)
    for i, j in minus:
        rows[i - 1][j - 1] = field.sub(rows[i - 1][j - 1], 1)
    for i, j in eps_entries:
        rows[i - 1][j - 1] = field.add(rows[i - 1][j - 1], field.scalar(eps))
    return Mat(field, rows)


def expected_a_matrices(field: FieldCtx, n: int) -> tuple:
    """Displayed matrices of [x,y] on the A_r summands, with (eps, order)."""
    p = field.p
    r = n % 3
    if r == 0:
        if p > 2:
            eps = -1 if n == 12 else 1
            m1 = Mat(field, [
                [0, -1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 0, 1],
                [0, 0, 0, 0, eps, 0],
                [1, 0, 0, 0, 0, 0],
                [0, 0, 0, -1, 0, 0],
            ])
            m2 = Mat(field, [
                [0, 0, 0, 0, 1, 0],
                [0, 0, -1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [-1, 0, 0, 0, 0, 0],
                [0, 0, 0, 0, 0, eps],
                [0, 1, 0, 0, 0, 0],
            ])
            return (eps, ((m1, 9 - 3 * eps), (m2, 9 - 3 * eps)))
        m1 = Mat(field, [[0, 1], [1, 1]])
        m2 = Mat(field, [
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [1, 0, 1, 0],
        ])
        m3 = Mat(field, [
            [0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0, 0],
        ])
        return (1, ((m1, 3), (m2, 4), (m3, 6)))
    if r == 1:
        eps = -1 if (n == 10 and p > 2) else 1
        m = _esum(field, 8,
                  [(1, 2), (2, 7), (5, 6), (8, 1)],
                  [(2, 3), (4, 5), (6, 3), (8, 5)],
                  [(3, 4), (7, 8)], eps)
        return (eps, ((m, 6 - 2 * eps),))
    eps = -1 if (n == 14 and p > 2) else 1
    m = _esum(field, 16,
              [(1, 7), (3, 5), (4, 11), (5, 6), (6, 2), (8, 4), (9, 15),
               (10, 1), (11, 13), (13, 14), (14, 10), (16, 12)],
              [(2, 9), (4, 3), (10, 9), (12, 3)],
              [(7, 8), (15, 16)], eps)
    return (eps, ((m, 12 - 4 * eps),))


def block_decomposition(pair: GeneratorPair) -> BlockDecomp:
    n = pair.n
    if pair.recipe != "general" or not (n == 10 or n >= 12):
        raise OutOfRange("decomposition needs the general recipe, n = 10 or n >= 12")
    field = pair.field
    p = field.p
    m, r = divmod(n, 3)
    if r == 0:
        if p > 2:
            a_summands = ((2, 3, 4, 6, 7, -1), (1, -2, -3, -4, -6, -7))
        else:
            a_summands = ((1, -1), (3, 4, -3, -4), (2, 6, 7, -2, -6, -7))
        b_starts = [5 + 3 * j for j in range(0, m - 4)]
    elif r == 1:
        a_summands = ((1, 2, 4, 5, -1, -2, -4, -5),)
        b_starts = [3 + 3 * j for j in range(0, m - 3)]
    else:
        a_summands = ((1, 2, 3, 4, 5, 6, 8, 9,
                       -1, -2, -3, -4, -5, -6, -8, -9),)
        b_starts = [7 + 3 * j for j in range(0, m - 4)]
    b_summands = []
    for i in b_starts:
        b_summands.append((i, i + 4, i + 5))
        b_summands.append((-i, -(i + 4), -(i + 5)))
    c_plus = (n - 7, n - 4, n - 3, n - 2, n - 1, n)
    c_minus = tuple(-i for i in c_plus)
    eps, _ = expected_a_matrices(field, n)
    decomp = BlockDecomp(
        a_summands=a_summands,
        b_summands=tuple(b_summands),
        c_plus=c_plus,
        c_minus=c_minus,
        theta=theta_matrix(field, pair.a, pair.q),
        epsilon=eps,
    )
    # structural sanity: the subspaces partition the 2n coordinates
    seen = []
    for sub in decomp.all_subspaces():
        seen.extend(sub)
    assert sorted(pair.space.idx(i) for i in seen) == list(range(2 * n))
    return decomp


# ---------------------------------------------------------------------------
# auxiliary matrices (root subgroups, base change, displayed generator triples)
# ---------------------------------------------------------------------------

def _iv(field, k: int) -> int:
    """Embed the rational integer k into the prime subfield (packed value)."""
    return k % field.p


def _fr(field, num, den):
    d = _iv(field, den)
    if not d:
        raise BadParam(f"{den} vanishes in characteristic {field.p}")
    return field.mul(_iv(field, num), field.inv(d))


def hat_embed_bottom(field, n: int, small: Mat) -> Mat:
    """diag(I_{n-k}, small, I_{n-k}, small^{-T}) acting on the 2n-space."""
    k = small.rows
    if k > n:
        raise BadParam("block larger than n")
    top = Mat.block_diag([Mat.identity(field, n - k), small])
    return Mat.block_diag([top, top.inverse().transpose()])


def small_r(field, a, i: int, beta) -> Mat:
    """The root-subgroup parameter matrices r_1..r_4(beta)."""
    av = field.scalar(a)
    bv = field.scalar(beta)
    if field.p == 2:
        raise BadParam("this family needs odd q")
    m = field.mul
    t3 = m(bv, _fr(field, 3, 1))            # 3*beta
    t3a = field.mul(t3, field.inv(av))      # 3*beta/a
    t9a2 = field.mul(_iv(field, 9), field.mul(bv, field.inv(m(av, av))))
    one = field.one
    if i == 1:
        return Mat(field, [
            [1, 0, 0, 0],
            [field.neg(t3a), field.add(one, t3a), t9a2, 0],
            [bv, field.neg(bv), field.sub(one, t3a), 0],
            [0, 0, 0, 1],
        ])
    if i == 2:
        return Mat(field, [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [bv, field.neg(bv), field.neg(t3a), 1],
        ])
    ab = m(av, bv)
    if i == 3:
        return Mat(field, [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, field.add(one, t3a), field.neg(t3a), field.neg(t9a2), 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, bv, field.neg(bv), field.sub(one, t3a), 0],
            [0, 0, field.neg(ab), ab, t3, 1],
        ])
    if i == 4:
        return Mat(field, [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, field.neg(bv), field.sub(one, t3a), 0, field.neg(ab), field.neg(bv)],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, t3a, t9a2, 0, t3, field.add(one, t3a)],
        ])
    raise BadParam(f"no root matrix r_{i}")


def phat_base_change(field, a, n: int) -> Mat:
    """The 2n x 2n base change diag(I, P, I, P^{-T}) with P unipotent 12 x 12."""
    if n < 12:
        raise BadParam("base change needs n >= 12")
    if field.p == 2:
        raise BadParam("this family needs odd q")
    av = field.scalar(a)
    a2 = field.mul(av, av)
    a3 = field.mul(a2, av)
    a5 = field.mul(a3, a2)
    n1 = field.add(a3, _iv(field, 3))
    n2 = field.add(a3, _iv(field, 6))
    n3 = field.add(a3, _iv(field, 9))
    n4 = field.add(n1, n2)
    den = field.sub(field.mul(a3, a3), _iv(field, 27))
    if not den:
        raise BadParam("a^6 = 27")
    d = field.inv(den)
    m = field.mul
    a2n4, a2n3 = m(a2, n4), m(a2, n3)
    t3n4, t3n3 = m(_iv(field, 3), n4), m(_iv(field, 3), n3)
    t3an2, t3an1 = m(_iv(field, 3), m(av, n2)), m(_iv(field, 3), m(av, n1))
    t3a3 = m(_iv(field, 3), a3)
    t9a = m(_iv(field, 9), av)
    at_rows = [
        [a2n4, t3n4, t3an2, t3an1, a2n3, t3n3, t3a3, t9a, a5],
        [t3an2, a2n4, t3n4, t3n3, t3an1, a2n3, a5, t3a3, t9a],
        [t3n4, t3an2, a2n4, a2n3, t3n3, t3an1, t9a, a5, t3a3],
    ]
    p_rows = [[0] * 12 for _ in range(12)]
    for j in range(12):
        p_rows[j][j] = 1
    for i in range(9):
        for j in range(3):
            p_rows[3 + i][j] = m(d, at_rows[j][i])
    return hat_embed_bottom(field, n, Mat(field, p_rows))


def g3_displayed(field, a, eq: str) -> tuple:
    """The three displayed 3 x 3 generator matrices for each small-group check."""
    av = field.scalar(a)
    m = field.mul
    a2 = m(av, av)
    a3 = m(a2, av)
    one = field.one

    def M(rows):
        return Mat(field, rows)

    e12 = M([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    if eq == "G3":
        c = m(_iv(field, 64), a3)
        g2 = M([[1, 0, 0], [field.neg(c), 1, 0], [0, 0, 1]])
        a3m1 = field.sub(a3, one)
        g3 = M([
            [_iv(field, -7), 1, a3m1],
            [field.neg(c), field.add(one, m(_iv(field, 8), a3)),
             m(m(_iv(field, 8), a3), a3m1)],
            [_iv(field, 64), _iv(field, -8),
             field.sub(_iv(field, 9), m(_iv(field, 8), a3))],
        ])
        return (e12, g2, g3)
    if eq == "G39":
        c = m(_iv(field, 16), a3)
        a3p1 = field.add(a3, one)
        g2 = M([
            [field.sub(one, m(_iv(field, 4), a3)), 1, field.neg(a3p1)],
            [c, _iv(field, -3), m(_iv(field, 4), a3p1)],
            [c, _iv(field, -4), field.add(one, m(_iv(field, 4), a3p1))],
        ])
        g3 = M([[1, 0, 0], [c, 1, 0], [0, 0, 1]])
        return (e12, g2, g3)
    if eq == "39":
        ap2 = field.add(av, _iv(field, 2))
        if not ap2:
            raise BadParam("a = -2")
        beta = m(field.sub(av, _iv(field, 2)),
                 field.add(m(_iv(field, 7), a2),
                           field.add(m(_iv(field, 8), av), _iv(field, 4))))
        inv_ap2 = field.inv(ap2)
        c = m(m(_iv(field, 2), a3), ap2)
        g2 = M([
            [field.add(one, m(m(_iv(field, 4), a3), inv_ap2)), 1,
             field.neg(m(beta, field.inv(m(m(_iv(field, 4), a2), ap2))))],
            [field.neg(c), field.sub(one, m(m(ap2, ap2), _fr(field, 1, 2))),
             m(m(ap2, beta), field.inv(m(_iv(field, 8), a2)))],
            [m(m(_iv(field, 8), a5 := m(a3, a2)), inv_ap2), m(_iv(field, 2), a2),
             field.sub(one, m(beta, field.inv(m(_iv(field, 2), ap2))))],
        ])
        g3 = M([[1, 0, 0], [field.neg(c), 1, 0], [0, 0, 1]])
        return (e12, g2, g3)
    if eq == "G311":
        ap2 = field.add(av, _iv(field, 2))
        if not ap2:
            raise BadParam("a = -2")
        beta = m(field.add(m(_iv(field, 3), av), _iv(field, 2)),
                 field.add(m(_iv(field, 3), a2), _iv(field, 4)))
        inv_ap2 = field.inv(ap2)
        c = m(m(_iv(field, 32), a3), ap2)
        g1 = M([[1, c, 0], [0, 1, 0], [0, 0, 1]])
        g2 = M([
            [field.sub(one, m(m(_iv(field, 16), a3), inv_ap2)), c,
             field.neg(m(m(_iv(field, 2), m(av, beta)), inv_ap2))],
            [1, field.sub(one, m(_iv(field, 2), m(ap2, ap2))),
             m(beta, field.inv(m(_iv(field, 8), a2)))],
            [m(m(_iv(field, 16), a2), inv_ap2),
             field.neg(m(m(_iv(field, 32), a2), ap2)),
             field.add(one, m(m(_iv(field, 2), beta), inv_ap2))],
        ])
        g3 = M([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
        return (g1, g2, g3)
    if eq == "SL3-5":
        a4 = m(a2, a2)
        g1 = M([[1, 0, 0], [0, 1, 0], [a4, 0, 1]])
        g2 = M([[1, 0, 0], [0, 1, field.neg(a2)], [0, 0, 1]])
        return (g1, g2, e12)
    raise BadParam(f"unknown generator triple {eq!r}")


def aux_matrices(field, a, kind: str, *, n=None, i=None, beta=None, eq="G3"):
    """Dispatch for the auxiliary matrices used by the small-group claims."""
    if kind == "Phat":
        return phat_base_change(field, a, n)
    if kind == "Ri":
        return small_r(field, a, i, beta)
    if kind == "G3_action":
        return g3_displayed(field, a, eq)
    if kind == "theta":
        return theta_matrix(field, a, field.q)
    raise BadParam(f"unknown matrix kind {kind!r}")
