"""Dense exact matrices over a FieldCtx.

Basis convention, fixed once for the whole package: coordinates are indexed
e_1, ..., e_n, e_{-1}, ..., e_{-n} in that order, matrices act on column
vectors from the left, and the symplectic Gram matrix is
J = [[0, -I_n], [I_n, 0]].

char_poly runs Hessenberg reduction over the field; a division-free
Berkowitz implementation is kept alongside as an independent cross-check
for small dimensions.  similarity_invariants computes the Smith normal form
of tI - M over F_q[t] with the lowest-degree pivot rule (ties by position).
"""

from __future__ import annotations

from .errors import MixedFields, NotSquare, ShapeMismatch, SingularMatrix
from .gf import FieldCtx, FieldElem
from .poly import Poly


class Mat:
    """Immutable dense matrix; entries are packed field values."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldCtx, rows):
        data = []
        for row in rows:
            vals = []
            for v in row:
                if isinstance(v, FieldElem):
                    if v.ctx != field:
                        raise MixedFields("entry from a different field")
                    vals.append(v.val)
                else:
                    vals.append(field.scalar(v))
            data.append(tuple(vals))
        if data and any(len(r) != len(data[0]) for r in data):
            raise ShapeMismatch("ragged rows")
        self.field = field
        self.data = tuple(data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(field, [[0] * cols for _ in range(rows)])

    @classmethod
    def from_function(cls, field, rows, cols, fn):
        return cls(field, [[fn(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def block_diag(cls, blocks):
        field = blocks[0].field
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            if b.field != field:
                raise MixedFields("blocks over different fields")
            for i in range(b.rows):
                out[r + i][c:c + b.cols] = list(b.data[i])
            r += b.rows
            c += b.cols
        return cls(field, out)

    @classmethod
    def column(cls, field, vec):
        return cls(field, [[v] for v in vec])

    # -- basics ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def rows_raw(self):
        return self.data

    def col_raw(self, j):
        return tuple(row[j] for row in self.data)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.data == other.data)

    def __hash__(self):
        return hash((id(self.field), self.data))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols} over {self.field.spec_string})"

    def is_identity(self) -> bool:
        return self == Mat.identity(self.field, self.rows) if self.rows == self.cols else False

    def is_square(self) -> bool:
        return self.rows == self.cols

    def dump(self) -> str:
        """Text form: header "rows cols field-spec", then one row per line."""
        lines = [f"{self.rows} {self.cols} {self.field.spec_string}"]
        for row in self.data:
            lines.append(",".join(self.field.elem_string(v) for v in row))
        return "\n".join(lines)

    # -- arithmetic --------------------------------------------------------

    def _check_same(self, other):
        if self.field != other.field:
            raise MixedFields("matrices over different fields")

    def __add__(self, other):
        self._check_same(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition shape mismatch")
        add = self.field.add
        return Mat(self.field, [[add(a, b) for a, b in zip(ra, rb)]
                                for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        neg = self.field.neg
        return Mat(self.field, [[neg(v) for v in row] for row in self.data])

    def scale(self, c):
        mul = self.field.mul
        cv = self.field.scalar(c)
        return Mat(self.field, [[mul(cv, v) for v in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        self._check_same(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        F = self.field
        bt = list(zip(*other.data))  # columns of other
        if F.is_prime_field:
            p = F.p
            out = [tuple(sum(a * b for a, b in zip(row, col)) % p for col in bt)
                   for row in self.data]
            return Mat(F, out)
        mul, add = F.mul, F.add
        out = []
        for row in self.data:
            orow = []
            for col in bt:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                orow.append(acc)
            out.append(tuple(orow))
        return Mat(F, out)

    __rmul__ = scale

    def apply(self, vec):
        """Image of a column vector given as a sequence; returns a tuple."""
        F = self.field
        vals = [F.scalar(v) for v in vec]
        if len(vals) != self.cols:
            raise ShapeMismatch("vector length mismatch")
        mul, add = F.mul, F.add
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, vals):
                if a and b:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int):
        if not self.is_square():
            raise NotSquare("powers need a square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Mat.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self):
        return Mat(self.field, list(zip(*self.data)))

    def trace(self) -> FieldElem:
        if not self.is_square():
            raise NotSquare("trace needs a square matrix")
        F = self.field
        acc = 0
        for i in range(self.rows):
            acc = F.add(acc, self.data[i][i])
        return FieldElem(F, acc)

    # -- elimination-based operations --------------------------------------

    def _echelon(self, augment=None):
        """Row echelon form; returns (rows, pivot cols, det, aug rows)."""
        F = self.field
        mul, add, inv, neg, sub = F.mul, F.add, F.inv, F.neg, F.sub
        m = [list(r) for r in self.data]
        aug = [list(r) for r in augment.data] if augment is not None else None
        det = 1
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            if pr != r:
                m[r], m[pr] = m[pr], m[r]
                if aug:
                    aug[r], aug[pr] = aug[pr], aug[r]
                det = neg(det)
            pv = m[r][c]
            det = mul(det, pv)
            pv_inv = inv(pv)
            m[r] = [mul(pv_inv, v) for v in m[r]]
            if aug:
                aug[r] = [mul(pv_inv, v) for v in aug[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    factor = m[i][c]
                    m[i] = [sub(v, mul(factor, w)) for v, w in zip(m[i], m[r])]
                    if aug:
                        aug[i] = [sub(v, mul(factor, w)) for v, w in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots, det, aug

    def rank(self) -> int:
        _, pivots, _, _ = self._echelon()
        return len(pivots)

    def det(self) -> FieldElem:
        if not self.is_square():
            raise NotSquare("determinant needs a square matrix")
        _, pivots, det, _ = self._echelon()
        if len(pivots) < self.rows:
            return FieldElem(self.field, 0)
        return FieldElem(self.field, det)

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise NotSquare("inverse needs a square matrix")
        _, pivots, _, aug = self._echelon(Mat.identity(self.field, self.rows))
        if len(pivots) < self.rows:
            raise SingularMatrix("matrix is singular")
        return Mat(self.field, aug)

    def kernel(self):
        """Basis of the right null space, reduced-echelon convention."""
        F = self.field
        m, pivots, _, _ = self._echelon()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [0] * self.cols
            vec[fc] = 1
            for r, pc in enumerate(pivots):
                vec[pc] = F.neg(m[r][fc])
            basis.append(tuple(vec))
        return basis

    def solve(self, rhs):
        """One solution of self * x = rhs (rhs a sequence), or None."""
        F = self.field
        aug = Mat(F, [[v] for v in rhs])
        m, pivots, _, am = self._echelon(aug)
        for i in range(len(pivots), self.rows):
            if am[i][0] != 0:
                return None
        x = [0] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = am[r][0]
        return tuple(x)


# ---------------------------------------------------------------------------
# derived operations
# ---------------------------------------------------------------------------

def paper_commutator(x: Mat, y: Mat) -> Mat:
    """The commutator convention [x, y] = x y^{-1} x y."""
    return x * y.inverse() * x * y


def char_poly(m: Mat) -> Poly:
    """Monic characteristic polynomial det(tI - M) via Hessenberg reduction."""
    if not m.is_square():
        raise NotSquare("characteristic polynomial needs a square matrix")
    F = m.field
    n = m.rows
    if n == 0:
        return Poly.one(F)
    mul, add, sub, inv, neg = F.mul, F.add, F.sub, F.inv, F.neg
    h = [list(r) for r in m.data]
    # similarity reduction to upper Hessenberg form
    for c in range(n - 2):
        pr = next((i for i in range(c + 1, n) if h[i][c]), None)
        if pr is None:
            continue
        if pr != c + 1:
            h[c + 1], h[pr] = h[pr], h[c + 1]
            for i in range(n):
                h[i][c + 1], h[i][pr] = h[i][pr], h[i][c + 1]
        pv_inv = inv(h[c + 1][c])
        for i in range(c + 2, n):
            if h[i][c]:
                factor = mul(h[i][c], pv_inv)
                h[i] = [sub(v, mul(factor, w)) for v, w in zip(h[i], h[c + 1])]
                for r in range(n):
                    h[r][c + 1] = add(h[r][c + 1], mul(factor, h[r][i]))
    # charpoly recurrence on the Hessenberg form
    polys = [[1]]  # p_0 = 1, coefficient lists constant-first
    for k in range(1, n + 1):
        akk = h[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [0] * (len(prev) + 1)
        for i, cv in enumerate(prev):  # (t - a_kk) * p_{k-1}
            cur[i + 1] = add(cur[i + 1], cv)
            cur[i] = sub(cur[i], mul(akk, cv))
        beta = 1
        for i in range(k - 1, 0, -1):
            beta = mul(beta, h[i][i - 1])
            if beta == 0:
                break
            coef = mul(beta, h[i - 1][k - 1])
            if coef:
                for jj, cv in enumerate(polys[i - 1]):
                    cur[jj] = sub(cur[jj], mul(coef, cv))
        polys.append(cur)
    return Poly(F, polys[n])


def char_poly_berkowitz(m: Mat) -> Poly:
    """Division-free characteristic polynomial (Berkowitz); cross-check oracle."""
    if not m.is_square():
        raise NotSquare("characteristic polynomial needs a square matrix")
    F = m.field
    n = m.rows
    mul, add, sub = F.mul, F.add, F.sub
    if n == 0:
        return Poly.one(F)
    # vect holds the coefficients of det(tI - M_k), highest degree first
    vect = [1, F.neg(m.data[0][0])]
    for k in range(1, n):
        a = m.data[k][k]
        row = m.data[k][:k]       # R: row vector
        col = [m.data[i][k] for i in range(k)]  # C: column vector
        sub_m = [r[:k] for r in m.data[:k]]
        # Toeplitz column: [1, -a, -R C, -R M C, -R M^2 C, ...]
        toeplitz = [1, F.neg(a)]
        vcur = col
        for _ in range(k):
            dot = 0
            for x, yv in zip(row, vcur):
                dot = add(dot, mul(x, yv))
            toeplitz.append(F.neg(dot))
            vnext = []
            for i in range(k):
                acc = 0
                for j in range(k):
                    acc = add(acc, mul(sub_m[i][j], vcur[j]))
                vnext.append(acc)
            vcur = vnext
        new = [0] * (k + 2)
        for i, tv in enumerate(toeplitz[:k + 2]):
            if tv:
                for j, vv in enumerate(vect):
                    if i + j < k + 2:
                        new[i + j] = add(new[i + j], mul(tv, vv))
        vect = new
    return Poly(F, list(reversed(vect)))


def eigenspace(m: Mat, lam, embedding=None):
    """Kernel basis of (M - lam I); lam may live in an extension via embedding."""
    if not m.is_square():
        raise NotSquare("eigenspace needs a square matrix")
    if embedding is not None:
        m = embedding.map_matrix(m)
        F = embedding.big
    else:
        F = m.field
    lam_v = F.scalar(lam) if not isinstance(lam, FieldElem) else lam.val
    shifted = m - Mat.identity(F, m.rows).scale(lam_v)
    return shifted.kernel()


def in_span(basis, vec, field) -> bool:
    """Membership of vec in the span of the basis vectors (all sequences)."""
    if not basis:
        return all(field.scalar(v) == 0 for v in vec)
    mat = Mat(field, [list(b) for b in zip(*basis)])
    return mat.solve([field.scalar(v) for v in vec]) is not None


def same_span(basis_a, basis_b, field) -> bool:
    return (all(in_span(basis_b, v, field) for v in basis_a)
            and all(in_span(basis_a, v, field) for v in basis_b))


# ---------------------------------------------------------------------------
# Smith normal form over F_q[t]
# ---------------------------------------------------------------------------

def similarity_invariants(m: Mat):
    """Nonconstant invariant factors of tI - M, in divisibility order."""
    if not m.is_square():
        raise NotSquare("similarity invariants need a square matrix")
    F = m.field
    n = m.rows
    t = Poly.t(F)
    a = [[(t if i == j else Poly.zero(F)) - Poly(F, [m.data[i][j]])
          for j in range(n)] for i in range(n)]

    def min_entry(k):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                e = a[i][j]
                if not e.is_zero() and (best is None or e.degree < a[best[0]][best[1]].degree):
                    best = (i, j)
        return best

    for k in range(n):
        while True:
            pos = min_entry(k)
            if pos is None:
                break
            i0, j0 = pos
            if i0 != k:
                a[k], a[i0] = a[i0], a[k]
            if j0 != k:
                for row in a:
                    row[k], row[j0] = row[j0], row[k]
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    q, _ = divmod(a[i][k], pivot)
                    if not q.is_zero():
                        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if not a[i][k].is_zero():
                        dirty = True
            for j in range(k + 1, n):
                if not a[k][j].is_zero():
                    q, _ = divmod(a[k][j], pivot)
                    if not q.is_zero():
                        for i2 in range(n):
                            a[i2][j] = a[i2][j] - q * a[i2][k]
                    if not a[k][j].is_zero():
                        dirty = True
            if dirty:
                continue
            # pivot must divide everything below-right; if not, fold that row in
            fixed = True
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if not (a[i][j] % pivot).is_zero():
                        a[k] = [x + y for x, y in zip(a[k], a[i])]
                        fixed = False
                        break
                if not fixed:
                    break
            if fixed:
                break
    diag = [a[i][i].monic() for i in range(n) if not a[i][i].is_zero()]
    diag.sort(key=lambda p: (p.degree, p.coeffs))
    return [p for p in diag if p.degree > 0]
