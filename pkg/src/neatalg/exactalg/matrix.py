"""Dense exact matrices, the division-free characteristic polynomial, and
row-echelon linear algebra (kernels, spans, coordinates)."""

from __future__ import annotations

from .fields import Field
from .poly import Poly


class MatrixError(ValueError):
    pass


class Matrix:
    """Immutable dense matrix over a field; rows stored as a tuple of tuples."""

    __slots__ = ("field", "rows", "_hash")

    def __init__(self, field: Field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = None

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def zeros(cls, F, n, m=None):
        m = n if m is None else m
        z = F.zero
        return cls(F, [[z] * m for _ in range(n)])

    @classmethod
    def identity(cls, F, n):
        return cls(F, [[F.one if i == j else F.zero for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, F, n, i, j, c=None):
        """``c * E_ij``."""
        rows = [[F.zero] * n for _ in range(n)]
        rows[i][j] = F.one if c is None else c
        return cls(F, rows)

    @classmethod
    def from_ints(cls, F, rows):
        return cls(F, [[F.from_int(x) for x in r] for r in rows])

    @classmethod
    def diag(cls, F, entries):
        n = len(entries)
        return cls(F, [[entries[i] if i == j else F.zero for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, F, *blocks):
        n = sum(b.nrows for b in blocks)
        rows = [[F.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, r in enumerate(b.rows):
                rows[off + i][off: off + b.ncols] = r
            off += b.nrows
        return cls(F, rows)

    @classmethod
    def from_flat(cls, F, flat, n):
        return cls(F, [flat[i * n:(i + 1) * n] for i in range(n)])

    def flat(self):
        return [x for r in self.rows for x in r]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        F = self.field
        return "[" + "; ".join(" ".join(F.fmt(x) for x in r) for r in self.rows) + "]"

    def pretty(self):
        F = self.field
        cells = [[F.fmt(x) for x in r] for r in self.rows]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)

    def __add__(self, other):
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows])

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise MatrixError("shape mismatch")
        dot = self.field.dot
        cols = list(zip(*other.rows))
        return Matrix(self.field, [[dot(r, c) for c in cols] for r in self.rows])

    def __pow__(self, n):
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, v):
        dot = self.field.dot
        return [dot(r, v) for r in self.rows]

    @property
    def T(self):
        return Matrix(self.field, list(zip(*self.rows)))

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.rows for x in r)

    def is_square(self):
        return self.nrows == self.ncols

    def trace(self):
        return self.field.sum(self.rows[i][i] for i in range(self.nrows))

    def submatrix(self, rows, cols):
        return Matrix(self.field, [[self.rows[i][j] for j in cols] for i in rows])

    def rank(self):
        return len(rref(self.field, [list(r) for r in self.rows])[1])

    def det(self):
        return det(self.field, self.rows)

    def inverse(self):
        F = self.field
        n = self.nrows
        aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(self.rows)]
        red, piv = rref(F, aug)
        if piv[:n] != list(range(n)):
            raise MatrixError("matrix is singular")
        return Matrix(F, [r[n:] for r in red[:n]])

    def map(self, field, fn):
        return Matrix(field, [[fn(x) for x in r] for r in self.rows])

    def polyval(self, p: Poly):
        F = self.field
        n = self.nrows
        acc = Matrix.zeros(F, n)
        one = Matrix.identity(F, n)
        for c in reversed(p.coeffs):
            acc = acc * self + one.scale(c)
        return acc


def det(F: Field, rows):
    """Determinant by Gaussian elimination (fields only)."""
    a = [list(r) for r in rows]
    n = len(a)
    result = F.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not F.is_zero(a[i][k])), None)
        if piv is None:
            return F.zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = F.neg(result)
        pk = a[k][k]
        result = F.mul(result, pk)
        inv = F.inv(pk)
        for i in range(k + 1, n):
            f = F.mul(a[i][k], inv)
            if not F.is_zero(f):
                ai, ak = a[i], a[k]
                for j in range(k, n):
                    ai[j] = F.sub(ai[j], F.mul(f, ak[j]))
    return result


def char_poly(M: Matrix) -> Poly:
    """Characteristic polynomial det(X*I - M) by Berkowitz's division-free algorithm."""
    if not M.is_square():
        raise MatrixError("char_poly needs a square matrix")
    F = M.field
    a = M.rows
    n = M.nrows
    vec = [F.one]  # big-endian coefficients of the trailing principal submatrix
    for k in range(n - 1, -1, -1):
        m = n - k
        R = a[k][k + 1:]
        C = [a[i][k] for i in range(k + 1, n)]
        sub = [r[k + 1:] for r in a[k + 1:]]
        col = [F.one, F.neg(a[k][k])]
        v = C
        for _ in range(m - 1):
            col.append(F.neg(F.dot(R, v)))
            v = [F.dot(r, v) for r in sub]
        new = []
        for i in range(m + 1):
            acc = F.zero
            for j in range(min(i, m - 1) + 1):
                acc = F.add(acc, F.mul(col[i - j], vec[j]))
            new.append(acc)
        vec = new
    return Poly(F, list(reversed(vec)))


def rref(F: Field, rows):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if not F.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        if a[r][c] != F.one:
            a[r] = [F.mul(inv, x) for x in a[r]]
        pr = a[r]
        for i in range(len(a)):
            if i != r:
                f = a[i][c]
                if not F.is_zero(f):
                    a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(F: Field, rows, ncols: int):
    """Basis of {x : rows * x = 0} (each basis vector has length ncols)."""
    red, pivots = rref(F, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for r, p in zip(red, pivots):
            v[p] = F.neg(r[f])
        basis.append(v)
    return basis


class Subspace:
    """A subspace of F^n held in reduced row echelon form.

    Coordinates with respect to the echelon basis are read off the pivot columns,
    so membership tests and coordinate extraction are cheap.
    """

    __slots__ = ("field", "n", "basis", "pivots")

    def __init__(self, F: Field, vectors, n: int):
        self.field = F
        self.n = n
        self.basis, self.pivots = rref(F, [list(v) for v in vectors]) if vectors else ([], [])

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, v):
        return [v[p] for p in self.pivots]

    def combine(self, coords):
        F = self.field
        out = [F.zero] * self.n
        for c, b in zip(coords, self.basis):
            if not F.is_zero(c):
                out = [F.add(x, F.mul(c, y)) for x, y in zip(out, b)]
        return out

    def contains(self, v) -> bool:
        return list(v) == self.combine(self.coords(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def intersect(self, other: "Subspace") -> "Subspace":
        F = self.field
        # solve sum a_i u_i = sum b_j w_j
        k, m = self.dim, other.dim
        if k == 0 or m == 0:
            return Subspace(F, [], self.n)
        cols = [list(u) for u in self.basis] + [[F.neg(x) for x in w] for w in other.basis]
        system = [list(r) for r in zip(*cols)]
        sols = nullspace(F, system, k + m)
        return Subspace(F, [self.combine(s[:k]) for s in sols], self.n)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.basis + other.basis, self.n)
