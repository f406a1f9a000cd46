"""Characteristic-polynomial invariants of symmetrized elements, the capacity-2
quadratic form, and the decomposition A = C (+) C' along a quadratic subalgebra."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exactalg import Matrix, Poly, PolyError, QuadraticExtension, Subspace, char_poly, nullspace, poly_sqrt_monic, rref
from .algebra import SYMPLECTIC, UNITARY, AlgebraError, AlgebraWithInvolution, Subalgebra
from .models import centralizer


class ChiError(AlgebraError):
    pass


def reduced_char_poly(A: AlgebraWithInvolution, a: Matrix) -> Poly:
    return A.reduced_char_poly(a)


def coefficient_forms(chi: Poly):
    """c_1..c_d with chi = X^d - c_1 X^(d-1) + c_2 X^(d-2) - ..."""
    F = chi.field
    d = chi.degree
    return [chi[d - i] if i % 2 == 0 else F.neg(chi[d - i]) for i in range(1, d + 1)]


def chi(A: AlgebraWithInvolution, a: Matrix, check: bool = True):
    """Return ``(chi_a, [c_1, ..., c_d])`` for ``a`` in Syms(sigma)."""
    if check and not A.in_syms(a):
        raise ChiError("element is not in Syms(sigma)")
    prd = A.reduced_char_poly(a)
    F = A.field
    if A.type == UNITARY and isinstance(prd.field, QuadraticExtension):
        K = prd.field
        if not all(K.in_base(c) for c in prd.coeffs):
            raise ChiError("reduced characteristic polynomial has coefficients outside F")
        prd = Poly(F, [c[0] for c in prd.coeffs])
    if A.type == SYMPLECTIC:
        try:
            poly = poly_sqrt_monic(prd)
        except PolyError:
            raise ChiError("reduced characteristic polynomial is not a square; element not in Symd") from None
    else:
        poly = prd
    return poly, coefficient_forms(poly)


def chi_poly(A, a, check=True) -> Poly:
    return chi(A, a, check)[0]


def c_form(A, a, i: int, check=True):
    return chi(A, a, check)[1][i - 1]


@dataclass
class QuadraticFormData:
    """A quadratic form on span(space_basis): values q(v_i) and the polar Gram matrix."""

    algebra: AlgebraWithInvolution
    space_basis: list
    values: list
    polar: Matrix
    meta: dict = field(default_factory=dict)

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return len(self.space_basis)

    def evaluate(self, xs):
        """q(sum x_i v_i) from the stored values and polar form."""
        F = self.field
        acc = F.zero
        for i, xi in enumerate(xs):
            acc = F.add(acc, F.mul(F.mul(xi, xi), self.values[i]))
            for j in range(i + 1, len(xs)):
                acc = F.add(acc, F.mul(F.mul(xi, xs[j]), self.polar[i, j]))
        return acc

    def vector(self, xs) -> Matrix:
        acc = Matrix.zeros(self.field, self.algebra.n)
        for x, v in zip(xs, self.space_basis):
            acc = acc + v.scale(x)
        return acc

    def radical_polar(self):
        """rad(b_q) as coordinate vectors."""
        F = self.field
        return nullspace(F, [list(r) for r in self.polar.rows], self.dim)

    def radical(self):
        """rad(q) = {x in rad(b_q) : q(x) = 0} as coordinate vectors."""
        F = self.field
        rb = self.radical_polar()
        if not rb:
            return []
        if F.characteristic != 2:
            # q = b_q(x, x) / 2 vanishes on rad(b_q)
            return rb
        # on rad(b_q), q(sum y_i r_i) = (sum y_i sqrt(q(r_i)))^2 is Frobenius-semilinear
        roots = [F.sqrt_char2(self.evaluate(r)) for r in rb]
        ker = nullspace(F, [roots], len(rb))
        return [[F.sum(F.mul(k[i], rb[i][j]) for i in range(len(rb))) for j in range(self.dim)] for k in ker]

    def is_regular(self):
        return not self.radical()

    def is_nondegenerate(self):
        return self.is_regular() and len(self.radical_polar()) <= 1


def cap2_form(A: AlgebraWithInvolution) -> QuadraticFormData:
    """c_2 restricted to V = Syms(sigma) for capacity 2."""
    if A.capacity != 2:
        raise AlgebraError("cap2_form needs capacity 2")
    F = A.field
    V = A.elements_of(A.syms)
    q = [c_form(A, v, 2, check=False) for v in V]
    k = len(V)
    polar = [[F.zero] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            b = F.sub(F.sub(c_form(A, V[i] + V[j], 2, check=False), q[i]), q[j])
            polar[i][j] = polar[j][i] = b
        polar[i][i] = F.mul(F.from_int(2), q[i])
    data = QuadraticFormData(A, V, q, Matrix(F, polar))
    data.meta["rad_polar_dim"] = len(data.radical_polar())
    data.meta["rad_dim"] = len(data.radical())
    if data.meta["rad_dim"] != 0 or data.meta["rad_polar_dim"] > 1:
        raise AlgebraError("c_2 is degenerate; capacity-2 invariant violated")
    return data


def conjugate_cap2(A: AlgebraWithInvolution, x: Matrix) -> Matrix:
    """x-bar = c_1(x) - x."""
    return A.scalar(c_form(A, x, 1)) - x


@dataclass
class QuadraticSplit:
    u: Matrix
    c: object
    C: Subalgebra
    C_prime: Subspace
    K: Subalgebra
    algebra: AlgebraWithInvolution

    def phi(self, x: Matrix) -> Matrix:
        """Projection onto C along C': ((2c+1)x - ux - xu + 2uxu) / (4c+1)."""
        F = self.algebra.field
        c = self.c
        two = F.from_int(2)
        denom = F.add(F.mul(F.from_int(4), c), F.one)
        assert not F.is_zero(denom), "4c+1 vanishes for an etale quadratic algebra"
        u = self.u
        y = x.scale(F.add(F.mul(two, c), F.one)) - u * x - x * u + (u * x * u).scale(two)
        return y.scale(F.inv(denom))

    def gamma(self, k: Matrix) -> Matrix:
        """Nontrivial automorphism of K: u -> 1 - u."""
        A = self.algebra
        F = A.field
        a, b = artin_schreier_coords(self, k)
        # k = a + b u -> a + b (1 - u)
        return A.scalar(F.add(a, b)) - self.u.scale(b)

    def in_c_prime(self, x: Matrix) -> bool:
        return x * self.u + self.u * x == x


def artin_schreier_coords(split: QuadraticSplit, k: Matrix):
    """(a, b) with k = a*1 + b*u."""
    A = split.algebra
    sp = A.subspace([A.unit, split.u])
    if not sp.contains(k.flat()):
        raise AlgebraError("element not in K")
    F = A.field
    flat = k.flat()
    one, u = A.unit.flat(), split.u.flat()
    # solve with two pivot-free positions
    rows = [[one[i], u[i], flat[i]] for i in range(len(flat))]
    red, piv = rref(F, rows)
    if piv[:2] != [0, 1]:
        raise AlgebraError("1 and u are dependent")
    return red[0][2], red[1][2]


def artin_schreier_generator(K: Subalgebra):
    """u in K \\ F with u^2 - u in F; returns (u, c)."""
    A = K.parent
    F = A.field
    if K.dim != 2:
        raise AlgebraError("K is not quadratic")
    w = next(b for b in K.basis if not A.subspace([A.unit]).contains(b.flat()))
    # w^2 = alpha w + beta
    sp = A.subspace([A.unit, w])
    w2 = w * w
    rows = [[A.unit.flat()[i], w.flat()[i], w2.flat()[i]] for i in range(A.n * A.n)]
    red, piv = rref(F, rows)
    beta, alpha = red[0][2], red[1][2]
    if F.characteristic == 2:
        if F.is_zero(alpha):
            raise AlgebraError("K is not etale")
        lam, mu = F.inv(alpha), F.zero
    else:
        lam, mu = F.one, F.div(F.sub(F.one, alpha), F.from_int(2))
    u = w.scale(lam) + A.scalar(mu)
    uu = u * u - u
    if not A.subspace([A.unit]).contains(uu.flat()):
        raise AlgebraError("failed to normalise quadratic generator")
    uf, ef = uu.flat(), A.unit.flat()
    i = next(i for i, x in enumerate(ef) if not F.is_zero(x))
    c = F.div(uf[i], ef[i])
    assert sp.contains(u.flat())
    return u, c


def quadratic_split(A: AlgebraWithInvolution, K: Subalgebra) -> QuadraticSplit:
    u, c = artin_schreier_generator(K)
    C = centralizer(A, K)
    Cp = A.kernel(lambda x: x * u + u * x - x)
    return QuadraticSplit(u, c, C, Cp, K, A)


def kfield_char_poly(A: AlgebraWithInvolution, u: Matrix, c, x: Matrix) -> Poly:
    """Reduced characteristic polynomial over K = F[u] (u^2 = u + c a field) of x in C_A(u).

    Only for first-kind matrix models (and their corners): the underlying F-module of the
    unit's image becomes a K-vector space and x acts K-linearly on it.
    """
    if A.model.get("base", {}).get("kind", "matrix") != "matrix":
        raise AlgebraError("K-characteristic polynomial is implemented for matrix models")
    F = A.field
    K = QuadraticExtension(F, c)
    unit_cols = rref(F, [list(col) for col in zip(*A.unit.rows)])[0]
    V = Subspace(F, unit_cols, A.n)
    # greedy K-basis: v_1..v_r with {v_i, u v_i} an F-basis of V
    kb = []
    span = Subspace(F, [], A.n)
    for v in V.basis:
        if span.contains(v):
            continue
        kb.append(v)
        span = Subspace(F, span.basis + [v, u.apply(v)], A.n)
    fb = []
    for v in kb:
        fb.extend([v, u.apply(v)])
    # coordinates against the F-basis (v_1, u v_1, ...)
    m = len(fb)
    cols = [list(col) for col in zip(*fb)]  # n x m
    r = len(kb)
    entries = [[K.zero] * r for _ in range(r)]
    for j, v in enumerate(kb):
        w = x.apply(v)
        aug = [cols[i] + [w[i]] for i in range(A.n)]
        red, piv = rref(F, aug)
        if m in piv:
            raise AlgebraError("x does not preserve the unit's image")
        sol = [F.zero] * m
        for row, p in zip(red, piv):
            sol[p] = row[m]
        for i in range(r):
            entries[i][j] = (sol[2 * i], sol[2 * i + 1])
    return char_poly(Matrix(K, entries))


def chi_over_kfield(A: AlgebraWithInvolution, u: Matrix, c, x: Matrix) -> Poly:
    """chi_{C, x} for x in Syms(sigma_C), C = C_A(F[u]) viewed over K = F[u]."""
    prd = kfield_char_poly(A, u, c, x)
    if A.type == SYMPLECTIC:
        return poly_sqrt_monic(prd)
    return prd
