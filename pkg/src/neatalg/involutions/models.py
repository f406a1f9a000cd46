"""Constructors for the split models: transpose and twisted-transpose
involutions, the symplectic involution ``s``, the switch involution, unitary
adjoint involutions over a quadratic extension, corners and the Phi/Psi maps."""

from __future__ import annotations

from ..exactalg import Field, Matrix, Poly, poly_separable
from ..exactalg.matrix import MatrixError
from .algebra import AlgebraError, AlgebraWithInvolution, Subalgebra


def encode_matrix(F: Field, M: Matrix):
    return [[F.encode(x) for x in r] for r in M.rows]


def decode_matrix(F: Field, rows) -> Matrix:
    return Matrix(F, [[F.decode(x) for x in r] for r in rows])


def full_matrix_basis(F: Field, n: int):
    return [Matrix.unit(F, n, i, j) for i in range(n) for j in range(n)]


def symplectic_gram(F: Field, two_m: int) -> Matrix:
    """J = [[0, I], [-I, 0]]."""
    m = two_m // 2
    rows = [[F.zero] * two_m for _ in range(two_m)]
    for i in range(m):
        rows[i][m + i] = F.one
        rows[m + i][i] = F.neg(F.one)
    return Matrix(F, rows)


def is_alternating(M: Matrix) -> bool:
    F = M.field
    return M.T == -M and all(F.is_zero(M[i, i]) for i in range(M.nrows))


def transpose_algebra(F: Field, d: int) -> AlgebraWithInvolution:
    return AlgebraWithInvolution(F, d, full_matrix_basis(F, d), Matrix.identity(F, d),
                                 model={"tag": "matrix", "involution": "transpose", "d": d,
                                        "base": {"kind": "matrix"}})


def twisted_algebra(F: Field, m: Matrix, alternating: bool = False) -> AlgebraWithInvolution:
    """(M_d(F), Int(m) o t) for invertible symmetric (orthogonal) or alternating (symplectic) m.

    In characteristic 2 an alternating m is also symmetric, so the symplectic
    reading has to be asked for with ``alternating=True``.
    """
    d = m.nrows
    try:
        minv = m.inverse()
    except MatrixError:
        raise AlgebraError("m is singular") from None
    if alternating:
        if not is_alternating(m):
            raise AlgebraError("m is not alternating")
        inv = "twisted-alternating"
    elif m.T == m:
        if F.characteristic == 2 and is_alternating(m):
            raise AlgebraError("m is alternating; Int(m) o t would be symplectic, not orthogonal")
        inv = "twisted"
    elif m.T == -m and is_alternating(m):
        inv = "twisted-alternating"
    else:
        raise AlgebraError("m must be symmetric or alternating")
    return AlgebraWithInvolution(F, d, full_matrix_basis(F, d), m, ginv=minv,
                                 model={"tag": "matrix", "involution": inv, "d": d,
                                        "m": encode_matrix(F, m), "base": {"kind": "matrix"}})


def symplectic_algebra(F: Field, two_m: int) -> AlgebraWithInvolution:
    """(M_2m(F), s) with s = Int(J) o t."""
    if two_m % 2:
        raise AlgebraError("symplectic model needs even degree")
    J = symplectic_gram(F, two_m)
    return AlgebraWithInvolution(F, two_m, full_matrix_basis(F, two_m), J,
                                 model={"tag": "matrix", "involution": "symplectic", "d": two_m,
                                        "base": {"kind": "matrix"}})


def switch_algebra(F: Field, d: int) -> AlgebraWithInvolution:
    """(M_d(F) x M_d(F)^op, sw) realized as the image of Psi inside (M_2d(F), s)."""
    n = 2 * d
    basis = [Matrix.unit(F, n, i, j) for i in range(d) for j in range(d)]
    basis += [Matrix.unit(F, n, d + i, d + j) for i in range(d) for j in range(d)]
    return AlgebraWithInvolution(F, n, basis, symplectic_gram(F, n),
                                 model={"tag": "switch", "d": d, "base": {"kind": "switch", "d": d}})


def phi_algebra(F: Field, m: int) -> AlgebraWithInvolution:
    """Image of Phi: (M_m(F), t) -> (M_2m(F), s), alpha -> alpha x alpha."""
    n = 2 * m
    basis = [Matrix.unit(F, n, i, j) + Matrix.unit(F, n, m + i, m + j) for i in range(m) for j in range(m)]
    return AlgebraWithInvolution(F, n, basis, symplectic_gram(F, n),
                                 model={"tag": "phi", "d": m, "base": {"kind": "phi", "d": m}})


def phi(alpha: Matrix) -> Matrix:
    return Matrix.block_diag(alpha.field, alpha, alpha)


def psi(alpha: Matrix, beta: Matrix) -> Matrix:
    """(alpha, beta^op) -> alpha x beta^t."""
    return Matrix.block_diag(alpha.field, alpha, beta.T)


def switch_element(alpha: Matrix, beta: Matrix) -> Matrix:
    """The element (alpha, beta^op) of the switch model."""
    return psi(alpha, beta)


def nonsplit_quadratic_constant(F: Field):
    """Smallest c (in encoding order) with X^2 - X - c irreducible over F.

    Over QQ this is c = -1 (X^2 - X + 1, a cyclotomic field)."""
    if not F.is_finite:
        return F.from_int(-1)
    for c in sorted(F.elements(), key=F.key):
        p = Poly(F, [F.neg(c), F.neg(F.one), F.one])
        if poly_separable(p) and not p.roots():
            return c
    raise AlgebraError("no irreducible Artin-Schreier polynomial")


def theta_block(F: Field, c) -> Matrix:
    """Regular representation of t (t^2 = t + c) on the basis (1, t)."""
    return Matrix(F, [[F.zero, c], [F.one, F.one]])


def k_block(F: Field, c, x, y) -> Matrix:
    return Matrix(F, [[x, F.mul(y, c)], [y, F.add(x, y)]])


def trace_gamma_gram(F: Field, c) -> Matrix:
    """Gram matrix of (x, y) -> Tr(x gamma(y)) on (1, t); multiplication by k is
    adjoint to multiplication by gamma(k) for this form."""
    two = F.from_int(2)
    return Matrix(F, [[two, F.one], [F.one, F.neg(F.mul(two, c))]])


def unitary_algebra(F: Field, d: int, c=None, hermitian=None) -> AlgebraWithInvolution:
    """(M_d(K), adjoint of <h_1, ..., h_d>) with K = F[t]/(t^2 - t - c) inside M_2d(F)."""
    if c is None:
        c = nonsplit_quadratic_constant(F)
    if F.is_zero(F.add(F.mul(F.from_int(4), c), F.one)):
        raise AlgebraError("t^2 - t - c is not separable")
    h = [F.one] * d if hermitian is None else list(hermitian)
    if any(F.is_zero(x) for x in h):
        raise AlgebraError("hermitian form is degenerate")
    n = 2 * d
    T = theta_block(F, c)
    I2 = Matrix.identity(F, 2)
    basis = []
    for i in range(d):
        for j in range(d):
            for blk in (I2, T):
                rows = [[F.zero] * n for _ in range(n)]
                for a in range(2):
                    for b in range(2):
                        rows[2 * i + a][2 * j + b] = blk[a, b]
                basis.append(Matrix(F, rows))
    B = trace_gamma_gram(F, c)
    M = Matrix.block_diag(F, *[B.scale(x) for x in h])
    return AlgebraWithInvolution(F, n, basis, M.inverse(), ginv=M,
                                 model={"tag": "unitary", "d": d, "hermitian": [F.encode(x) for x in h],
                                        "base": {"kind": "unitary", "c": F.encode(c)}})


def corner(A: AlgebraWithInvolution, e: Matrix) -> AlgebraWithInvolution:
    """(eAe, sigma restricted) for a nonzero symmetric idempotent e."""
    if not A.contains(e):
        raise AlgebraError("e is not in the algebra")
    if e * e != e:
        raise AlgebraError("e is not idempotent")
    if A.sigma(e) != e:
        raise AlgebraError("sigma(e) != e")
    if e.is_zero():
        raise AlgebraError("e is zero")
    basis = [e * b * e for b in A.basis]
    model = {"tag": "corner", "parent_tag": A.model.get("tag"), "base": A.model.get("base"),
             "e": encode_matrix(A.field, e)}
    return AlgebraWithInvolution(A.field, A.n, basis, A.g, unit=e, model=model, ginv=A.ginv)


def centralizer(A: AlgebraWithInvolution, L: Subalgebra) -> Subalgebra:
    """C_A(L) as a subalgebra of A."""
    space = A.centralizer_space(L.basis)
    C = Subalgebra(A, A.elements_of(space), A.unit)
    if L.commutative and L.in_symm and L.etale:
        from ..neat.etale import is_field

        if is_field(L):
            # separable field in Symm: same type, capacity divides by [L:F]
            C.restricted_type = A.type
            C.restricted_capacity = A.capacity // L.dim
    return C


def build_algebra(spec: dict) -> AlgebraWithInvolution:
    """Build from a descriptor such as ``{"model": "symplectic", "field": F, "d": 4}``.

    Models: ``transpose``, ``twisted`` (needs ``m``), ``symplectic``, ``switch``,
    ``unitary`` (optional ``c``, ``hermitian``), ``phi``. ``twisted`` takes
    ``alternating=True`` for a symplectic twist.
    """
    F = spec["field"]
    model = spec["model"]
    d = int(spec.get("d", 0))
    if model == "transpose":
        return transpose_algebra(F, d)
    if model == "twisted":
        m = spec["m"]
        if not isinstance(m, Matrix):
            m = Matrix.from_ints(F, m)
        return twisted_algebra(F, m, bool(spec.get("alternating", False)))
    if model == "symplectic":
        return symplectic_algebra(F, d)
    if model == "switch":
        return switch_algebra(F, d)
    if model == "unitary":
        return unitary_algebra(F, d, spec.get("c"), spec.get("hermitian"))
    if model == "phi":
        return phi_algebra(F, d)
    raise AlgebraError(f"unknown model {model!r}")


def phi_image(B: AlgebraWithInvolution) -> Subalgebra:
    """Phi(M_m(F)) as a flagged subalgebra of (M_2m(F), s)."""
    F, n = B.field, B.n
    m = n // 2
    return Subalgebra(B, [phi(Matrix.unit(F, m, i, j)) for i in range(m) for j in range(m)])


def psi_image(B: AlgebraWithInvolution) -> Subalgebra:
    F, n = B.field, B.n
    m = n // 2
    Z = Matrix.zeros(F, m)
    basis = [psi(Matrix.unit(F, m, i, j), Z) for i in range(m) for j in range(m)]
    basis += [psi(Z, Matrix.unit(F, m, i, j)) for i in range(m) for j in range(m)]
    return Subalgebra(B, basis)
