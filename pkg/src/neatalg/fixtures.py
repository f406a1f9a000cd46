"""Small explicit algebras used by the tests and the harness."""

from __future__ import annotations

from .exactalg import Field, Matrix
from .involutions import Subalgebra, corner, switch_algebra, switch_element, twisted_algebra


def corner_swap_data(F: Field):
    """m, e in M_4(F): Int(m) o t is orthogonal and e is a symmetric idempotent
    that is symmetrized in characteristic 2."""
    m = Matrix.from_ints(F, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    e = Matrix.from_ints(F, [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    return m, e


def corner_swap(F: Field):
    """(A, eAe) for the data above."""
    m, e = corner_swap_data(F)
    A = twisted_algebra(F, m)
    return A, corner(A, e)


def non_neat_pair(F: Field):
    """Split etale L = Fe1 + Fe2 + Fe and L' = Fe1 + F(e2 + e) in the algebra above."""
    m, e = corner_swap_data(F)
    A = twisted_algebra(F, m)
    e1 = Matrix.unit(F, 4, 0, 0)
    e2 = Matrix.unit(F, 4, 1, 1)
    L = Subalgebra(A, [e1, e2, e])
    Lp = Subalgebra(A, [e1, e2 + e])
    return A, L, Lp


def large_commutative_symmetric(F: Field):
    """A 5-dimensional commutative, non-etale subalgebra of Symm for the switch
    involution on M_4(F) x M_4(F)^op (capacity 4)."""
    A = switch_algebra(F, 4)
    shapes = [[(0, 0), (1, 1), (2, 2), (3, 3)], [(0, 2)], [(0, 3)], [(1, 2)], [(1, 3)]]
    basis = []
    for pos in shapes:
        x = Matrix.zeros(F, 4)
        for i, j in pos:
            x = x + Matrix.unit(F, 4, i, j)
        basis.append(switch_element(x, x))
    return A, Subalgebra(A, basis)


def gamma_matrix(F: Field, a, b, c, d, e, f) -> Matrix:
    """The generic symmetrized element of (M_4(F), s)."""
    z = F.zero
    return Matrix(F, [[a, b, z, e], [c, d, F.neg(e), z], [z, f, a, c], [F.neg(f), z, b, d]])
