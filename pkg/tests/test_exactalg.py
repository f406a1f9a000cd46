import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neatalg.exactalg import (GF, QQ, FieldError, Matrix, MatrixError, Poly, PolyError, char_poly,
                              field_from_spec, newton_coeffs_from_power_sums, parse_field, poly_discriminant,
                              poly_separable, poly_sqrt_monic)
from neatalg.exactalg.fields import MODULI, is_irreducible_mod_p

from conftest import ALL_FIELDS, FINITE

F2, F3, F5 = GF(2), GF(3), GF(5)


def P(F, ints):
    return Poly.from_ints(F, ints)


def elem(F):
    """Strategy for elements of F, drawn through an integer seed."""
    return st.integers(0, 2**32).map(lambda s: F.random(random.Random(s)))


# -- fields ---------------------------------------------------------------------

def test_moduli_are_irreducible():
    for (p, k), m in MODULI.items():
        assert is_irreducible_mod_p(m, p)
        assert len(m) == k + 1 and m[-1] == 1


def test_field_orders_and_parse():
    assert GF(4).order == 4 and GF(4).characteristic == 2
    assert parse_field("GF(2^3)") == GF(2, 3)
    assert parse_field("QQ") is QQ and not QQ.is_finite
    assert len(list(GF(9).elements())) == 9
    with pytest.raises(FieldError):
        GF(6)


@pytest.mark.parametrize("F", ALL_FIELDS, ids=repr)
def test_field_axioms_random(F):
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (F.random(rng) for _ in range(3))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == F.zero
        if not F.is_zero(a):
            assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("F", ALL_FIELDS, ids=repr)
def test_spec_roundtrip(F):
    assert field_from_spec(F.spec()) == F
    rng = random.Random(3)
    for _ in range(20):
        a = F.random(rng)
        assert F.decode(F.encode(a)) == a


def test_frobenius_square_root_char2():
    F = GF(2, 3)
    for a in F.elements():
        r = F.sqrt_char2(a)
        assert F.mul(r, r) == a


# -- polynomials ----------------------------------------------------------------

def test_poly_separable_examples():
    assert poly_separable(P(F2, [1, 1, 1]))
    assert not poly_separable(P(F2, [1, 0, 1]))
    assert poly_separable(P(QQ, [-2, 0, 1]))
    with pytest.raises(PolyError, match="undefined"):
        poly_separable(Poly(F2, []))


def test_inseparable_when_derivative_vanishes():
    # X^3 - 1 over GF(3) has derivative 0
    assert not poly_separable(P(F3, [-1, 0, 0, 1]))


def test_poly_sqrt_examples():
    assert poly_sqrt_monic(P(QQ, [1, 2, 1])) == P(QQ, [1, 1])
    assert poly_sqrt_monic(P(F2, [1, 0, 1])) == P(F2, [1, 1])
    with pytest.raises(PolyError, match="not a perfect square"):
        poly_sqrt_monic(P(F2, [1, 1, 1]))


def test_discriminant_examples():
    b, c = Fraction(3), Fraction(-7)
    assert poly_discriminant(Poly(QQ, [c, b, 1])) == b * b - 4 * c
    p_, q_ = Fraction(2), Fraction(5)
    assert poly_discriminant(Poly(QQ, [q_, p_, 0, 1])) == -4 * p_**3 - 27 * q_**2
    # [DERIVED] X^2+X+1 over GF(2): Res(p, 1) = 1
    assert poly_discriminant(P(F2, [1, 1, 1])) == F2.one
    with pytest.raises(PolyError):
        poly_discriminant(P(F2, [1]))


def test_newton_examples():
    assert newton_coeffs_from_power_sums(QQ, [Fraction(5)], 1) == [5]
    p1, p2 = Fraction(3), Fraction(5)
    assert newton_coeffs_from_power_sums(QQ, [p1, p2], 2) == [p1, (p1 * p1 - p2) / 2]
    with pytest.raises(PolyError, match="characteristic too small"):
        newton_coeffs_from_power_sums(F2, [1, 1], 2)


def test_newton_matches_char_poly_over_q():
    rng = random.Random(5)
    for _ in range(10):
        M = Matrix(QQ, [[QQ.random(rng) for _ in range(3)] for _ in range(3)])
        powers, X = [], M
        for _ in range(3):
            powers.append(X.trace())
            X = X * M
        e = newton_coeffs_from_power_sums(QQ, powers, 3)
        chi = char_poly(M)
        assert [chi[2], chi[1], chi[0]] == [-e[0], e[1], -e[2]]


@pytest.mark.parametrize("F", ALL_FIELDS, ids=repr)
def test_sqrt_of_square(F):
    rng = random.Random(17)
    for _ in range(30):
        q = Poly(F, [F.random(rng) for _ in range(rng.randint(0, 4))] + [F.one])
        assert poly_sqrt_monic(q * q) == q


@pytest.mark.parametrize("F", [F2, F3, F5, GF(4), QQ], ids=repr)
def test_separable_iff_discriminant_nonzero(F):
    rng = random.Random(23)
    for _ in range(60):
        deg = rng.randint(1, 6)
        p = Poly(F, [F.random(rng) for _ in range(deg)] + [F.one])
        assert poly_separable(p) == (not F.is_zero(poly_discriminant(p)))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
def test_separable_iff_discriminant_nonzero_hypothesis(cs):
    p = Poly(QQ, [Fraction(c) for c in cs])
    if p.degree < 1:
        return
    assert poly_separable(p) == (poly_discriminant(p) != 0)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_sqrt_hypothesis_gf5(cs):
    q = Poly(F5, [F5.from_int(c) for c in cs] + [F5.one])
    assert poly_sqrt_monic(q * q) == q


# -- matrices -------------------------------------------------------------------

def test_char_poly_examples():
    I3 = Matrix.identity(F5, 3)
    assert char_poly(I3) == Poly.from_roots(F5, [F5.one] * 3)
    E12 = Matrix.unit(QQ, 2, 0, 1)
    assert char_poly(E12) == P(QQ, [0, 0, 1])
    with pytest.raises(MatrixError):
        char_poly(Matrix(F5, [[1, 2, 3]]))
    # [DERIVED] [[0,1],[1,1]] over GF(2): X^2 + X + 1
    assert char_poly(Matrix.from_ints(F2, [[0, 1], [1, 1]])) == P(F2, [1, 1, 1])


def _cofactor_det(rows, F):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = F.zero
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = F.mul(rows[0][j], _cofactor_det(minor, F))
        acc = F.add(acc, term) if j % 2 == 0 else F.sub(acc, term)
    return acc


def _naive_char_poly(M):
    """det(XI - M) by cofactor expansion over polynomial entries."""
    F = M.field
    n = M.nrows

    class PF:
        zero = Poly(F, [])

        @staticmethod
        def add(a, b):
            return a + b

        @staticmethod
        def sub(a, b):
            return a - b

        @staticmethod
        def mul(a, b):
            return a * b

    rows = [[(Poly.x(F) if i == j else Poly(F, [])) - Poly(F, [M[i, j]]) for j in range(n)] for i in range(n)]
    return _cofactor_det(rows, PF)


@pytest.mark.parametrize("n", [2, 3])
def test_char_poly_exhaustive_gf2(n):
    for bits in itertools.product([0, 1], repeat=n * n):
        M = Matrix.from_flat(F2, [F2.from_int(b) for b in bits], n)
        assert char_poly(M) == _naive_char_poly(M)


@pytest.mark.parametrize("F", [F2, F3, F5, QQ], ids=repr)
def test_cayley_hamilton(F):
    rng = random.Random(29)
    for n in range(1, 9):
        M = Matrix(F, [[F.random(rng) for _ in range(n)] for _ in range(n)])
        assert M.polyval(char_poly(M)).is_zero()


@given(st.integers(1, 6), st.integers(0, 2**32))
def test_cayley_hamilton_hypothesis_gf4(n, s):
    F = GF(4)
    rng = random.Random(s)
    M = Matrix(F, [[F.random(rng) for _ in range(n)] for _ in range(n)])
    assert M.polyval(char_poly(M)).is_zero()


@given(st.integers(0, 2**32))
def test_det_multiplicative(s):
    rng = random.Random(s)
    A = Matrix(F5, [[F5.random(rng) for _ in range(3)] for _ in range(3)])
    B = Matrix(F5, [[F5.random(rng) for _ in range(3)] for _ in range(3)])
    assert (A * B).det() == F5.mul(A.det(), B.det())
