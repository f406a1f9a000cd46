import json
import random

import pytest

from neatalg.exactalg import GF, QQ, Matrix, Poly
from neatalg.fixtures import corner_swap, corner_swap_data, gamma_matrix
from neatalg.involutions import (ORTHOGONAL, SYMPLECTIC, UNITARY, AlgebraError, ChiError, Subalgebra,
                                 algebra_from_doc, algebra_to_doc, build_algebra, canonical, cap2_form, centralizer,
                                 chi, conjugate_cap2, corner, dumps, extend_scalars, loads, phi, phi_algebra, psi,
                                 quadratic_split, subalgebra_from_doc, subalgebra_to_doc, switch_algebra,
                                 symplectic_algebra, transpose_algebra, twisted_algebra, unitary_algebra)
from neatalg.involutions.invariants import kfield_char_poly
from neatalg.neat import idempotents, max_etale, neat_quadratic_field, split_neat

F2, F3, F5 = GF(2), GF(3), GF(5)


def P(F, ints):
    return Poly.from_ints(F, ints)


# -- construction and classification ---------------------------------------------

def test_build_examples():
    A = build_algebra({"model": "symplectic", "field": F2, "d": 4})
    assert A.type == SYMPLECTIC and A.capacity == 2
    B = build_algebra({"model": "transpose", "field": F5, "d": 3})
    assert B.type == ORTHOGONAL and B.capacity == 3 and B.symd.dim == 6 > B.skew.dim == 3
    S = build_algebra({"model": "switch", "field": F3, "d": 2})
    assert S.type == UNITARY and S.kind == "second" and S.centre.dim == 2
    # Z(A) is F x F: it contains two orthogonal central idempotents
    assert len(idempotents(Subalgebra(S, S.elements_of(S.centre))).primitive_idempotents) == 2


def test_build_errors():
    with pytest.raises(AlgebraError, match="singular"):
        twisted_algebra(F3, Matrix.from_ints(F3, [[1, 1], [1, 1]]))
    with pytest.raises(AlgebraError, match="alternating"):
        twisted_algebra(F2, Matrix.from_ints(F2, [[0, 1], [1, 0]]))
    with pytest.raises(AlgebraError):
        symplectic_algebra(F3, 3)


def test_classify_reference_examples():
    assert symplectic_algebra(F2, 4).classify() == {"kind": "first", "type": SYMPLECTIC}
    m, _ = corner_swap_data(F2)
    assert twisted_algebra(F2, m).type == ORTHOGONAL
    assert switch_algebra(F5, 3).type == UNITARY


def test_symmetrized_spaces():
    s = symplectic_algebra(F3, 4)
    spaces = s.symmetrized_spaces()
    assert spaces["symd"].dim == 6 and spaces["syms"] == spaces["symd"]
    # Symd(s) is exactly the image of Gamma
    rng = random.Random(1)
    for _ in range(20):
        g = gamma_matrix(F3, *(F3.random(rng) for _ in range(6)))
        assert s.symd.contains(g.flat())
    assert symplectic_algebra(F5, 6).capacity == 3
    t = transpose_algebra(QQ, 3)
    assert t.symm.dim == 6 and t.capacity == 3


@pytest.mark.parametrize("A", [transpose_algebra(F2, 3), symplectic_algebra(F3, 4), transpose_algebra(QQ, 2),
                               twisted_algebra(F5, Matrix.from_ints(F5, [[1, 2], [2, 3]]))], ids=str)
def test_skew_plus_symd_is_everything(A):
    assert A.skew.dim + A.symd.dim == A.dim


def test_centre_fixed_part_is_scalars():
    for A in (unitary_algebra(F3, 2), switch_algebra(F2, 2), transpose_algebra(F5, 2)):
        fixed = A.centre.intersect(A.symm)
        assert fixed == A.subspace([A.unit])


# -- corners and centralizers -----------------------------------------------------

def test_corner_type_rule():
    A, B = corner_swap(F2)
    assert A.type == ORTHOGONAL and B.type == SYMPLECTIC
    A3, B3 = corner_swap(F3)
    assert A3.type == ORTHOGONAL and B3.type == ORTHOGONAL
    T = transpose_algebra(F3, 2)
    assert corner(T, T.unit).type == ORTHOGONAL and corner(T, T.unit).dim == T.dim
    C = corner(T, Matrix.unit(F3, 2, 0, 0))
    assert C.dim == 1 and C.type == ORTHOGONAL


def test_corner_errors():
    T = transpose_algebra(F3, 2)
    with pytest.raises(AlgebraError, match="idempotent"):
        corner(T, Matrix.from_ints(F3, [[1, 1], [0, 0]]).scale(F3.from_int(2)))
    with pytest.raises(AlgebraError, match="sigma"):
        corner(T, Matrix.from_ints(F3, [[1, 1], [0, 0]]))


def test_centralizer_examples():
    A = transpose_algebra(F5, 3)
    D = Subalgebra(A, [Matrix.unit(F5, 3, i, i) for i in range(3)])
    assert centralizer(A, D).space == D.space
    assert centralizer(A, Subalgebra(A, [A.unit])).dim == A.dim


@pytest.mark.parametrize("A", [transpose_algebra(F3, 4), symplectic_algebra(F5, 4), transpose_algebra(F2, 2),
                               symplectic_algebra(F2, 8)], ids=str)
def test_capacity_multiplicativity(A):
    """kappa(A) = [L:F] kappa(C) for a quadratic field L in Symm, with kappa(C) read off
    from dim_K Syms(sigma_C)."""
    L = neat_quadratic_field(A, seed=0)
    C = centralizer(A, L)
    syms_c = C.space.intersect(A.syms)
    dim_k = syms_c.dim // 2
    if A.type == SYMPLECTIC:
        kc = next(k for k in range(1, 10) if k * (2 * k - 1) == dim_k)
    else:
        kc = next(k for k in range(1, 10) if k * (k + 1) // 2 == dim_k)
    assert A.capacity == L.dim * kc
    assert C.restricted_capacity == kc and C.restricted_type == A.type


# -- quadratic split --------------------------------------------------------------

def test_phi_example_over_q():
    A = transpose_algebra(QQ, 2)
    K = Subalgebra(A, [Matrix.unit(QQ, 2, 0, 0), Matrix.unit(QQ, 2, 1, 1)])
    sp = quadratic_split(A, K)
    assert QQ.is_zero(sp.c)
    assert sp.phi(Matrix.unit(QQ, 2, 0, 1)).is_zero()
    assert sp.phi(Matrix.unit(QQ, 2, 0, 0)) == Matrix.unit(QQ, 2, 0, 0)


@pytest.mark.parametrize("A", [transpose_algebra(F3, 2), symplectic_algebra(F2, 4), unitary_algebra(F5, 2),
                               switch_algebra(F3, 2), transpose_algebra(F2, 4)], ids=str)
def test_quadratic_split_dimensions(A):
    for K in (split_neat(A, 2), neat_quadratic_field(A)):
        sp = quadratic_split(A, K)
        assert 2 * sp.C.dim == A.dim and 2 * sp.C_prime.dim == A.dim
        W = sp.C_prime.intersect(A.symm)
        assert W == sp.C_prime.intersect(A.symd) and 4 * W.dim == A.dim
        rng = random.Random(2)
        for _ in range(10):
            x = A.random_element(rng)
            y = sp.phi(x)
            assert sp.phi(y) == y and sp.C.contains(y) and sp.in_c_prime(x - y)


# -- reduced characteristic polynomial and chi --------------------------------------

def test_reduced_char_poly_examples():
    A = transpose_algebra(F3, 3)
    assert A.reduced_char_poly(A.unit) == Poly.from_roots(F3, [F3.one] * 3)
    B = transpose_algebra(F2, 2)
    assert B.reduced_char_poly(Matrix.from_ints(F2, [[0, 1], [1, 1]])) == P(F2, [1, 1, 1])
    with pytest.raises(AlgebraError):
        switch_algebra(F3, 2).reduced_char_poly(Matrix.identity(F3, 4).scale(F3.zero) + Matrix.unit(F3, 4, 0, 3))


def test_switch_reduced_char_poly_is_first_component():
    S = switch_algebra(F5, 2)
    a0 = Matrix.from_ints(F5, [[1, 2], [3, 4]])
    b0 = Matrix.from_ints(F5, [[0, 1], [1, 0]])
    from neatalg.exactalg import char_poly
    assert S.reduced_char_poly(psi(a0, b0)) == char_poly(a0)


def test_chi_gamma_pfaffian():
    rng = random.Random(4)
    for F in (F2, F3, F5, QQ):
        s = symplectic_algebra(F, 4)
        for _ in range(20):
            a, b, c, d, e, f = (F.random(rng) for _ in range(6))
            g = gamma_matrix(F, a, b, c, d, e, f)
            n = F.add(F.sub(F.mul(a, d), F.mul(b, c)), F.mul(e, f))
            expected = Poly(F, [n, F.neg(F.add(a, d)), F.one])
            poly, cs = chi(s, g)
            assert poly == expected and cs[1] == n
            from neatalg.exactalg import char_poly
            assert char_poly(g) == expected * expected


def test_chi_unit_and_errors():
    s = symplectic_algebra(F3, 6)
    poly, cs = chi(s, s.unit)
    assert poly == Poly.from_roots(F3, [F3.one] * 3)
    with pytest.raises(ChiError):
        chi(s, Matrix.unit(F3, 6, 0, 1))


def test_chi_split_involution_element():
    # a = e1 - e2 for a split neat F x F with equal corners, a^2 = 1
    A = transpose_algebra(F5, 4)
    e1, e2 = idempotents(split_neat(A, 2)).primitive_idempotents
    poly, cs = chi(A, e1 - e2)
    assert poly == P(F5, [1, 0, -2, 0, 1])
    assert F5.is_zero(cs[0]) and F5.is_zero(cs[2])


@pytest.mark.parametrize("F", [F2, F3, F5], ids=repr)
def test_chi_phi_and_psi_embeddings(F):
    rng = random.Random(8)
    T = transpose_algebra(F, 2)
    S = symplectic_algebra(F, 4)
    W = switch_algebra(F, 2)
    for _ in range(200):
        a = T.random_in(T.symm, rng)
        assert chi(S, phi(a))[0] == chi(T, a)[0]
        w = W.random_in(W.syms, rng)
        assert chi(S, w)[0] == chi(W, w)[0]


def test_pc2_example_square_separable():
    # [DERIVED] a = [[0,1],[2,0]] over GF(5): chi = X^2 - 2, invertible, f = X - 2
    A = transpose_algebra(F5, 2)
    a = Matrix.from_ints(F5, [[0, 1], [2, 0]])
    assert A.reduced_char_poly(a) == P(F5, [-2, 0, 1])
    assert not F5.is_zero(a.det())


def test_kfield_char_poly_degree():
    A = transpose_algebra(F3, 4)
    K = neat_quadratic_field(A)
    sp = quadratic_split(A, K)
    p = kfield_char_poly(A, sp.u, sp.c, A.unit)
    assert p.degree == 2


# -- capacity-2 quadratic form ------------------------------------------------------

@pytest.mark.parametrize("F", [F2, F3, F5, QQ], ids=repr)
def test_cap2_dimension_table(F):
    cases = [(transpose_algebra(F, 2), 3), (unitary_algebra(F, 2), 4), (switch_algebra(F, 2), 4),
             (symplectic_algebra(F, 4), 6), (phi_algebra(F, 2), 3)]
    for A, dim in cases:
        q = cap2_form(A)
        assert q.dim == dim
        assert q.meta["rad_dim"] == 0 and q.meta["rad_polar_dim"] <= 1
        assert q.is_nondegenerate()
    q = cap2_form(transpose_algebra(F, 2))
    assert q.meta["rad_polar_dim"] == (1 if F.characteristic == 2 else 0)


@pytest.mark.parametrize("F", [F2, F3, F5], ids=repr)
def test_cap2_polynomials_in_gamma_coordinates(F):
    rng = random.Random(6)
    S, W, Ph = symplectic_algebra(F, 4), switch_algebra(F, 2), phi_algebra(F, 2)
    for _ in range(50):
        a, b, c, d, e, f = (F.random(rng) for _ in range(6))
        ad = F.mul(a, d)
        g = gamma_matrix(F, a, b, c, d, e, f)
        assert chi(S, g)[1][1] == F.add(F.sub(ad, F.mul(b, c)), F.mul(e, f))
        g = gamma_matrix(F, a, b, c, d, F.zero, F.zero)
        assert chi(W, g)[1][1] == F.sub(ad, F.mul(b, c))
        g = gamma_matrix(F, a, b, b, d, F.zero, F.zero)
        assert chi(Ph, g)[1][1] == F.sub(ad, F.mul(b, b))


def test_cap2_form_evaluation_and_norm_rule():
    rng = random.Random(7)
    for A in (symplectic_algebra(F3, 4), unitary_algebra(F2, 2), transpose_algebra(F5, 2)):
        q = cap2_form(A)
        F = A.field
        for _ in range(100):
            xs = [F.random(rng) for _ in range(q.dim)]
            x = q.vector(xs)
            c2 = chi(A, x)[1][1]
            assert q.evaluate(xs) == c2
            assert x * conjugate_cap2(A, x) == A.scalar(c2)


def test_cap2_form_needs_capacity_two():
    with pytest.raises(AlgebraError):
        cap2_form(transpose_algebra(F3, 3))


@pytest.mark.parametrize("F", [F2, F3, F5, QQ], ids=repr)
def test_determinant_identity(F):
    rng = random.Random(10)
    for _ in range(200):
        a, b, c, d, e, f = (F.random(rng) for _ in range(6))
        n = F.add(F.sub(F.mul(a, d), F.mul(b, c)), F.mul(e, f))
        assert gamma_matrix(F, a, b, c, d, e, f).det() == F.mul(n, n)


# -- serialization ----------------------------------------------------------------

@pytest.mark.parametrize("A", [transpose_algebra(F2, 2), symplectic_algebra(F3, 4), unitary_algebra(GF(4), 2),
                               switch_algebra(F5, 2), transpose_algebra(QQ, 2), corner_swap(F2)[1]], ids=str)
def test_algebra_roundtrip_bit_exact(A):
    text = dumps(A)
    B = loads(text)
    assert dumps(B) == text
    assert B.type == A.type and B.capacity == A.capacity


def test_subalgebra_roundtrip_with_certificate():
    A = symplectic_algebra(F2, 8)
    L = split_neat(A, 2)
    doc = subalgebra_to_doc(L)
    text = canonical(doc)
    L2 = subalgebra_from_doc(json.loads(text))
    assert canonical(subalgebra_to_doc(L2)) == text
    assert L2.certificate["kind"] == "split"


def test_tampered_involution_is_rejected():
    doc = algebra_to_doc(transpose_algebra(F3, 2))
    doc["involution_images"][1], doc["involution_images"][2] = doc["involution_images"][2], doc["involution_images"][1]
    doc["involution_images"][0] = doc["involution_images"][3]
    with pytest.raises(AlgebraError):
        algebra_from_doc(doc)


def test_extend_scalars_splits_gf4():
    A = transpose_algebra(F2, 2)
    L = max_etale(A)
    assert len(idempotents(L).primitive_idempotents) == 1
    AE, lift, lift_sub = extend_scalars(A, 2)
    assert AE.field == GF(4) and AE.type == ORTHOGONAL
    assert len(idempotents(lift_sub(L)).primitive_idempotents) == 2


def test_extend_scalars_rejects_q():
    with pytest.raises(AlgebraError, match="unsupported extension"):
        extend_scalars(transpose_algebra(QQ, 2), 2)
