"""Property suites. Each suite takes an instance, a seed, a sample count and a
search budget and records named checks on a Checker."""

from __future__ import annotations

import math

from ..exactalg import Matrix
from ..involutions import (ORTHOGONAL, SYMPLECTIC, UNITARY, AlgebraError, Subalgebra, c_form, cap2_form, chi,
                           chi_over_kfield, conjugate_cap2, corner, extend_scalars, quadratic_split,
                           subalgebra_from_doc, subalgebra_to_doc)
from ..involutions.invariants import kfield_char_poly
from ..exactalg.fields import QuadraticExtension
from ..neat import (NotFound, find_c1c3_zero, frame, is_neat, max_etale, neat_biquadratic, neat_quadratic_field,
                    extend_neat_quadratic, plant, primitive_idempotents, springer_descent, split_neat,
                    stable_quaternion_cap2, triquadratic_split, verify_multiquadratic)
from ..neat.frames import _projection
from ..neat.springer import evaluate
from .checks import guard
from .instances import instance_rng

CAP2_DIMS = {ORTHOGONAL: 3, UNITARY: 4, SYMPLECTIC: 6}


def divisors(n):
    return [r for r in range(1, n + 1) if n % r == 0]


def base_kind(A):
    return A.model.get("base", {}).get("kind", "matrix")


def sum_of(A, mats):
    acc = Matrix.zeros(A.field, A.n)
    for m in mats:
        acc = acc + m
    return acc


def corner_degree(A, e):
    """Degree of eAe over its centre, read off from ranks."""
    return e.rank() * A.degree // A.unit.rank()


def random_grouping(idems, rng, equal=False):
    """Random partition of the frame into nonempty groups; equal sizes if asked."""
    k = len(idems)
    order = list(range(k))
    rng.shuffle(order)
    if equal:
        r = rng.choice(divisors(k))
        size = k // r
        groups = [order[i * size:(i + 1) * size] for i in range(r)]
    else:
        r = rng.randint(1, k)
        cuts = sorted(rng.sample(range(1, k), r - 1)) if r > 1 else []
        bounds = [0] + cuts + [k]
        groups = [order[bounds[i]:bounds[i + 1]] for i in range(r)]
    return groups


def grouped_subalgebra(A, idems, groups):
    es = [sum_of(A, [idems[i] for i in g]) for g in groups]
    return Subalgebra(A, es, A.unit), es


def same_poly(p, q):
    """Coefficient equality, reading F-coefficients inside a quadratic extension if needed."""
    if p.field == q.field:
        return p == q
    for a, b in ((p, q), (q, p)):
        if isinstance(b.field, QuadraticExtension) and b.field.base == a.field:
            return len(a.coeffs) == len(b.coeffs) and all(b.field.embed(x) == y for x, y in zip(a.coeffs, b.coeffs))
    return False


# -- prop-neat ------------------------------------------------------------------

def suite_prop_neat(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "prop-neat")
    kap = A.capacity
    with guard(ck, "maxneat"):
        L = max_etale(A, seed=seed, budget=budget)
        v = is_neat(A, L)
        ck.check("maxneat", v.neat and L.dim == kap, f"[L:F] = {L.dim}, capacity {kap}, {v.failed_condition}")
    for r in divisors(math.gcd(kap, A.coindex)):
        with guard(ck, "split-neat"):
            L = split_neat(A, r, seed)
            ck.check("split-neat", L.dim == r and is_neat(A, L).neat, f"degree {r}")
    idems = frame(A, seed)
    z = A.centre.dim
    for _ in range(samples):
        groups = random_grouping(idems, rng)
        L, es = grouped_subalgebra(A, idems, groups)
        ds = [corner_degree(A, e) for e in es]
        dim_c = A.centralizer_space(es).dim
        lhs = L.dim * dim_c - A.dim
        rhs = z * sum((ds[i] - ds[j]) ** 2 for i in range(len(ds)) for j in range(i + 1, len(ds)))
        ck.check("dimension-identity", lhs == rhs, f"corner degrees {ds}: {lhs} != {rhs}")
        v = is_neat(A, L)
        ck.check("neat-iff-equal-corners", v.neat == (len(set(ds)) == 1), f"corner degrees {ds}, verdict {v}")
        if v.neat:
            ck.check("neat-degrees", kap % L.dim == 0, f"[L:F] = {L.dim}, capacity {kap}")
    # subalgebras of the neat frame algebra over which it is free
    for _ in range(samples):
        K, _ = grouped_subalgebra(A, idems, random_grouping(idems, rng, equal=True))
        v = is_neat(A, K)
        ck.check("subneat", v.neat, f"{v.failed_condition} {v.detail}")
    for _ in range(samples):
        S = Subalgebra.generated(A, [A.random_in(A.syms, rng)])
        if S.etale:
            ck.check("etale-degree-bound", S.dim <= kap, f"[F[a]:F] = {S.dim} > capacity {kap}")
        v = is_neat(A, S)
        if v.neat:
            ck.check("neat-degrees", kap % S.dim == 0, f"[L:F] = {S.dim}, capacity {kap}")


# -- lem-PC ---------------------------------------------------------------------

def suite_lem_pc(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "lem-PC")
    if A.capacity % 2 or A.coindex % 2:
        ck.skip("PC", "needs even capacity and coindex")
        return
    with guard(ck, "PC"):
        K = split_neat(A, 2, seed)
        e1, e2 = primitive_idempotents(K)
        A1, A2 = corner(A, e1), corner(A, e2)
        ck.check("PC-corner-degrees", A1.degree == A2.degree, f"{A1.degree} != {A2.degree}")
        sp = quadratic_split(A, K)
        for _ in range(samples):
            a = A.random_in(sp.C_prime, rng)
            u, v = e1 * a * e2, e2 * a * e1
            p = A.reduced_char_poly(a)
            p1 = A1.reduced_char_poly(u * v).compose_square()
            p2 = A2.reduced_char_poly(v * u).compose_square()
            ck.check("PC", u + v == a and p == p1 == p2, f"{p} / {p1} / {p2}")
        _anticom(A, sp, samples, rng, ck)
    if A.kind != "first" or base_kind(A) != "matrix":
        ck.skip("PC2", "K-characteristic polynomials are computed for first-kind matrix models")
        ck.skip("PC3", "K-characteristic polynomials are computed for first-kind matrix models")
        return
    with guard(ck, "PC2"):
        Kf = neat_quadratic_field(A, seed, budget)
        sp = quadratic_split(A, Kf)
        for _ in range(samples):
            a = A.random_in(sp.C_prime, rng)
            lhs = A.reduced_char_poly(a)
            rhs = kfield_char_poly(A, sp.u, sp.c, a * a).compose_square()
            ck.check("PC2", same_poly(lhs, rhs), f"{lhs} != {rhs}")
        W = sp.C_prime.intersect(A.symm)
        for _ in range(samples):
            a = A.random_in(W, rng)
            a2 = a * a
            target = A.symd if A.type == SYMPLECTIC else A.symm
            ck.check("PC3-square-in-Syms", sp.C.contains(a2) and target.contains(a2.flat()), "a^2 not in Syms(sigma_C)")
            lhs = chi(A, a)[0]
            rhs = chi_over_kfield(A, sp.u, sp.c, a2).compose_square()
            ck.check("PC3", same_poly(lhs, rhs), f"{lhs} != {rhs}")
        _anticom(A, sp, samples, rng, ck)


def _anticom(A, sp, samples, rng, ck):
    W = sp.C_prime.intersect(A.symm)
    for _ in range(samples):
        a = A.random_in(W, rng)
        p = chi(A, a)[0]
        ck.check("anticom-square", p.odd_coeffs_vanish(), f"chi = {p}")


# -- keepstype ------------------------------------------------------------------

def expected_corner_type(A, e):
    if A.field.characteristic == 2 and A.type == ORTHOGONAL and A.symd.contains(e.flat()):
        return SYMPLECTIC
    return A.type


def suite_keepstype(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "keepstype")
    idems = frame(A, seed)
    for _ in range(samples):
        k = rng.randint(1, len(idems))
        e = sum_of(A, rng.sample(idems, k))
        B = corner(A, e)
        exp = expected_corner_type(A, e)
        ck.check("keepstype", B.type == exp, f"corner type {B.type}, expected {exp}")
    F = A.field
    if not (F.characteristic == 2 and A.type == ORTHOGONAL and base_kind(A) == "matrix" and A.degree >= 2):
        return
    # projections onto planes on which the form is alternating
    G = A.ginv
    found = 0
    for _ in range(50 * samples):
        if found >= samples:
            break
        v = [F.random(rng) for _ in range(A.n)]
        w = [F.random(rng) for _ in range(A.n)]
        bvv, bww, bvw = (F.dot(x, G.apply(y)) for x, y in ((v, v), (w, w), (v, w)))
        if not (F.is_zero(bvv) and F.is_zero(bww)) or F.is_zero(bvw):
            continue
        found += 1
        e = _projection(F, G, [v, w])
        ck.check("keepstype-symd-idempotent", A.symd.contains(e.flat()), "projection onto an alternating plane")
        ck.check("keepstype-exception", corner(A, e).type == SYMPLECTIC, "corner is not symplectic")


# -- capmaxdim ------------------------------------------------------------------

def suite_capmaxdim(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "capmaxdim")
    kap = A.capacity
    with guard(ck, "max-etale"):
        L = max_etale(A, seed=seed, budget=budget)
        ck.check("max-etale", L.dim == kap and L.etale, f"[L:F] = {L.dim}, capacity {kap}")
        ck.check("max-etale-in-syms", all(A.in_syms(b) for b in L.basis), "L not inside Syms")
        v = is_neat(A, L)
        ck.check("maxneat", v.neat, f"{v.failed_condition} {v.detail}")
    for _ in range(samples):
        S = Subalgebra.generated(A, [A.random_in(A.syms, rng)])
        if S.etale:
            ck.check("etale-degree-bound", S.dim <= kap, f"[F[a]:F] = {S.dim} > capacity {kap}")


# -- cap2-form ------------------------------------------------------------------

def capacity_two_piece(A, seed):
    """A itself at capacity 2, else the corner of two frame idempotents."""
    if A.capacity == 2:
        return A
    if A.capacity < 2:
        return None
    e1, e2 = frame(A, seed)[:2]
    return corner(A, e1 + e2)


def suite_cap2_form(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "cap2-form")
    B = capacity_two_piece(A, seed)
    if B is None:
        ck.skip("cap2-dims", "capacity 1")
        return
    F = B.field
    with guard(ck, "cap2-nondegenerate"):
        q = cap2_form(B)
        ck.check("cap2-dims", q.dim == CAP2_DIMS[B.type], f"dim Syms = {q.dim} for {B.type}")
        ck.check("cap2-nondegenerate", q.is_nondegenerate(), f"rad(q) {q.meta['rad_dim']}, rad(b_q) {q.meta['rad_polar_dim']}")
        for _ in range(samples):
            xs = [F.random(rng) if F.is_finite else F.from_int(rng.randint(-5, 5)) for _ in range(q.dim)]
            x = q.vector(xs)
            c2 = c_form(B, x, 2)
            ck.check("cap2-evaluate", q.evaluate(xs) == c2, "stored form disagrees with c_2")
            ck.check("cap2-norm-rule", x * conjugate_cap2(B, x) == B.scalar(c2), "x x-bar != c_2(x)")
    quads = []
    with guard(ck, "anticom-space"):
        quads.append(split_neat(B, 2, seed))
    with guard(ck, "anticom-space"):
        quads.append(neat_quadratic_field(B, seed, budget))
    for K in quads:
        with guard(ck, "anticom-space"):
            _anticom_space(B, K, samples, rng, ck)
        with guard(ck, "stable-quaternion"):
            Q = stable_quaternion_cap2(B, K, seed, budget)
            ck.check("stable-quaternion", Q.dim == 4, "quaternion subalgebra has the wrong dimension")


def _anticom_space(B, K, samples, rng, ck):
    sp = quadratic_split(B, K)
    W = sp.C_prime.intersect(B.symm)
    Ks = B.subspace(K.basis)
    ck.check("anticom-space", Ks.dim + W.dim == B.syms.dim and Ks.sum(W) == B.syms,
             f"dim K {Ks.dim} + dim W {W.dim} vs dim Syms {B.syms.dim}")

    def c2(x):
        return c_form(B, x, 2)

    F = B.field
    for _ in range(samples):
        k = B.random_in(Ks, rng)
        w = B.random_in(W, rng)
        polar = F.sub(F.sub(c2(k + w), c2(k)), c2(w))
        ck.check("anticom-orthogonal", F.is_zero(polar), "b_q(K, W) != 0")
        ck.check("anticom-norm", B.scalar(c2(k)) == k * sp.gamma(k), "c_2 on K is not the norm")
        ck.check("anticom-minus-square", B.scalar(c2(w)) == -(w * w), "c_2(w) != -w^2")


# -- neat-ext -------------------------------------------------------------------

def suite_neat_ext(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "neat-ext")
    if not A.field.is_finite:
        ck.skip("neat-ext", "scalar extension is implemented over finite fields")
        return
    AE, _, lift_sub = extend_scalars(A, 2)
    pairs = []
    for r in divisors(math.gcd(A.capacity, A.coindex)):
        with guard(ck, "neat-ext-build"):
            pairs.append(split_neat(A, r, seed))
    idems = frame(A, seed)
    for _ in range(samples):
        pick = rng.randrange(3)
        if pick == 0:
            pairs.append(grouped_subalgebra(A, idems, random_grouping(idems, rng))[0])
        elif pick == 1:
            pairs.append(Subalgebra.generated(A, [A.random_in(A.syms, rng)]))
        else:
            pairs.append(Subalgebra.generated(A, [A.random_element(rng)]))
    for L in pairs[:samples]:
        v = is_neat(A, L)
        vE = is_neat(AE, lift_sub(L))
        name = "neat-ext-neat" if v.neat else "neat-ext-not-neat"
        ck.check(name, v.neat == vE.neat, f"{v.failed_condition} over F, {vE.failed_condition} after extension")


# -- neatquad -------------------------------------------------------------------

def suite_neatquad(A, seed, samples, budget, ck):
    rng = instance_rng(seed, "neatquad")
    kap = A.capacity
    if kap % 2:
        ck.skip("neatquad", "odd capacity")
        return
    F = A.field
    candidates = []
    if A.coindex % 2 == 0:
        with guard(ck, "neatquad-K"):
            candidates.append(("split", split_neat(A, 2, seed)))
    with guard(ck, "neatquad-K"):
        candidates.append(("field", neat_quadratic_field(A, seed, budget)))
    for label, K in candidates:
        with guard(ck, "neatquad-split"):
            _quadratic_split_checks(A, K, samples, rng, ck)
        with guard(ck, "neatquad-extend"):
            try:
                L = extend_neat_quadratic(A, K, seed, budget)
            except NotFound as exc:
                if F.is_finite and F.order <= kap:
                    ck.not_found("neatquad-extend", f"{label}: {exc}")
                else:
                    ck.fail("neatquad-extend", f"{label}: {exc} with |F| > capacity")
                continue
            KL = Subalgebra.generated(A, list(K.basis) + list(L.basis))
            ck.check("neatquad-extend", KL.dim == kap and is_neat(A, KL).neat and is_neat(A, L).neat,
                     f"{label}: [KL:F] = {KL.dim}")
        if kap == 2:
            with guard(ck, "stable-quaternion"):
                Q = stable_quaternion_cap2(A, K, seed, budget)
                ck.check("stable-quaternion", Q.dim == 4, "wrong dimension")


def _quadratic_split_checks(A, K, samples, rng, ck):
    sp = quadratic_split(A, K)
    C, Cp = sp.C.space, sp.C_prime
    ck.check("neatquad-dims", 2 * C.dim == A.dim and 2 * Cp.dim == A.dim and C.sum(Cp) == A.space,
             f"dim C {C.dim}, dim C' {Cp.dim}, dim A {A.dim}")
    for _ in range(samples):
        x = A.random_element(rng)
        y = sp.phi(x)
        ck.check("neatquad-phi", sp.phi(y) == y and sp.C.contains(y) and sp.in_c_prime(x - y),
                 "phi is not the projection onto C along C'")
    symm_part = Cp.intersect(A.symm)
    ck.check("neatquad-symm-symd", symm_part == Cp.intersect(A.symd) and 4 * symm_part.dim == A.dim,
             f"dim(C' cap Symm) = {symm_part.dim}")
    symd_c = A.image(lambda x: x + A.sigma(x), C)
    ck.check("neatquad-symd-restrict", C.intersect(A.symd) == symd_c, "C cap Symd != Symd(sigma|C)")


# -- biquadratic / albert-rowen -------------------------------------------------

def _roundtrip(A, B):
    again = subalgebra_from_doc(subalgebra_to_doc(B), parent=A)
    return again.space == B.space and again.certificate is not None


def suite_biquadratic(A, seed, samples, budget, ck):
    if A.capacity != 4:
        ck.skip("biquadratic", "capacity is not 4")
        return
    for via in ("split", "c1c3"):
        name = f"biquadratic-{via}"
        with guard(ck, name):
            if via == "c1c3":
                a = find_c1c3_zero(A, seed, budget)
                cs = chi(A, a)[1]
                F = A.field
                ck.check("c1c3-zero", F.is_zero(cs[0]) and F.is_zero(cs[2]), f"c = {cs}")
            B = neat_biquadratic(A, seed, budget, via=via)
            ck.check(name, verify_multiquadratic(A, B, require_neat=True) and B.dim == 4, "certificate rejected")
            ck.check(f"{name}-roundtrip", _roundtrip(A, B), "certificate does not survive serialization")


def suite_albert_rowen(A, seed, samples, budget, ck):
    if A.type != SYMPLECTIC or A.degree != 8:
        ck.skip("albert-rowen", "needs symplectic degree 8")
        return
    with guard(ck, "albert-rowen"):
        B = neat_biquadratic(A, seed, budget, via="split")
        T = triquadratic_split(A, B)
        ok = T.dim == 8 and verify_multiquadratic(A, T, require_stable=True) and T.etale
        ck.check("albert-rowen", ok, f"dim {T.dim}")
        ck.check("albert-rowen-roundtrip", _roundtrip(A, T), "certificate does not survive serialization")


# -- springer -------------------------------------------------------------------

def suite_springer(F, seed, samples, budget, ck):
    if not F.is_finite:
        ck.skip("springer", "planting needs a finite field")
        return
    rng = instance_rng(seed, "springer")
    for i in range(samples):
        n = 3 + i % 2
        with guard(ck, "springer"):
            inst = plant(F, n, seed=rng.getrandbits(32))
            v = springer_descent(F, inst.form, inst.b, inst.c, inst.p)
            ok = any(not F.is_zero(x) for x in v) and F.is_zero(evaluate(F, inst.form, v))
            ck.check("springer", ok, f"descent output {v}")


SUITES = {
    "prop-neat": suite_prop_neat,
    "lem-PC": suite_lem_pc,
    "keepstype": suite_keepstype,
    "capmaxdim": suite_capmaxdim,
    "cap2-form": suite_cap2_form,
    "neat-ext": suite_neat_ext,
    "neatquad": suite_neatquad,
    "biquadratic": suite_biquadratic,
    "albert-rowen": suite_albert_rowen,
    "springer": suite_springer,
}
FIELD_ONLY = {"springer"}
