"""Constructive existence results: maximal etale subalgebras, neat quadratic
extensions, biquadratic and triquadratic subalgebras, sigma-stable quaternions."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from ..exactalg import Matrix, Poly, poly_discriminant, poly_separable
from ..involutions.algebra import SYMPLECTIC, AlgebraError, AlgebraWithInvolution, Subalgebra
from ..involutions.invariants import chi, quadratic_split
from ..involutions.models import corner
from .etale import is_etale, primitive_idempotents
from .frames import split_neat
from .neat import DEFAULT_BUDGET, NotFound, is_neat, search_space

# after this many further candidates without an invertible hit, accept a
# separable but non-invertible generator
INVERTIBLE_WINDOW = 4096


class ConstructionError(AlgebraError):
    pass


def _is_separable_chi(A, a):
    p = chi(A, a, check=False)[0]
    if p.degree < 1:
        return False, p
    if p.degree == 1:
        return True, p
    return not A.field.is_zero(poly_discriminant(p)), p


def max_etale(A: AlgebraWithInvolution, containing: Subalgebra | None = None, seed: int = 0,
              budget: int = DEFAULT_BUDGET, split: bool = False) -> Subalgebra:
    """An etale L in Symm with [L:F] equal to the capacity.

    Without ``containing``: L = F[a] for the first a in Syms (search order of
    ``search_space``) with disc(chi_a) != 0, preferring invertible a. With
    ``split=True`` the frame construction is used instead. With ``containing``
    a neat K, L is assembled corner by corner over the primitive idempotents of
    K and is free as a K-module.
    """
    if containing is not None:
        return _max_etale_containing(A, containing, seed, budget, split)
    if split:
        return split_neat(A, A.capacity, seed)
    kap = A.capacity
    fallback, window = None, 0
    for a in search_space(A, A.syms, seed, budget):
        ok, p = _is_separable_chi(A, a)
        if not ok:
            if fallback is not None:
                window += 1
                if window > INVERTIBLE_WINDOW:
                    break
            continue
        if not A.field.is_zero(p[0]):
            return _generated_checked(A, [a], kap)
        if fallback is None:
            fallback = a
        window += 1
        if window > INVERTIBLE_WINDOW:
            break
    if fallback is not None:
        return _generated_checked(A, [fallback], kap)
    raise NotFound("maximal etale subalgebra")


def _generated_checked(A, gens, kap, unit=None):
    L = Subalgebra.generated(A, gens, unit)
    if L.dim != kap or not L.etale or not L.in_symm:
        raise ConstructionError("generated subalgebra is not maximal etale in Symm")
    return L


def _component(A, K, e):
    return Subalgebra(A, [e * b for b in K.basis], e)


def _max_etale_containing(A, K, seed, budget, split):
    if not K.etale or not K.in_symm or K.unit != A.unit:
        raise ConstructionError("containing subalgebra must be etale, symmetric and unital")
    kap = A.capacity
    if kap % K.dim:
        raise ConstructionError("degree of K does not divide the capacity")
    rank = kap // K.dim
    parts = []
    for i, e in enumerate(primitive_idempotents(K)):
        Ai = corner(A, e)
        Ki = _component(Ai, K, e)
        target = Ki.dim * rank
        if Ki.dim == 1:
            if split:
                Li = split_neat(Ai, target, seed)
            else:
                Li = max_etale(Ai, seed=seed + i, budget=budget)
        else:
            Li = _search_over_field(Ai, Ki, target, seed + i, budget)
        if Li.dim != target:
            raise ConstructionError("corner piece has the wrong degree")
        parts.append(Li)
    basis = [b for P in parts for b in P.basis]
    L = Subalgebra(A, basis, A.unit, certificate={"kind": "split" if split else "maximal-etale",
                                                  "generators": [[b for b in K.basis]],
                                                  "transcript": [f"assembled from {len(parts)} corner pieces"]})
    if not all(L.contains(b) for b in K.basis) or not L.etale or not L.in_symm or L.dim != kap:
        raise ConstructionError("assembled subalgebra fails its postconditions")
    return L


def _search_over_field(Ai, Ki, target, seed, budget):
    W = Ai.centralizer_space(Ki.basis, Ai.syms)
    for a in search_space(Ai, W, seed, budget):
        Li = Subalgebra.generated(Ai, list(Ki.basis) + [a], Ki.unit)
        if Li.dim == target and Li.commutative and Li.etale:
            return Li
    raise NotFound("etale extension of a field component")


@dataclass
class SquareSeparable:
    a: Matrix
    chi: Poly
    f: Poly
    warning: str | None = None


def square_separable_search(A: AlgebraWithInvolution, K: Subalgebra, seed: int = 0,
                            budget: int = DEFAULT_BUDGET) -> SquareSeparable:
    """a in C' cap Symm, invertible, with chi_a = f(X^2) and f separable."""
    F = A.field
    kap = A.capacity
    warning = None
    if F.is_finite and F.order <= kap:
        warning = f"|F| = {F.order} <= capacity {kap}: existence is not guaranteed"
    split = quadratic_split(A, K)
    W = split.C_prime.intersect(A.symm)
    for a in search_space(A, W, seed, budget):
        p = chi(A, a, check=False)[0]
        if F.is_zero(p[0]):
            continue
        if not p.odd_coeffs_vanish():
            raise ConstructionError("chi_a has an odd coefficient for a in C' cap Symm")
        f = p.even_part()
        if f.degree >= 1 and poly_separable(f):
            return SquareSeparable(a, p, f, warning)
    err = NotFound("square separable element")
    err.warning = warning
    raise err


def extend_neat_quadratic(A: AlgebraWithInvolution, K: Subalgebra, seed: int = 0,
                          budget: int = DEFAULT_BUDGET) -> Subalgebra:
    """A neat L centralizing K, linearly disjoint from K, with KL neat of degree
    equal to the capacity."""
    if K.dim != 2:
        raise ConstructionError("K is not quadratic")
    if not is_neat(A, K):
        raise ConstructionError("K is not neat")
    F = A.field
    kap = A.capacity
    transcript = []
    if kap == 2:
        L = Subalgebra(A, [A.unit], A.unit)
        transcript.append("capacity 2: L = F")
    else:
        prims = primitive_idempotents(K)
        if len(prims) == 2:
            M = max_etale(A, containing=K, seed=seed, budget=budget, split=True)
            pieces = [primitive_idempotents(_component(A, M, e)) for e in prims]
            if len(pieces[0]) != len(pieces[1]):
                raise ConstructionError("corner frames differ in length")
            L = Subalgebra(A, [x + y for x, y in zip(*pieces)], A.unit)
            transcript.append("K split: paired corner frames")
        else:
            try:
                ss = square_separable_search(A, K, seed, budget)
                L = Subalgebra.generated(A, [ss.a * ss.a])
                transcript.append("square separable element found")
            except NotFound:
                L = _extend_by_etale_search(A, K, seed, budget)
                transcript.append("square separable search exhausted; used K-split etale search")
    KL = Subalgebra.generated(A, list(K.basis) + list(L.basis))
    KL.certificate = {"kind": "neat-quadratic-extension", "generators": [list(K.basis), list(L.basis)],
                      "transcript": transcript}
    L.certificate = KL.certificate
    _check_extension(A, K, L, KL)
    return L


def _check_extension(A, K, L, KL):
    if not is_neat(A, L):
        raise ConstructionError("L is not neat")
    if KL.dim != K.dim * L.dim:
        raise ConstructionError("K and L are not linearly disjoint")
    if KL.dim != A.capacity or not is_neat(A, KL):
        raise ConstructionError("KL is not neat of degree equal to the capacity")
    if any(x * y != y * x for x in K.basis for y in L.basis):
        raise ConstructionError("L does not centralize K")


def _extend_by_etale_search(A, K, seed, budget):
    """Search maximal etale M containing K whose components all have degree 2;
    L is the span of the primitive idempotents of M."""
    tries = max(1, min(budget, 200))
    for t in range(tries):
        try:
            M = max_etale(A, containing=K, seed=seed + 7919 * t, budget=budget)
        except NotFound:
            continue
        prims = primitive_idempotents(M)
        if 2 * len(prims) != M.dim:
            continue
        L = Subalgebra(A, prims, A.unit)
        KL = Subalgebra.generated(A, list(K.basis) + prims)
        if KL.dim == M.dim and is_neat(A, L):
            return L
    raise NotFound("neat quadratic extension")


def find_c1c3_zero(A: AlgebraWithInvolution, seed: int = 0, budget: int = DEFAULT_BUDGET) -> Matrix:
    """a in Syms outside F with c_1(a) = c_3(a) = 0 (capacity divisible by 4)."""
    kap = A.capacity
    if kap % 4:
        raise ConstructionError("capacity is not divisible by 4")
    F = A.field

    def good(a):
        if A.subspace([A.unit]).contains(a.flat()):
            return False
        cs = chi(A, a, check=False)[1]
        return F.is_zero(cs[0]) and F.is_zero(cs[2])

    L = split_neat(A, 2, seed)
    e1, e2 = primitive_idempotents(L)
    a = e1 if F.characteristic == 2 else e1 - e2
    if good(a):
        return a
    for a in search_space(A, A.syms, seed, budget):
        if good(a):
            return a
    raise NotFound("element with c1 = c3 = 0")


def _quadratic_etale(A, x):
    Q = Subalgebra.generated(A, [x])
    return Q if Q.dim == 2 and Q.etale else None


def neat_biquadratic(A: AlgebraWithInvolution, seed: int = 0, budget: int = DEFAULT_BUDGET,
                     via: str = "split") -> Subalgebra:
    """A neat biquadratic subalgebra for capacity 4, certified by two commuting
    quadratic etale generators.

    ``via="split"`` starts from a split neat quadratic K (the models always have
    zero divisors); ``via="c1c3"`` starts from an element with c_1 = c_3 = 0.
    """
    if A.capacity != 4:
        raise ConstructionError("capacity must be 4")
    if via == "split":
        K = split_neat(A, 2, seed)
    elif via == "c1c3":
        a = find_c1c3_zero(A, seed, budget)
        K = _quadratic_etale(A, a) or _quadratic_etale(A, a * a)
        if K is None or not is_neat(A, K):
            raise ConstructionError("c1 = c3 = 0 element does not give a neat quadratic K")
    else:
        raise ConstructionError(f"unknown route {via!r}")
    L = extend_neat_quadratic(A, K, seed, budget)
    B = Subalgebra.generated(A, list(K.basis) + list(L.basis))
    B.certificate = {"kind": "biquadratic", "generators": [list(K.basis), list(L.basis)],
                     "transcript": [f"route {via}", "K neat quadratic", "L from neat quadratic extension"]}
    verify_multiquadratic(A, B, require_neat=True)
    return B


def verify_multiquadratic(A, B: Subalgebra, require_neat: bool = False, require_stable: bool = False):
    """Re-check a biquadratic or triquadratic certificate; raises on failure."""
    cert = B.certificate or {}
    gens = cert.get("generators", [])
    expected = {"biquadratic": 2, "triquadratic": 3}.get(cert.get("kind"))
    if expected is None or len(gens) != expected:
        raise ConstructionError("certificate has the wrong shape")
    subs = [Subalgebra.generated(A, list(g)) for g in gens]
    for S in subs:
        if S.dim != 2 or not S.etale:
            raise ConstructionError("generator is not quadratic etale")
    for i, S in enumerate(subs):
        for T in subs[i + 1:]:
            if any(x * y != y * x for x in S.basis for y in T.basis):
                raise ConstructionError("generators do not commute")
    gen = Subalgebra.generated(A, [b for S in subs for b in S.basis])
    if gen.space != B.space or B.dim != 2**expected:
        raise ConstructionError("generators do not span the certified subalgebra")
    if not B.commutative or not is_etale(B):
        raise ConstructionError("certified subalgebra is not etale")
    if require_neat and not is_neat(A, B):
        raise ConstructionError("certified subalgebra is not neat")
    if require_stable and any(not B.contains(A.sigma(b)) for b in B.basis):
        raise ConstructionError("certified subalgebra is not sigma-stable")
    return True


def stable_quaternion_cap2(A: AlgebraWithInvolution, K: Subalgebra, seed: int = 0,
                           budget: int = DEFAULT_BUDGET) -> Subalgebra:
    """Q = K + Kx with x in C' cap Symm and x^2 an invertible scalar."""
    if A.capacity != 2:
        raise ConstructionError("capacity must be 2")
    split = quadratic_split(A, K)
    W = split.C_prime.intersect(A.symm)
    scalars = A.subspace([A.unit])
    F = A.field
    for x in search_space(A, W, seed, budget):
        x2 = x * x
        if not scalars.contains(x2.flat()) or x2.is_zero():
            continue
        Q = Subalgebra(A, list(K.basis) + [k * x for k in K.basis], A.unit,
                       certificate={"kind": "quaternion", "generators": [list(K.basis), [x]],
                                    "transcript": ["x in C' cap Symm with x^2 in F^x"]})
        if Q.dim != 4 or any(not Q.contains(A.sigma(b)) for b in Q.basis):
            raise ConstructionError("quaternion subalgebra fails its postconditions")
        return Q
    raise AssertionError("no x with invertible scalar square in C' cap Symm; c_2 should be nondegenerate there")


def triquadratic_split(A: AlgebraWithInvolution, L: Subalgebra) -> Subalgebra:
    """sigma-stable triquadratic L[f] for split symplectic degree 8 and split neat
    biquadratic L, with f = f_1 + ... + f_4, f_i^2 = f_i, f_i + sigma(f_i) = e_i."""
    if A.type != SYMPLECTIC or A.degree != 8:
        raise ConstructionError("needs a symplectic algebra of degree 8")
    if L.dim != 4 or not is_neat(A, L):
        raise ConstructionError("L is not a neat subalgebra of degree 4")
    prims = primitive_idempotents(L)
    if len(prims) != 4:
        raise ConstructionError("L is not split")
    F = A.field
    fs = []
    for i, e in enumerate(prims):
        Ai = corner(A, e)
        fi = next((x for x in search_space(Ai, Ai.space, 0, DEFAULT_BUDGET)
                   if x * x == x and x + Ai.sigma(x) == e), None)
        if fi is None:
            raise ConstructionError("corner quaternion has no idempotent swapped by its involution")
        fs.append(fi)
    f = Matrix.zeros(F, A.n)
    for fi in fs:
        f = f + fi
    e1, e2, e3, _ = prims
    gens = [[A.unit, e1 + e2], [A.unit, e1 + e3], [A.unit, f]]
    T = Subalgebra.generated(A, list(L.basis) + [f])
    T.certificate = {"kind": "triquadratic", "generators": gens,
                     "transcript": ["f_i idempotent in e_i A e_i with f_i + sigma(f_i) = e_i",
                                    "f + sigma(f) = 1, f^2 = f"]}
    if f + A.sigma(f) != A.unit or f * f != f:
        raise ConstructionError("f fails f + sigma(f) = 1 or f^2 = f")
    verify_multiquadratic(A, T, require_stable=True)
    return T


def _irreducible_quadratic(p: Poly) -> bool:
    F = p.field
    if p.degree != 2 or not poly_separable(p):
        return False
    if F.is_finite:
        return not p.roots()
    d = poly_discriminant(p)
    if d < 0:
        return True
    num, den = d.numerator, d.denominator
    return isqrt(num) ** 2 != num or isqrt(den) ** 2 != den


def _square_root(F, x):
    """A square root of x in F, or None."""
    if F.is_finite:
        return next((y for y in sorted(F.elements(), key=F.key) if F.mul(y, y) == x), None)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    return F.div(F.from_int(rn), F.from_int(rd)) if rn * rn == num and rd * rd == den else None


def _renormalise(F, u, c_u, e, c):
    """alpha u + beta e with square minus itself equal to c e, or None."""
    if F.characteristic == 2:
        for beta in sorted(F.elements(), key=F.key):
            if F.add(c_u, F.add(F.mul(beta, beta), beta)) == c:
                return u + e.scale(beta)
        return None
    four = F.from_int(4)
    ratio = F.div(F.add(F.mul(four, c), F.one), F.add(F.mul(four, c_u), F.one))
    alpha = _square_root(F, ratio)
    if alpha is None:
        return None
    beta = F.div(F.sub(F.one, alpha), F.from_int(2))
    return u.scale(alpha) + e.scale(beta)


def neat_quadratic_field(A: AlgebraWithInvolution, seed: int = 0, budget: int = DEFAULT_BUDGET) -> Subalgebra:
    """A neat quadratic subalgebra that is a field: F[u] with u = u_1 + ... + u_m,
    the u_i living in the capacity-2 corners of a split neat subalgebra of degree
    m and all satisfying u_i^2 - u_i = c e_i for one c."""
    from ..involutions.invariants import artin_schreier_generator

    kap = A.capacity
    if kap % 2:
        raise ConstructionError("capacity is odd; no neat quadratic subalgebra")
    F = A.field
    if not F.is_finite:
        budget = min(budget, 2000)
    idems = [A.unit] if kap == 2 else primitive_idempotents(split_neat(A, kap // 2, seed))
    u = Matrix.zeros(F, A.n)
    c = None
    for i, e in enumerate(idems):
        Ai = corner(A, e)
        found = None
        for a in search_space(Ai, Ai.syms, seed + i, budget):
            if not _irreducible_quadratic(chi(Ai, a, check=False)[0]):
                continue
            ui, ci = artin_schreier_generator(Subalgebra(Ai, [e, a], e))
            if c is None:
                c = ci
            found = _renormalise(F, ui, ci, e, c)
            if found is not None:
                break
        if found is None:
            raise NotFound("quadratic field element in a capacity-2 corner")
        u = u + found
    K = Subalgebra(A, [A.unit, u], A.unit, certificate={"kind": "quadratic-field", "generators": [[u]],
                                                        "transcript": [f"u^2 - u = {F.fmt(c)}"]})
    if not is_neat(A, K):
        raise ConstructionError("assembled quadratic field is not neat")
    return K
