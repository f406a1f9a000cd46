"""Etale subalgebras: the trace-form test, minimal polynomials, idempotents and
primitive elements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt

from ..exactalg import Matrix, Poly, Subspace, nullspace, poly_separable, rref
from ..exactalg.fields import Rationals
from ..involutions.algebra import AlgebraError, Subalgebra

IDEMPOTENT_BRUTE_LIMIT = 2**20
RATIONAL_ROOT_LIMIT = 10**12


class EtaleError(AlgebraError):
    pass


def trace_form_nondegenerate(L: Subalgebra) -> bool:
    """(x, y) -> Tr_{L/F}(xy) is nondegenerate."""
    F = L.field
    mults = [L.mult_matrix(b) for b in L.basis]
    gram = [[(mults[i] * mults[j]).trace() for j in range(L.dim)] for i in range(L.dim)]
    return len(rref(F, gram)[1]) == L.dim


def is_etale(L: Subalgebra) -> bool:
    if not L.commutative:
        raise EtaleError("is_etale needs a commutative subalgebra")
    return trace_form_nondegenerate(L)


def has_nonzero_nilpotent(L: Subalgebra) -> bool:
    """Brute-force oracle: some x != 0 in L with x^dim(L) = 0 (finite fields only)."""
    n = max(L.dim, 1)
    for cs in itertools.product(list(L.field.elements()), repeat=L.dim):
        if all(L.field.is_zero(c) for c in cs):
            continue
        x = L.element(cs)
        if _power(x, n, L.unit).is_zero():
            return True
    return False


def _power(x: Matrix, k: int, unit: Matrix) -> Matrix:
    result = unit
    base = x
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def min_poly(x: Matrix, unit: Matrix) -> Poly:
    """Minimal polynomial of x over F in an algebra with identity ``unit``."""
    F = x.field
    powers = [unit]
    while True:
        vecs = [p.flat() for p in powers]
        nxt = powers[-1] * x
        # solve nxt = sum c_i powers[i]
        cols = [list(v) for v in vecs]
        target = nxt.flat()
        rows = [[c[k] for c in cols] + [target[k]] for k in range(len(target))]
        red, piv = rref(F, rows)
        m = len(powers)
        if m not in piv:
            sol = [F.zero] * m
            for r, p in zip(red, piv):
                sol[p] = r[m]
            return Poly(F, [F.neg(s) for s in sol] + [F.one])
        powers.append(nxt)


def frobenius_fixed(L: Subalgebra) -> Subspace:
    """{x in L : x^q = x}; for etale L over GF(q) this is the span of the primitive idempotents."""
    F = L.field
    q = F.order
    A = L.parent
    imgs = [_power(b, q, L.unit) - b for b in L.basis]
    rows = [list(r) for r in zip(*[m.flat() for m in imgs])]
    sols = nullspace(F, rows, L.dim)
    return Subspace(F, [L.space.combine(s) for s in sols], A.n * A.n)


def _split_by_values(F, idems, y_elems):
    """Refine orthogonal idempotents so every y takes a single F-value on each."""
    q = F.order
    for y in y_elems:
        refined = []
        for e in idems:
            ey = e * y
            for lam in F.elements():
                z = ey - e.scale(lam)
                part = e - (_power(z, q - 1, e) if q > 2 else z)
                if not part.is_zero():
                    refined.append(part)
        idems = refined
    return idems


def _rational_roots(p: Poly):
    """Rational roots of p over QQ via the rational root theorem."""
    from fractions import Fraction
    from math import lcm

    den = lcm(*[c.denominator for c in p.coeffs])
    ints = [int(c * den) for c in p.coeffs]
    # strip zero roots
    roots = []
    while ints and ints[0] == 0:
        ints = ints[1:]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(ints) <= 1:
        return roots

    def divisors(n):
        n = abs(n)
        if n > RATIONAL_ROOT_LIMIT:
            raise EtaleError("idempotent enumeration infeasible: coefficients too large for rational root search")
        small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
        return sorted(set(small + [n // d for d in small]))

    for a in divisors(ints[0]):
        for b in divisors(ints[-1]):
            for s in (1, -1):
                r = Fraction(s * a, b)
                if r not in roots and p(r) == 0:
                    roots.append(r)
    return roots


def primitive_idempotents(L: Subalgebra, method: str = "frobenius"):
    """Primitive idempotents of an etale subalgebra, sorted by encoding."""
    if not L.commutative:
        raise EtaleError("idempotents need a commutative subalgebra")
    F = L.field
    if method == "brute":
        idems = [e for e in all_idempotents_brute(L) if not e.is_zero()]
        prim = [e for e in idems if not any(f != e and e * f == f for f in idems if not f.is_zero())]
        return _sorted(F, prim)
    if F.is_finite:
        S = frobenius_fixed(L)
        ys = [Matrix.from_flat(F, b, L.parent.n) for b in S.basis]
        idems = _split_by_values(F, [L.unit], ys)
        return _sorted(F, idems)
    if isinstance(F, Rationals):
        idems = [L.unit]
        for y in L.basis:
            refined = []
            for e in idems:
                refined.extend(_split_rational(e, e * y))
            idems = refined
        for e in idems:
            if not _is_field_component(L, e):
                raise EtaleError("idempotent enumeration infeasible: cannot certify a component over QQ")
        return _sorted(F, idems)
    raise EtaleError("idempotent enumeration infeasible")


def _polyval(p: Poly, x: Matrix, unit: Matrix) -> Matrix:
    acc = Matrix.zeros(x.field, x.nrows)
    for c in reversed(p.coeffs):
        acc = acc * x + unit.scale(c)
    return acc


def _split_rational(e, ey):
    """Split e along the rational eigenvalues of ey (separable minimal polynomial)."""
    F = e.field
    mp = min_poly(ey, e)
    parts = []
    rest = e
    for lam in _rational_roots(mp):
        g = mp // Poly(F, [F.neg(lam), F.one])
        part = _polyval(g, ey, e).scale(F.inv(g(lam)))
        parts.append(part)
        rest = rest - part
    if not rest.is_zero():
        parts.append(rest)
    return parts


def _is_field_component(L, e):
    """e L is a field: some element generates it with an irreducible minimal
    polynomial (irreducibility certified by the absence of rational roots, so
    only up to degree 3)."""
    comp = Subspace(L.field, [(e * b).flat() for b in L.basis], L.parent.n ** 2)
    if comp.dim == 1:
        return True
    if comp.dim > 3:
        return False
    cands = [Matrix.from_flat(L.field, v, L.parent.n) for v in comp.basis]
    cands += [x + y for i, x in enumerate(cands) for y in cands[i + 1:]]
    for x in cands:
        mp = min_poly(x, e)
        if mp.degree == comp.dim and not _rational_roots(mp):
            return True
    return False


def all_idempotents_brute(L: Subalgebra):
    """Every e in L with e^2 = e, by exhaustive search over the finite F-span."""
    F = L.field
    if not F.is_finite or F.order**L.dim > IDEMPOTENT_BRUTE_LIMIT:
        raise EtaleError("idempotent enumeration infeasible")
    out = []
    elems = list(F.elements())
    for cs in itertools.product(elems, repeat=L.dim):
        x = L.element(cs)
        if x * x == x:
            out.append(x)
    return out


def all_idempotents(L: Subalgebra, method: str = "frobenius"):
    """All idempotents: sums of subsets of the primitive ones."""
    prim = primitive_idempotents(L, method)
    F = L.field
    out = []
    for mask in range(2 ** len(prim)):
        acc = Matrix.zeros(F, L.parent.n)
        for i, e in enumerate(prim):
            if mask >> i & 1:
                acc = acc + e
        out.append(acc)
    return _sorted(F, out)


def _sorted(F, mats):
    return sorted(mats, key=lambda m: [F.key(x) for x in m.flat()])


def is_field(L: Subalgebra) -> bool:
    return len(primitive_idempotents(L)) == 1


@dataclass
class EtaleDescription:
    primitive_idempotents: list
    component_minpolys: list
    split: bool
    component_dims: list

    @property
    def degree(self):
        return sum(self.component_dims)


def idempotents(L: Subalgebra, method: str = "frobenius") -> EtaleDescription:
    """Describe an etale L by its primitive idempotents and component fields."""
    if not L.etale:
        raise EtaleError("idempotents() needs an etale subalgebra")
    prim = primitive_idempotents(L, method)
    minpolys, dims = [], []
    for e in prim:
        comp = Subspace(L.field, [(e * b).flat() for b in L.basis], L.parent.n ** 2)
        dims.append(comp.dim)
        gen = None
        for v in comp.basis + [None]:
            if v is None:
                break
            x = Matrix.from_flat(L.field, v, L.parent.n)
            mp = min_poly(x, e)
            if mp.degree == comp.dim:
                gen = mp
                break
        if gen is None:
            gen = _component_generator_minpoly(L, e, comp)
        minpolys.append(gen)
    return EtaleDescription(prim, minpolys, all(d == 1 for d in dims), dims)


def _component_generator_minpoly(L, e, comp):
    import random

    rng = random.Random(0)
    F = L.field
    for _ in range(10000):
        x = Matrix.from_flat(F, comp.combine([F.random(rng) for _ in range(comp.dim)]), L.parent.n)
        mp = min_poly(x, e)
        if mp.degree == comp.dim:
            return mp
    raise EtaleError("no generator found for component field")


def primitive_element(L: Subalgebra) -> Matrix:
    """Generator of a split etale L with separable minimal polynomial of degree [L:F].

    Prefers invertible elements (distinct nonzero scalars on the components); when
    the field is too small for that, distinct scalars including zero are used.
    Ties are broken lexicographically on the scalar tuple.
    """
    desc = idempotents(L)
    if not desc.split:
        raise EtaleError("primitive_element needs a split etale subalgebra")
    F = L.field
    r = len(desc.primitive_idempotents)
    elems = sorted(F.elements(), key=F.key) if F.is_finite else [F.from_int(i) for i in range(r + 1)]
    nonzero = [x for x in elems if not F.is_zero(x)]
    for pool in (nonzero, elems):
        if len(pool) < r:
            continue
        for tup in itertools.permutations(pool, r):
            a = Matrix.zeros(F, L.parent.n)
            for c, e in zip(tup, desc.primitive_idempotents):
                a = a + e.scale(c)
            mp = min_poly(a, L.unit)
            if mp.degree == r and poly_separable(mp):
                return a
    raise EtaleError("no primitive element")
