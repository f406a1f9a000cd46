"""Descent of zeros of cubic forms from a quadratic extension F[X]/(p) to F.

A cubic form in n variables is a dict mapping sorted index triples (i, j, k)
to coefficients. A point over F[X]/(p) is given by two vectors b, c with the
point b + cX.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from ..exactalg import Field, Poly
from ..involutions.models import nonsplit_quadratic_constant


class SpringerError(ValueError):
    pass


def monomials(n: int):
    return list(itertools.combinations_with_replacement(range(n), 3))


def evaluate(F: Field, f: dict, v):
    acc = F.zero
    for (i, j, k), coef in f.items():
        acc = F.add(acc, F.mul(coef, F.mul(v[i], F.mul(v[j], v[k]))))
    return acc


def evaluate_poly(F: Field, f: dict, b, c) -> Poly:
    """f(b + cX) as a polynomial in X."""
    lin = [Poly(F, [bi, ci]) for bi, ci in zip(b, c)]
    acc = Poly(F, [])
    for (i, j, k), coef in f.items():
        acc = acc + lin[i] * lin[j] * lin[k] * coef
    return acc


def irreducible_quadratic(F: Field) -> Poly:
    """X^2 - r for the smallest non-square r in odd characteristic, else X^2 + X + c."""
    if not F.is_finite:
        raise SpringerError("planting needs a finite field")
    if F.characteristic == 2:
        c = nonsplit_quadratic_constant(F)
        return Poly(F, [F.neg(c), F.neg(F.one), F.one])
    squares = {F.mul(x, x) for x in F.elements()}
    r = next(x for x in sorted(F.elements(), key=F.key) if x not in squares)
    return Poly(F, [F.neg(r), F.zero, F.one])


def springer_descent(F: Field, f: dict, b, c, p: Poly):
    """A nonzero v in F^n with f(v) = 0, from the zero b + cX of f modulo p."""
    if p.degree != 2 or p.roots():
        raise SpringerError("p must be an irreducible quadratic")
    if all(F.is_zero(x) for x in list(b) + list(c)):
        raise SpringerError("zero input vector")
    g = evaluate_poly(F, f, b, c)
    h, r = divmod(g, p)
    if not r.is_zero():
        raise SpringerError("f(b + cX) is not divisible by p")
    if h.degree <= 0:
        # deg g <= 2, so the X^3 coefficient f(c) vanishes
        if any(not F.is_zero(x) for x in c) and F.is_zero(evaluate(F, f, c)):
            result = list(c)
        else:
            result = list(b)
    else:
        a = F.neg(F.div(h[0], h[1]))
        result = [F.add(bi, F.mul(ci, a)) for bi, ci in zip(b, c)]
        if all(F.is_zero(x) for x in result):
            # f(b + cX) = (X - a)^3 f(c) and p is prime to X - a
            result = list(c)
    if all(F.is_zero(x) for x in result) or not F.is_zero(evaluate(F, f, result)):
        raise SpringerError("descent produced an invalid zero")
    return result


@dataclass
class PlantedInstance:
    field: Field
    form: dict
    b: list
    c: list
    p: Poly


def plant(F: Field, n: int = 3, seed: int = 0, p: Poly | None = None) -> PlantedInstance:
    """A random cubic form with a prescribed zero b + cX modulo p.

    Start from a random form f0, then add multiples of two monomials whose
    values at b + cX are independent modulo p, cancelling f0(b + cX) mod p.
    """
    if n < 2:
        raise SpringerError("need at least two variables")
    p = irreducible_quadratic(F) if p is None else p
    rng = random.Random(seed)
    mons = monomials(n)
    while True:
        f = {m: F.random(rng) for m in mons}
        b = [F.random(rng) for _ in range(n)]
        c = [F.random(rng) for _ in range(n)]
        if all(F.is_zero(x) for x in c):
            continue
        g = evaluate_poly(F, f, b, c) % p
        r = [g[0], g[1]]
        pairs = list(itertools.combinations(mons, 2))
        rng.shuffle(pairs)
        for m1, m2 in pairs:
            s = evaluate_poly(F, {m1: F.one}, b, c) % p
            t = evaluate_poly(F, {m2: F.one}, b, c) % p
            det = F.sub(F.mul(s[0], t[1]), F.mul(s[1], t[0]))
            if F.is_zero(det):
                continue
            # alpha s + beta t = -r
            alpha = F.div(F.sub(F.mul(F.neg(r[0]), t[1]), F.mul(F.neg(r[1]), t[0])), det)
            beta = F.div(F.sub(F.mul(s[0], F.neg(r[1])), F.mul(s[1], F.neg(r[0]))), det)
            f[m1] = F.add(f[m1], alpha)
            f[m2] = F.add(f[m2], beta)
            if not (evaluate_poly(F, f, b, c) % p).is_zero():
                raise SpringerError("planting failed to cancel the remainder")
            return PlantedInstance(F, f, b, c, p)
