"""Univariate polynomials with exact coefficients in a :class:`Field`."""

from __future__ import annotations

import math

from .fields import Field, FieldError


class PolyError(ValueError):
    pass


class Poly:
    """Immutable polynomial, coefficients little-endian, no trailing zeros.

    The zero polynomial has ``coeffs == ()`` and degree ``-math.inf``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(i) for i in ints])

    @classmethod
    def from_roots(cls, field, roots):
        p = cls.const(field, field.one)
        for r in roots:
            p = p * cls(field, [field.neg(r), field.one])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if F.is_zero(c):
                continue
            s = F.fmt(c)
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and c == F.one:
                terms.append(mono)
            else:
                terms.append(s + ("*" + mono if mono else ""))
        return " + ".join(terms)

    def __add__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.sub(self[i], other[i]) for i in range(n)])

    def __mul__(self, other):
        F = self.field
        if not isinstance(other, Poly):
            return Poly(F, [F.mul(c, other) for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def __pow__(self, n: int):
        result = Poly.const(self.field, self.field.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(F), self
        quo = [F.zero] * (dq + 1)
        inv = F.inv(other.lead())
        m = len(other.coeffs)
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + m - 1], inv)
            quo[k] = c
            if not F.is_zero(c):
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = F.sub(rem[k + i], F.mul(c, b))
        return Poly(F, quo), Poly(F, rem[: m - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.field.inv(self.lead())
        return self * inv

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def evaluate_with(self, x, one, add, mul, scale):
        """Horner evaluation in an arbitrary algebra (e.g. at a matrix)."""
        acc = scale(one, self.field.zero)
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), scale(one, c))
        return acc

    def compose_square(self):
        """``p(X^2)``."""
        F = self.field
        out = []
        for c in self.coeffs:
            out.extend([c, F.zero])
        return Poly(F, out)

    def even_part(self):
        """``f`` with ``f(X^2)`` the even-degree part of ``self``."""
        return Poly(self.field, self.coeffs[0::2])

    def odd_coeffs_vanish(self):
        return all(self.field.is_zero(c) for c in self.coeffs[1::2])

    def shift(self, a):
        """``p(X - a)``."""
        F = self.field
        lin = Poly(F, [F.neg(a), F.one])
        acc = Poly(F)
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly.const(F, c)
        return acc

    def map_coeffs(self, field, fn):
        return Poly(field, [fn(c) for c in self.coeffs])

    def roots(self):
        """All roots in a finite field, by exhaustive evaluation."""
        if not self.field.is_finite:
            raise FieldError("root search by evaluation needs a finite field")
        return [x for x in self.field.elements() if self.field.is_zero(self(x))]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_separable(p: Poly) -> bool:
    """gcd(p, p') is constant."""
    if p.is_zero():
        raise PolyError("undefined: separability of the zero polynomial")
    if p.degree == 0:
        return True
    dp = p.derivative()
    if dp.is_zero():
        return False
    return poly_gcd(p, dp).degree == 0


def poly_sqrt_monic(p: Poly) -> Poly:
    """Monic ``q`` with ``q*q == p``; raises if none exists."""
    F = p.field
    if not p.is_monic() or p.degree % 2:
        raise PolyError("not a perfect square: input must be monic of even degree")
    n = p.degree // 2
    if F.characteristic == 2:
        if not p.odd_coeffs_vanish():
            raise PolyError("not a perfect square")
        q = Poly(F, [F.sqrt_char2(c) for c in p.coeffs[0::2]])
    else:
        # solve top-down: p_{n+k} = sum_{i+j=n+k} q_i q_j
        two_inv = F.inv(F.from_int(2))
        q = [F.zero] * (n + 1)
        q[n] = F.one
        for k in range(n - 1, -1, -1):
            # coefficient of X^{n+k} gets 2*q_k*q_n + sum over i,j>k with i+j=n+k
            acc = p[n + k]
            for i in range(k + 1, n):
                j = n + k - i
                if k < j <= n:
                    acc = F.sub(acc, F.mul(q[i], q[j]))
            q[k] = F.mul(acc, two_inv)
        q = Poly(F, q)
    if q * q != p:
        raise PolyError("not a perfect square")
    return q


def sylvester_resultant(a: Poly, b: Poly, deg_a: int, deg_b: int):
    """Resultant via the Sylvester matrix with formal degrees ``deg_a``, ``deg_b``."""
    from .matrix import det

    F = a.field
    n = deg_a + deg_b
    if n == 0:
        return F.one
    rows = []
    ca = [a[deg_a - i] for i in range(deg_a + 1)]  # big-endian
    cb = [b[deg_b - i] for i in range(deg_b + 1)]
    for i in range(deg_b):
        rows.append([F.zero] * i + ca + [F.zero] * (n - i - len(ca)))
    for i in range(deg_a):
        rows.append([F.zero] * i + cb + [F.zero] * (n - i - len(cb)))
    return det(F, rows)


def poly_discriminant(p: Poly):
    """(-1)^(n(n-1)/2) Res(p, p') / lc(p), with p' taken at formal degree n-1."""
    F = p.field
    if p.is_zero() or p.degree < 1:
        raise PolyError("discriminant of a constant polynomial")
    n = p.degree
    res = sylvester_resultant(p, p.derivative(), n, n - 1)
    d = F.div(res, p.lead())
    if (n * (n - 1) // 2) % 2:
        d = F.neg(d)
    return d


def newton_coeffs_from_power_sums(F: Field, powers, n: int):
    """Elementary symmetric e_1..e_n from power sums p_1..p_n (Newton's identities)."""
    if 0 < F.characteristic <= n:
        raise PolyError("characteristic too small")
    powers = list(powers)
    if len(powers) < n:
        raise PolyError("need n power sums")
    e = [F.one]
    for k in range(1, n + 1):
        # k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
        acc = F.zero
        for i in range(1, k + 1):
            term = F.mul(e[k - i], powers[i - 1])
            acc = F.add(acc, term) if i % 2 else F.sub(acc, term)
        e.append(F.div(acc, F.from_int(k)))
    return e[1:]


def charpoly_from_elementary(F: Field, e) -> Poly:
    """X^n - e1 X^(n-1) + e2 X^(n-2) - ..."""
    n = len(e)
    coeffs = [F.zero] * (n + 1)
    coeffs[n] = F.one
    for i, ei in enumerate(e, start=1):
        coeffs[n - i] = ei if i % 2 == 0 else F.neg(ei)
    return Poly(F, coeffs)
