"""Exact fields: GF(p), GF(p^k), the rationals, and quadratic extensions.

Elements are plain Python values so that matrices stay cheap:

* ``GF(p)``   -- ints in ``range(p)``
* ``GF(p^k)`` -- ints ``sum(a_i * p**i)`` encoding ``sum(a_i * t**i)`` modulo the
  stored irreducible modulus
* ``QQ``      -- ``fractions.Fraction``
* ``QuadraticExtension(F, c)`` -- pairs ``(x, y)`` meaning ``x + y*t`` with
  ``t**2 = t + c``

Field objects are immutable and compare equal when their descriptors match.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

# Lexicographically smallest monic irreducible polynomials (little-endian).
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (2, 8): (1, 0, 0, 0, 1, 1, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (1, 0, 1, 1, 1),
    (3, 5): (1, 0, 0, 0, 2, 1),
    (3, 6): (1, 0, 0, 0, 1, 1, 1),
    (3, 7): (1, 0, 0, 0, 0, 1, 2, 1),
    (3, 8): (1, 0, 0, 0, 0, 1, 1, 0, 1),
    (5, 2): (1, 1, 1),
    (5, 3): (1, 0, 1, 1),
    (5, 4): (1, 0, 1, 1, 1),
    (5, 5): (1, 0, 0, 0, 4, 1),
    (5, 6): (1, 0, 0, 0, 1, 1, 1),
    (5, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (5, 8): (1, 0, 0, 0, 0, 1, 1, 0, 1),
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# -- dense polynomials over GF(p) as little-endian int lists (for moduli only) --

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(_trim(out), m, p)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _xpow_mod(e, m, p):
    """X**e mod m over GF(p)."""
    result, base = [1], _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible_mod_p(modulus, p: int) -> bool:
    """Rabin's test: gcd(X^(p^i) - X, f) = 1 for i <= k/2 and f | X^(p^k) - X."""
    f = _trim([c % p for c in modulus])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for i in range(1, k // 2 + 1):
        h = _xpow_mod(p**i, f, p)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else list(h)
        h[1] = (h[1] - 1) % p
        if len(_pgcd(f, _trim(h), p)) > 1:
            return False
    h = _xpow_mod(p**k, f, p)
    return _trim(h) == [0, 1]


class Field:
    """Common interface. Subclasses supply the arithmetic."""

    characteristic: int
    order: int | None  # None means infinite
    zero = 0
    one = 1

    # descriptor used for equality, hashing and serialization
    def spec(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec() == other.spec()

    def __hash__(self):
        return hash(repr(sorted(self.spec().items())))

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def from_int(self, n: int):
        raise NotImplementedError

    def dot(self, xs, ys):
        acc = self.zero
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def sum(self, xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def elements(self) -> Iterator:
        raise FieldError("field is infinite")

    def random(self, rng):
        raise NotImplementedError

    def sqrt_char2(self, a):
        """Inverse Frobenius in characteristic 2 (unique square root)."""
        if self.characteristic != 2 or not self.is_finite:
            raise FieldError("inverse Frobenius only available for finite fields of characteristic 2")
        return self.pow(a, self.order // 2)

    def encode(self, a):
        return a

    def decode(self, v):
        return v

    def fmt(self, a) -> str:
        return str(self.encode(a))

    def key(self, a):
        """Sort key giving the lexicographic order on scalar encodings."""
        return a


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def spec(self):
        return {"kind": "prime", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def from_int(self, n):
        return n % self.p

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def sum(self, xs):
        return sum(xs) % self.p

    def elements(self):
        return iter(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)

    def decode(self, v):
        v = int(v)
        if not 0 <= v < self.p:
            raise FieldError(f"{v} is not a canonical element of GF({self.p})")
        return v

    def fmt(self, a):
        # symmetric representatives read better for small p
        return str(a - self.p) if self.p > 2 and a > self.p // 2 else str(a)


class ExtensionField(Field):
    """GF(p^k) with integer-encoded elements and log/exp multiplication tables."""

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 2:
            raise FieldError("extension degree must be at least 2; use PrimeField")
        if modulus is None:
            if (p, k) not in MODULI:
                raise FieldError(f"no stored modulus for GF({p}^{k})")
            modulus = MODULI[(p, k)]
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not is_irreducible_mod_p(modulus, p):
            raise FieldError(f"modulus {modulus} is not irreducible over GF({p})")
        self.p, self.k, self.modulus = p, k, modulus
        self.characteristic = p
        self.order = p**k
        self._build_tables()

    def spec(self):
        return {"kind": "extension", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    # digit vectors <-> ints
    def _digits(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _mul_slow(self, a, b):
        prod = _pmulmod(_trim(self._digits(a)), _trim(self._digits(b)), list(self.modulus), self.p)
        return self._undigits(prod + [0] * (self.k - len(prod)))

    def _build_tables(self):
        q = self.order
        # primitive element: smallest generator of the multiplicative group
        factors = [r for r in range(2, q) if (q - 1) % r == 0 and is_prime(r)]
        for g in range(2 if q > 2 else 1, q):
            ok = True
            for r in factors:
                x, e, acc = g, (q - 1) // r, 1
                while e:
                    if e & 1:
                        acc = self._mul_slow(acc, x)
                    x = self._mul_slow(x, x)
                    e >>= 1
                if acc == 1:
                    ok = False
                    break
            if ok:
                break
        self.generator = g
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_slow(v, g)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log
        if self.p == 2:
            self._add_table = None
            self._neg_table = None
        else:
            self._neg_table = [self._undigits([(-d) % self.p for d in self._digits(a)]) for a in range(q)]
            if q <= 2048:
                self._add_table = [
                    [self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))]) for b in range(q)]
                    for a in range(q)
                ]
            else:
                self._add_table = None

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        if self.p == 2:
            return a
        return self._neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.order - 1)]

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return iter(range(self.order))

    def random(self, rng):
        return rng.randrange(self.order)

    def decode(self, v):
        v = int(v)
        if not 0 <= v < self.order:
            raise FieldError(f"{v} is not a canonical element of {self!r}")
        return v

    def fmt(self, a):
        if a < self.p:
            return str(a)
        terms = []
        for i, d in enumerate(self._digits(a)):
            if d:
                mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(mono if d == 1 and i else f"{d}" + ("" if i == 0 else f"*{mono}"))
        return "+".join(reversed(terms))


class Rationals(Field):
    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def spec(self):
        return {"kind": "rationals"}

    def __repr__(self):
        return "QQ"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def pow(self, a, n):
        return Fraction(a) ** n

    def from_int(self, n):
        return Fraction(n)

    def dot(self, xs, ys):
        return Fraction(sum(x * y for x, y in zip(xs, ys)))

    def sum(self, xs):
        return Fraction(sum(xs))

    def random(self, rng, height: int = 5):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def encode(self, a):
        return [a.numerator, a.denominator]

    def decode(self, v):
        if isinstance(v, (list, tuple)):
            n, d = v
            x = Fraction(int(n), int(d))
            if x.numerator != int(n) or x.denominator != int(d):
                raise FieldError(f"{v} is not in lowest terms")
            return x
        return Fraction(int(v))

    def fmt(self, a):
        return str(a)

    def key(self, a):
        # lexicographic on the encoding (numerator, denominator)
        return (a.numerator, a.denominator)


class QuadraticExtension(Field):
    """``base[t]/(t^2 - t - c)``; a field when that polynomial is irreducible.

    Used to carry coefficients in a quadratic etale algebra ``K`` (the centre of a
    unitary model, or a quadratic subfield when computing over it). ``gamma`` is
    the conjugation ``t -> 1 - t``.
    """

    def __init__(self, base: Field, c):
        self.base = base
        self.c = c
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order**2
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)

    def spec(self):
        return {"kind": "quadratic", "base": self.base.spec(), "c": self.base.encode(self.c)}

    def __repr__(self):
        return f"{self.base!r}[t]/(t^2-t-{self.base.fmt(self.c)})"

    def embed(self, a):
        return (a, self.base.zero)

    def theta(self):
        return (self.base.zero, self.base.one)

    def in_base(self, a) -> bool:
        return self.base.is_zero(a[1])

    def add(self, a, b):
        F = self.base
        return (F.add(a[0], b[0]), F.add(a[1], b[1]))

    def neg(self, a):
        F = self.base
        return (F.neg(a[0]), F.neg(a[1]))

    def sub(self, a, b):
        F = self.base
        return (F.sub(a[0], b[0]), F.sub(a[1], b[1]))

    def mul(self, a, b):
        # (x + y t)(u + v t) = xu + yv c + (xv + yu + yv) t
        F = self.base
        x, y = a
        u, v = b
        yv = F.mul(y, v)
        return (F.add(F.mul(x, u), F.mul(yv, self.c)), F.add(F.add(F.mul(x, v), F.mul(y, u)), yv))

    def conj(self, a):
        F = self.base
        x, y = a
        return (F.add(x, y), F.neg(y))

    def norm(self, a):
        return self.mul(a, self.conj(a))[0]

    def inv(self, a):
        n = self.norm(a)
        if self.base.is_zero(n):
            raise ZeroDivisionError("element is not invertible")
        ni = self.base.inv(n)
        x, y = self.conj(a)
        return (self.base.mul(x, ni), self.base.mul(y, ni))

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def is_zero(self, a):
        return self.base.is_zero(a[0]) and self.base.is_zero(a[1])

    def elements(self):
        for y in self.base.elements():
            for x in self.base.elements():
                yield (x, y)

    def random(self, rng):
        return (self.base.random(rng), self.base.random(rng))

    def encode(self, a):
        return [self.base.encode(a[0]), self.base.encode(a[1])]

    def decode(self, v):
        return (self.base.decode(v[0]), self.base.decode(v[1]))

    def fmt(self, a):
        return f"({self.base.fmt(a[0])}+{self.base.fmt(a[1])}t)"

    def key(self, a):
        return (self.base.key(a[1]), self.base.key(a[0]))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> Field:
    """GF(p) or GF(p^k) with the stored modulus (cached; fields are immutable).

    ``GF(q)`` with q a prime power is accepted as shorthand."""
    if k == 1:
        if not is_prime(p):
            for r in range(2, p):
                if p % r == 0:
                    k, q = 0, p
                    while q % r == 0:
                        q //= r
                        k += 1
                    if q != 1 or not is_prime(r):
                        raise FieldError(f"{p} is not a prime power")
                    return GF(r, k)
        return PrimeField(p)
    return ExtensionField(p, k)


def field_from_spec(spec: dict) -> Field:
    kind = spec.get("kind")
    if kind == "prime":
        return GF(int(spec["p"]))
    if kind == "extension":
        p, k = int(spec["p"]), int(spec["k"])
        modulus = tuple(spec.get("modulus") or MODULI[(p, k)])
        if modulus == MODULI.get((p, k)):
            return GF(p, k)
        return ExtensionField(p, k, modulus)
    if kind == "rationals":
        return QQ
    if kind == "quadratic":
        base = field_from_spec(spec["base"])
        return QuadraticExtension(base, base.decode(spec["c"]))
    raise FieldError(f"unknown field kind {kind!r}")


def parse_field(text: str) -> Field:
    """Parse ``GF(5)``, ``GF(4)``, ``GF(2^3)``, ``QQ``/``Q`` into a field."""
    t = text.strip().replace(" ", "")
    if t.upper() in ("Q", "QQ"):
        return QQ
    if t.upper().startswith("GF(") and t.endswith(")"):
        inner = t[3:-1]
        if "^" in inner:
            p, k = inner.split("^")
            return GF(int(p), int(k))
        q = int(inner)
        for p in range(2, q + 1):
            if q % p == 0:
                k, r = 0, q
                while r % p == 0:
                    r //= p
                    k += 1
                if r != 1:
                    break
                return GF(p, k)
        raise FieldError(f"{q} is not a prime power")
    raise FieldError(f"cannot parse field {text!r}")


def field_name(F: Field) -> str:
    if isinstance(F, PrimeField):
        return f"GF({F.p})"
    if isinstance(F, ExtensionField):
        return f"GF({F.order})"
    if isinstance(F, Rationals):
        return "QQ"
    return repr(F)


def verify_moduli() -> None:
    for (p, k), m in MODULI.items():
        if not is_irreducible_mod_p(m, p):
            raise FieldError(f"stored modulus for GF({p}^{k}) is reducible")


verify_moduli()
