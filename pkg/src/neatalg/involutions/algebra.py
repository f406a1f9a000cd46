"""Concrete algebras with involution and their subalgebras.

Every model lives inside an ambient matrix algebra M_N(F) and every involution
has the ambient shape ``x -> g x^t g^-1``, restricted to the algebra. Corners,
centralizers and scalar extensions then need no special machinery.
"""

from __future__ import annotations

import math
from functools import cached_property

from ..exactalg import Field, Matrix, MatrixError, Poly, QuadraticExtension, Subspace, char_poly, nullspace


class AlgebraError(ValueError):
    pass


ORTHOGONAL, SYMPLECTIC, UNITARY = "orthogonal", "symplectic", "unitary"


def span_closure(F: Field, n: int, gens, unit: Matrix, limit: int | None = None) -> Subspace:
    """Smallest subspace containing ``unit`` and ``gens`` closed under products."""
    space = Subspace(F, [unit.flat()] + [g.flat() for g in gens], n * n)
    frontier = [Matrix.from_flat(F, b, n) for b in space.basis]
    gens = [Matrix.from_flat(F, b, n) for b in space.basis]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                for y in (x * g, g * x):
                    v = y.flat()
                    if not space.contains(v):
                        space = Subspace(F, space.basis + [v], n * n)
                        new.append(y)
                        if limit is not None and space.dim > limit:
                            raise AlgebraError("span closure exceeded dimension limit")
        frontier = new
        gens = gens + new
    return space


class AlgebraWithInvolution:
    """An F-algebra A inside M_N(F) with involution ``x -> g x^t g^-1``.

    ``model`` is a JSON-friendly dict. Its ``base`` entry says how to read an
    element as a matrix over E (F itself, or a quadratic extension K) for the
    reduced characteristic polynomial; corners keep the base and change ``unit``.
    """

    def __init__(self, field: Field, n: int, basis, g: Matrix, unit: Matrix | None = None,
                 model: dict | None = None, ginv: Matrix | None = None, validate: bool = True,
                 closure_samples: int = 24, seed: int = 0):
        self.field = field
        self.n = n
        self.space = Subspace(field, [b.flat() if isinstance(b, Matrix) else list(b) for b in basis], n * n)
        self.basis = [Matrix.from_flat(field, b, n) for b in self.space.basis]
        self.unit = unit if unit is not None else Matrix.identity(field, n)
        self.g = g
        try:
            self.ginv = ginv if ginv is not None else g.inverse()
        except MatrixError:
            raise AlgebraError("involution matrix is singular") from None
        self.model = model or {"tag": "custom", "base": {"kind": "matrix"}}
        if validate:
            self.validate(closure_samples, seed)

    # -- elements -------------------------------------------------------------
    @property
    def dim(self):
        return self.space.dim

    def sigma(self, x: Matrix) -> Matrix:
        return self.g * x.T * self.ginv

    def contains(self, x: Matrix) -> bool:
        return self.space.contains(x.flat())

    def coords(self, x: Matrix):
        if not self.contains(x):
            raise AlgebraError("element is not in the algebra")
        return self.space.coords(x.flat())

    def element(self, coords) -> Matrix:
        return Matrix.from_flat(self.field, self.space.combine(coords), self.n)

    def scalar(self, c) -> Matrix:
        return self.unit.scale(c)

    def random_element(self, rng) -> Matrix:
        return self.element([self.field.random(rng) for _ in range(self.dim)])

    def random_in(self, space: Subspace, rng) -> Matrix:
        return Matrix.from_flat(self.field, space.combine([self.field.random(rng) for _ in range(space.dim)]), self.n)

    def elements_of(self, space: Subspace):
        return [Matrix.from_flat(self.field, b, self.n) for b in space.basis]

    def subspace(self, mats) -> Subspace:
        return Subspace(self.field, [m.flat() for m in mats], self.n * self.n)

    # -- validation ------------------------------------------------------------
    def validate(self, closure_samples: int = 24, seed: int = 0):
        import random

        F, n = self.field, self.n
        if not self.contains(self.unit):
            raise AlgebraError("unit is not in the algebra")
        for b in self.basis:
            if self.unit * b != b or b * self.unit != b:
                raise AlgebraError("unit is not a two-sided identity")
        full_block = self.dim == n * n or self.model.get("tag") in ("switch",)
        if not full_block:
            if self.dim <= 24:
                pairs = [(x, y) for x in self.basis for y in self.basis]
            else:
                rng = random.Random(seed)
                pairs = [(self.random_element(rng), self.random_element(rng)) for _ in range(closure_samples)]
            for x, y in pairs:
                if not self.contains(x * y):
                    raise AlgebraError("basis span is not closed under multiplication")
        for b in self.basis:
            s = self.sigma(b)
            if not self.contains(s):
                raise AlgebraError("involution does not preserve the algebra")
            if self.sigma(s) != b:
                raise AlgebraError("involution is not of order two")
        # F = Z(A) cap Symm(sigma)
        zs = self.centre.intersect(self.symm)
        if zs.dim != 1 or not zs.contains(self.unit.flat()):
            raise AlgebraError("Z(A) cap Symm(sigma) is not F")

    # -- linear-algebra helpers ------------------------------------------------
    def kernel(self, fn, domain: Subspace | None = None) -> Subspace:
        """Kernel of an F-linear map A -> M_N(F) (or restricted to ``domain``)."""
        dom = self.space if domain is None else domain
        mats = self.elements_of(dom)
        if not mats:
            return Subspace(self.field, [], self.n * self.n)
        images = [fn(m) for m in mats]
        flat = [im.flat() if isinstance(im, Matrix) else list(im) for im in images]
        rows = [list(r) for r in zip(*flat)]
        sols = nullspace(self.field, rows, len(mats))
        return Subspace(self.field, [dom.combine(s) for s in sols], self.n * self.n)

    def image(self, fn, domain: Subspace | None = None) -> Subspace:
        dom = self.space if domain is None else domain
        return self.subspace([fn(m) for m in self.elements_of(dom)])

    def centralizer_space(self, elements, domain: Subspace | None = None) -> Subspace:
        """{x in domain : x y = y x for all y in elements}, computed incrementally."""
        space = self.space if domain is None else domain
        for y in elements:
            if space.dim == 0:
                break
            space = self.kernel(lambda x, y=y: x * y - y * x, space)
        return space

    # -- structure -------------------------------------------------------------
    @cached_property
    def centre(self) -> Subspace:
        return self.centralizer_space(self.basis)

    @cached_property
    def symm(self) -> Subspace:
        return self.kernel(lambda x: self.sigma(x) - x)

    @cached_property
    def skew(self) -> Subspace:
        return self.kernel(lambda x: self.sigma(x) + x)

    @cached_property
    def symd(self) -> Subspace:
        return self.image(lambda x: x + self.sigma(x))

    @cached_property
    def kind(self) -> str:
        z = self.centre.dim
        if z == 1:
            return "first"
        if z == 2:
            return "second"
        raise AlgebraError(f"centre has dimension {z}; not an algebra with involution")

    @cached_property
    def degree(self) -> int:
        d2 = self.dim // self.centre.dim
        d = math.isqrt(d2)
        if d * d != d2:
            raise AlgebraError("dimension over the centre is not a square")
        return d

    @cached_property
    def type(self) -> str:
        if self.kind == "second":
            return UNITARY
        if self.symd.dim < self.skew.dim and self.symd.contains(self.unit.flat()):
            return SYMPLECTIC
        return ORTHOGONAL

    @cached_property
    def syms(self) -> Subspace:
        return self.symd if self.type == SYMPLECTIC else self.symm

    @cached_property
    def capacity(self) -> int:
        return self.degree // 2 if self.type == SYMPLECTIC else self.degree

    @property
    def index(self) -> int:
        return 1

    @property
    def coindex(self) -> int:
        return self.degree

    def classify(self) -> dict:
        return {"kind": self.kind, "type": self.type}

    def symmetrized_spaces(self) -> dict:
        return {"symm": self.symm, "skew": self.skew, "symd": self.symd, "syms": self.syms,
                "capacity": self.capacity}

    def is_symmetric(self, x: Matrix) -> bool:
        return self.sigma(x) == x

    def in_syms(self, x: Matrix) -> bool:
        return self.syms.contains(x.flat())

    # -- reduced characteristic polynomial ---------------------------------------
    @cached_property
    def rep_field(self) -> Field:
        base = self.model.get("base", {})
        if base.get("kind") == "unitary":
            return QuadraticExtension(self.field, self.field.decode(base["c"]))
        return self.field

    def rep(self, x: Matrix) -> Matrix:
        """``x`` as a matrix over E acting on one simple component's module."""
        base = self.model.get("base", {"kind": "matrix"})
        kind = base.get("kind", "matrix")
        if kind == "matrix":
            return x
        if kind in ("block", "switch", "phi"):
            d = int(base["d"])
            return x.submatrix(range(d), range(d))
        if kind == "unitary":
            K = self.rep_field
            d = self.n // 2
            return Matrix(K, [[(x[2 * i, 2 * j], x[2 * i + 1, 2 * j]) for j in range(d)] for i in range(d)])
        raise AlgebraError(f"unknown base model {kind!r}")

    def from_rep_unit_image(self):
        """Basis (over E) of the column space of rep(unit)."""
        from ..exactalg import rref

        u = self.rep(self.unit)
        E = u.field
        red, _ = rref(E, [list(c) for c in zip(*u.rows)])
        return red

    @cached_property
    def _restriction(self):
        from ..exactalg import rref

        basis = self.from_rep_unit_image()
        E = self.rep_field
        r = len(basis)
        # solve coordinates against the echelon basis via its pivot columns
        _, pivots = rref(E, basis)
        return basis, pivots, r

    def reduced_char_poly(self, a: Matrix) -> Poly:
        if not self.contains(a):
            raise AlgebraError("element is not in the algebra")
        ra = self.rep(a)
        if self.unit == Matrix.identity(self.field, self.n):
            return char_poly(ra)
        basis, pivots, r = self._restriction
        E = ra.field
        cols = []
        for v in basis:
            w = ra.apply(v)
            cols.append([w[p] for p in pivots])
        return char_poly(Matrix(E, [list(r_) for r_ in zip(*cols)]))

    def __repr__(self):
        return f"<AlgebraWithInvolution {self.model.get('tag')} over {self.field!r} dim={self.dim}>"


class Subalgebra:
    """A unital F-subalgebra of an algebra with involution; flags are recomputed."""

    def __init__(self, parent: AlgebraWithInvolution, basis, unit: Matrix | None = None, certificate=None):
        self.parent = parent
        F, n = parent.field, parent.n
        self.space = Subspace(F, [b.flat() if isinstance(b, Matrix) else list(b) for b in basis], n * n)
        self.basis = [Matrix.from_flat(F, b, n) for b in self.space.basis]
        self.unit = parent.unit if unit is None else unit
        self.certificate = certificate
        if not self.space.contains(self.unit.flat()):
            raise AlgebraError("subalgebra does not contain its unit")
        for b in self.basis:
            if not parent.contains(b):
                raise AlgebraError("subalgebra basis element outside the parent")
        for x in self.basis:
            for y in self.basis:
                if not self.space.contains((x * y).flat()):
                    raise AlgebraError("subalgebra basis span is not closed under multiplication")

    @classmethod
    def generated(cls, A: AlgebraWithInvolution, gens, unit: Matrix | None = None, certificate=None):
        unit = A.unit if unit is None else unit
        space = span_closure(A.field, A.n, list(gens), unit)
        return cls(A, [Matrix.from_flat(A.field, b, A.n) for b in space.basis], unit, certificate)

    @property
    def field(self):
        return self.parent.field

    @property
    def dim(self):
        return self.space.dim

    def contains(self, x: Matrix):
        return self.space.contains(x.flat())

    def element(self, coords):
        return Matrix.from_flat(self.field, self.space.combine(coords), self.parent.n)

    def coords(self, x):
        return self.space.coords(x.flat())

    @cached_property
    def commutative(self) -> bool:
        return all(x * y == y * x for i, x in enumerate(self.basis) for y in self.basis[i + 1:])

    @cached_property
    def in_symm(self) -> bool:
        return all(self.parent.sigma(b) == b for b in self.basis)

    def mult_matrix(self, x: Matrix) -> Matrix:
        """Matrix of y -> x y in the subalgebra basis."""
        F = self.field
        cols = [self.coords(x * b) for b in self.basis]
        return Matrix(F, [list(r) for r in zip(*cols)])

    def trace(self, x: Matrix):
        return self.mult_matrix(x).trace()

    @cached_property
    def etale(self) -> bool:
        if not self.commutative:
            return False
        from ..neat.etale import trace_form_nondegenerate

        return trace_form_nondegenerate(self)

    def flags(self) -> dict:
        return {"commutative": self.commutative, "etale": self.etale, "in_symm": self.in_symm}

    def __repr__(self):
        return f"<Subalgebra dim={self.dim} of {self.parent!r}>"
