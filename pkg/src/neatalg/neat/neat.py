"""The neatness decision procedure and the deterministic search helpers shared by
the constructions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ..exactalg import Matrix, Subspace
from ..involutions.algebra import ORTHOGONAL, AlgebraError, AlgebraWithInvolution, Subalgebra
from .etale import all_idempotents

EXHAUSTIVE_LIMIT = 2**20
DEFAULT_BUDGET = 10**6

NOT_ETALE = "not_etale"
NOT_IN_SYMM = "not_in_symm"
NOT_FREE = "not_free"
BAD_IDEMPOTENT = "bad_idempotent"


class NotFound(AlgebraError):
    """A search ran out of budget. This never claims that no object exists."""

    def __init__(self, what: str = "element"):
        super().__init__(f"not found (budget): {what}")


@dataclass
class NeatVerdict:
    neat: bool
    failed_condition: str | None = None
    witness: Matrix | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.neat


def is_neat(A: AlgebraWithInvolution, L: Subalgebra) -> NeatVerdict:
    """Check, in order: etale, inside Symm, the freeness dimension identity and,
    for orthogonal involutions in characteristic 2, that no nonzero idempotent of
    L is symmetrized."""
    if not L.commutative or not L.etale:
        return NeatVerdict(False, NOT_ETALE, detail={"commutative": L.commutative})
    for b in L.basis:
        if A.sigma(b) != b:
            return NeatVerdict(False, NOT_IN_SYMM, b)
    C = A.centralizer_space(L.basis)
    detail = {"deg_L": L.dim, "dim_C": C.dim, "dim_A": A.dim}
    if L.unit != A.unit or L.dim * C.dim != A.dim:
        return NeatVerdict(False, NOT_FREE, detail=detail)
    if A.field.characteristic == 2 and A.type == ORTHOGONAL:
        for e in all_idempotents(L):
            if not e.is_zero() and A.symd.contains(e.flat()):
                return NeatVerdict(False, BAD_IDEMPOTENT, e, detail)
    return NeatVerdict(True, detail=detail)


def field_elements_sorted(F):
    return sorted(F.elements(), key=F.key)


def space_size(F, dim: int):
    if not F.is_finite:
        return None
    return F.order**dim


def search_space(A: AlgebraWithInvolution, space: Subspace, seed: int = 0, budget: int = DEFAULT_BUDGET,
                 skip_zero: bool = True):
    """Yield elements of ``space``: every element in lexicographic order of the
    coordinate encodings when the space is small, else seeded random samples."""
    F = A.field
    size = space_size(F, space.dim)
    if size is not None and size <= EXHAUSTIVE_LIMIT:
        elems = field_elements_sorted(F)
        count = 0
        for cs in itertools.product(elems, repeat=space.dim):
            if skip_zero and all(F.is_zero(c) for c in cs):
                continue
            count += 1
            if count > budget:
                return
            yield Matrix.from_flat(F, space.combine(list(cs)), A.n)
        return
    rng = random.Random(seed)
    for _ in range(budget):
        cs = [F.random(rng) for _ in range(space.dim)]
        if skip_zero and all(F.is_zero(c) for c in cs):
            continue
        yield Matrix.from_flat(F, space.combine(cs), A.n)


def subalgebra_sum(A: AlgebraWithInvolution, parts, certificate=None) -> Subalgebra:
    """The subalgebra spanned by pieces living in orthogonal corners."""
    basis = [b for P in parts for b in P.basis]
    return Subalgebra(A, basis, A.unit, certificate)
