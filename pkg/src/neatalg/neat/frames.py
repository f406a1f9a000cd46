"""Orthogonal decompositions of the underlying form of a split model.

Every supported model is the adjoint involution of a bilinear form on a module
V (over F, or over K for unitary models). Splitting V into capacity-many
orthogonal pieces of minimal size gives pairwise orthogonal symmetric idempotents
e_1, ..., e_k summing to the unit; their span is a split neat subalgebra.
"""

from __future__ import annotations

import itertools
import random

from ..exactalg import Matrix, nullspace, rref
from ..involutions.algebra import SYMPLECTIC, AlgebraError, AlgebraWithInvolution, Subalgebra
from ..involutions.models import theta_block
from .neat import NeatVerdict, is_neat

FRAME_SEARCH = 20000


class FrameError(AlgebraError):
    pass


def _column_space(F, M: Matrix):
    return rref(F, [list(c) for c in zip(*M.rows)])[0]


def _bil(F, G: Matrix, v, w):
    return F.dot(v, G.apply(w))


def _candidates(F, W, rng):
    """Basis vectors, pairwise sums, then seeded random combinations of W."""
    for v in W:
        yield v
    for v, w in itertools.combinations(W, 2):
        yield [F.add(a, b) for a, b in zip(v, w)]
    for _ in range(FRAME_SEARCH):
        cs = [F.random(rng) for _ in W]
        v = [F.sum(F.mul(c, w[i]) for c, w in zip(cs, W)) for i in range(len(W[0]))]
        if any(not F.is_zero(x) for x in v):
            yield v


def _orth_complement(F, G, W, vecs):
    """Basis of {w in span(W) : b(v, w) = 0 for v in vecs}."""
    rows = [[_bil(F, G, v, w) for w in W] for v in vecs]
    sols = nullspace(F, rows, len(W))
    return [[F.sum(F.mul(s[i], W[i][j]) for i in range(len(W))) for j in range(len(W[0]))] for s in sols]


def _non_alternating(F, G, W):
    return any(not F.is_zero(_bil(F, G, w, w)) for w in W)


def _projection(F, G, U):
    """Orthogonal projection onto span(U) along its b-orthogonal complement."""
    Um = Matrix(F, [list(r) for r in zip(*U)])
    gram = Um.T * G * Um
    return Um * gram.inverse() * Um.T * G


def form_pieces(F, G: Matrix, V, kind: str, T: Matrix | None = None, seed: int = 0):
    """Split span(V) into b-orthogonal nondegenerate pieces.

    kind: "symmetric" (1-dimensional anisotropic lines; in characteristic 2 the
    complement is kept non-alternating), "alternating" (hyperbolic planes) or
    "hermitian" (K-lines span(v, Tv)).
    """
    rng = random.Random(seed)
    W = [list(v) for v in V]
    pieces = []
    while W:
        chosen = None
        if kind == "alternating":
            v = W[0]
            w = next((w for w in W if not F.is_zero(_bil(F, G, v, w))), None)
            if w is None:
                raise FrameError("degenerate alternating form")
            chosen = [v, w]
        else:
            for v in _candidates(F, W, rng):
                U = [v, T.apply(v)] if kind == "hermitian" else [v]
                gram = [[_bil(F, G, x, y) for y in U] for x in U]
                if len(rref(F, gram)[1]) < len(U):
                    continue
                if kind == "symmetric" and F.characteristic == 2 and len(W) > 1:
                    rest = _orth_complement(F, G, W, U)
                    if not _non_alternating(F, G, rest):
                        continue
                chosen = U
                break
        if chosen is None:
            raise FrameError("no anisotropic piece found")
        pieces.append(chosen)
        W = _orth_complement(F, G, W, chosen)
    return pieces


def frame(A: AlgebraWithInvolution, seed: int = 0):
    """Pairwise orthogonal symmetric idempotents e_1..e_k summing to the unit,
    k = capacity, each with a capacity-1 corner."""
    F = A.field
    base = A.model.get("base", {"kind": "matrix"})
    kind = base.get("kind", "matrix")
    if kind in ("matrix", "unitary"):
        V = _column_space(F, A.unit)
        G = A.ginv
        if kind == "unitary":
            c = F.decode(base["c"])
            T = Matrix.block_diag(F, *[theta_block(F, c)] * (A.n // 2))
            pieces = form_pieces(F, G, V, "hermitian", T, seed)
        else:
            form = "alternating" if A.type == SYMPLECTIC else "symmetric"
            pieces = form_pieces(F, G, V, form, None, seed)
        idems = [_projection(F, G, U) for U in pieces]
    elif kind == "phi":
        d = int(base["d"])
        u0 = A.unit.submatrix(range(d), range(d))
        V = _column_space(F, u0)
        G = Matrix.identity(F, d)
        idems = [Matrix.block_diag(F, P, P) for P in (_projection(F, G, U) for U in form_pieces(F, G, V, "symmetric", None, seed))]
    elif kind == "switch":
        d = int(base["d"])
        u0 = A.unit.submatrix(range(d), range(d))
        idems = [Matrix.block_diag(F, P, P.T) for P in _dual_basis_split(F, u0)]
    else:
        raise FrameError(f"no frame construction for base model {kind!r}")
    return idems


def _dual_basis_split(F, e0: Matrix):
    """Rank-one idempotents v_i (x) phi_i summing to the idempotent e0."""
    V = _column_space(F, e0)
    _, piv = rref(F, V)
    Vm = Matrix(F, [list(r) for r in zip(*V)])  # d x r
    # e0 = Vm * Phi, solved on the pivot rows of Vm
    sub = Vm.submatrix(piv, range(len(V)))
    Phi = sub.inverse() * e0.submatrix(piv, range(e0.ncols))
    out = []
    for i, v in enumerate(V):
        col = Matrix(F, [[x] for x in v])
        out.append(col * Matrix(F, [Phi.rows[i]]))
    return out


def split_neat(A: AlgebraWithInvolution, r: int, seed: int = 0) -> Subalgebra:
    """A split neat subalgebra isomorphic to F^r built from an orthogonal frame."""
    kap = A.capacity
    if r < 1 or kap % r or A.coindex % r:
        raise FrameError(f"no split neat subalgebra of degree {r}")
    idems = frame(A, seed)
    if len(idems) != kap:
        raise FrameError("frame has the wrong length")
    F = A.field
    size = kap // r
    groups = []
    for g in range(r):
        acc = Matrix.zeros(F, A.n)
        for e in idems[g * size:(g + 1) * size]:
            acc = acc + e
        groups.append(acc)
    L = Subalgebra(A, groups, A.unit, certificate={"kind": "split", "generators": [groups],
                                                   "transcript": [f"frame of {kap} idempotents grouped by {size}"]})
    verdict: NeatVerdict = is_neat(A, L)
    if not verdict.neat:
        raise FrameError(f"frame construction is not neat: {verdict.failed_condition}")
    return L
