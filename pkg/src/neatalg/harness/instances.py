"""Deterministic algebra instances for grid points (field, type, degree)."""

from __future__ import annotations

import random

from ..exactalg import Matrix, MatrixError, parse_field
from ..involutions import (switch_algebra, symplectic_algebra, symplectic_gram, transpose_algebra, twisted_algebra,
                           unitary_algebra)
from ..involutions.models import is_alternating
from .config import ConfigError, check_point

MAX_TRIES = 10000


def instance_rng(seed: int, tag: str = "") -> random.Random:
    """A PRNG stream fixed by a seed and a tag (string seeding is stable across runs)."""
    return random.Random(f"{seed}:{tag}")


def instance_seed(seed: int, index: int) -> int:
    return instance_rng(seed, f"instance-{index}").getrandbits(63)


def _small(F, rng):
    if F.is_finite:
        return F.random(rng)
    return F.from_int(rng.randint(-3, 3))


def _random_invertible(F, d, rng):
    for _ in range(MAX_TRIES):
        P = Matrix(F, [[_small(F, rng) for _ in range(d)] for _ in range(d)])
        if not F.is_zero(P.det()):
            return P
    raise ConfigError("no invertible matrix sampled")


def random_orthogonal_gram(F, d, rng):
    """Invertible symmetric m, non-alternating in characteristic 2."""
    for _ in range(MAX_TRIES):
        rows = [[F.zero] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                rows[i][j] = rows[j][i] = _small(F, rng)
        m = Matrix(F, rows)
        if F.is_zero(m.det()):
            continue
        if F.characteristic == 2 and is_alternating(m):
            continue
        return m
    raise ConfigError("no orthogonal Gram matrix sampled")


def generate_instance(point, seed: int):
    """The algebra for ``point = (field, type, degree)``; seed 0 gives the canonical model."""
    fname, typ, d = point
    check_point(typ, d)
    try:
        F = parse_field(fname) if isinstance(fname, str) else fname
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    rng = instance_rng(seed, f"{fname}/{typ}/{d}")
    if typ == "unitary-inner":
        return switch_algebra(F, d)
    if typ == "orthogonal":
        if seed == 0:
            return transpose_algebra(F, d)
        return twisted_algebra(F, random_orthogonal_gram(F, d, rng))
    if typ == "symplectic":
        if seed == 0:
            return symplectic_algebra(F, d)
        P = _random_invertible(F, d, rng)
        return twisted_algebra(F, P * symplectic_gram(F, d) * P.T, alternating=True)
    if typ == "unitary":
        h = []
        while len(h) < d:
            x = _small(F, rng) if seed else F.one
            if not F.is_zero(x):
                h.append(x)
        return unitary_algebra(F, d, hermitian=h)
    raise ConfigError(f"unknown type {typ!r}")
