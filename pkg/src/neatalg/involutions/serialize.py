"""Canonical JSON for algebras, subalgebras and certificates, plus scalar
extension of finite-field models."""

from __future__ import annotations

import json

from ..exactalg import GF, Field, Matrix, field_from_spec
from ..exactalg.fields import ExtensionField
from .algebra import AlgebraError, AlgebraWithInvolution, Subalgebra
from .models import decode_matrix, encode_matrix

ALGEBRA_SCHEMA = "neatalg.algebra/1"
SUBALGEBRA_SCHEMA = "neatalg.subalgebra/1"


def canonical(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def algebra_to_doc(A: AlgebraWithInvolution) -> dict:
    F = A.field
    return {
        "schema": ALGEBRA_SCHEMA,
        "field": F.spec(),
        "n": A.n,
        "basis": [encode_matrix(F, b) for b in A.basis],
        "unit": encode_matrix(F, A.unit),
        "g": encode_matrix(F, A.g),
        "ginv": encode_matrix(F, A.ginv),
        "involution_images": [encode_matrix(F, A.sigma(b)) for b in A.basis],
        "model": A.model,
    }


def algebra_from_doc(doc: dict, validate: bool = True) -> AlgebraWithInvolution:
    if doc.get("schema") != ALGEBRA_SCHEMA:
        raise AlgebraError("unknown algebra schema")
    F = field_from_spec(doc["field"])
    A = AlgebraWithInvolution(F, int(doc["n"]), [decode_matrix(F, b) for b in doc["basis"]],
                              decode_matrix(F, doc["g"]), unit=decode_matrix(F, doc["unit"]),
                              model=doc["model"], ginv=decode_matrix(F, doc["ginv"]), validate=validate)
    images = [decode_matrix(F, m) for m in doc.get("involution_images", [])]
    if images and images != [A.sigma(b) for b in A.basis]:
        raise AlgebraError("stored involution images disagree with g")
    return A


def _encode_nested(F, obj):
    if isinstance(obj, Matrix):
        return {"matrix": encode_matrix(F, obj)}
    if isinstance(obj, dict):
        return {k: _encode_nested(F, v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode_nested(F, v) for v in obj]
    return obj


def _decode_nested(F, obj):
    if isinstance(obj, dict):
        if set(obj) == {"matrix"}:
            return decode_matrix(F, obj["matrix"])
        return {k: _decode_nested(F, v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode_nested(F, v) for v in obj]
    return obj


def subalgebra_to_doc(L: Subalgebra) -> dict:
    F = L.field
    doc = {
        "schema": SUBALGEBRA_SCHEMA,
        "parent": algebra_to_doc(L.parent),
        "basis": [encode_matrix(F, b) for b in L.basis],
        "unit": encode_matrix(F, L.unit),
        "flags": L.flags(),
    }
    if L.certificate is not None:
        doc["certificate"] = _encode_nested(F, L.certificate)
    return doc


def subalgebra_from_doc(doc: dict, parent: AlgebraWithInvolution | None = None) -> Subalgebra:
    if doc.get("schema") != SUBALGEBRA_SCHEMA:
        raise AlgebraError("unknown subalgebra schema")
    A = parent if parent is not None else algebra_from_doc(doc["parent"])
    F = A.field
    cert = _decode_nested(F, doc["certificate"]) if "certificate" in doc else None
    # flags in the document are informational; they are recomputed here
    return Subalgebra(A, [decode_matrix(F, b) for b in doc["basis"]], decode_matrix(F, doc["unit"]), cert)


def dumps(obj) -> str:
    if isinstance(obj, AlgebraWithInvolution):
        return canonical(algebra_to_doc(obj))
    if isinstance(obj, Subalgebra):
        return canonical(subalgebra_to_doc(obj))
    raise TypeError("can only serialize algebras and subalgebras")


def loads(text: str):
    doc = json.loads(text)
    if doc.get("schema") == ALGEBRA_SCHEMA:
        return algebra_from_doc(doc)
    if doc.get("schema") == SUBALGEBRA_SCHEMA:
        return subalgebra_from_doc(doc)
    raise AlgebraError("unknown schema")


# -- scalar extension -----------------------------------------------------------

def field_embedding(F: Field, m: int):
    """(E, embed) with E = GF(q^m) and embed: F -> E a field homomorphism."""
    if not F.is_finite:
        raise AlgebraError("unsupported extension: base field is not finite")
    if m < 1:
        raise AlgebraError("extension degree must be positive")
    p = F.characteristic
    k = 1 if not isinstance(F, ExtensionField) else F.k
    E = GF(p, k * m)
    if m == 1:
        return F, (lambda x: x)
    if k == 1:
        return E, (lambda x: E.from_int(x))
    # a root of F's modulus in E
    mod = F.modulus
    root = None
    for r in sorted(E.elements(), key=E.key):
        acc = E.zero
        for coef in reversed(mod):
            acc = E.add(E.mul(acc, r), E.from_int(coef))
        if E.is_zero(acc):
            root = r
            break
    if root is None:
        raise AlgebraError("modulus has no root in the extension")

    def embed(x):
        acc = E.zero
        for d in reversed(F._digits(x)):
            acc = E.add(E.mul(acc, root), E.from_int(d))
        return acc

    return E, embed


def _map_model(F, E, embed, model):
    out = dict(model)
    base = dict(model.get("base", {}))
    if "c" in base:
        base["c"] = E.encode(embed(F.decode(base["c"])))
    out["base"] = base
    if "hermitian" in out:
        out["hermitian"] = [E.encode(embed(F.decode(x))) for x in out["hermitian"]]
    for key in ("m", "e"):
        if key in out:
            out[key] = [[E.encode(embed(F.decode(x))) for x in r] for r in out[key]]
    out["extended_from"] = F.spec()
    return out


def extend_scalars(A: AlgebraWithInvolution, m: int):
    """The same model read over GF(q^m). Returns (A_E, map_element, map_subalgebra)."""
    F = A.field
    E, embed = field_embedding(F, m)

    def lift(x: Matrix) -> Matrix:
        return x.map(E, embed)

    AE = AlgebraWithInvolution(E, A.n, [lift(b) for b in A.basis], lift(A.g), unit=lift(A.unit),
                               model=_map_model(F, E, embed, A.model), ginv=lift(A.ginv))

    def lift_sub(L: Subalgebra) -> Subalgebra:
        return Subalgebra(AE, [lift(b) for b in L.basis], lift(L.unit))

    return AE, lift, lift_sub
