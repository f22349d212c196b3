"""JSON codecs, canonical digests, and catalog files.

All interchange is UTF-8 JSON with sorted keys; the digest of a brace is the
SHA-256 of its canonical JSON, so identical tables always hash identically.
Tensor and matrix coefficients are serialized as exact "p/q" strings.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .algebra import AlgebraContext, TensorElement
from .braces import SkewBrace, YBMap, validate_brace
from .errors import ValidationFailure
from .groups import GroupTable, validate_group
from .matrices import ExactMatrix, ZOMatrix


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def encode_group(g: GroupTable) -> dict:
    return {"n": g.n, "table": [list(row) for row in g.table]}


def decode_group(obj) -> GroupTable:
    if not isinstance(obj, dict) or "table" not in obj:
        raise ValidationFailure("parse", None, "expected an object with a 'table' field")
    g = validate_group(obj["table"])
    if "n" in obj and int(obj["n"]) != g.n:
        raise ValidationFailure("parse", obj.get("n"), "declared order does not match table size")
    return g


def encode_brace(b: SkewBrace) -> dict:
    return {
        "n": b.n,
        "add": [list(row) for row in b.add.table],
        "mul": [list(row) for row in b.mul.table],
    }


def decode_brace(obj) -> SkewBrace:
    if not isinstance(obj, dict) or "add" not in obj or "mul" not in obj:
        raise ValidationFailure("parse", None, "expected an object with 'add' and 'mul' tables")
    add = validate_group(obj["add"])
    mul = validate_group(obj["mul"])
    b = validate_brace(add, mul)
    if "n" in obj and int(obj["n"]) != b.n:
        raise ValidationFailure("parse", obj.get("n"), "declared order does not match table size")
    return b


def brace_digest(b: SkewBrace) -> str:
    return hashlib.sha256(canonical_json(encode_brace(b)).encode("utf-8")).hexdigest()


def encode_ybmap(m: YBMap) -> dict:
    return {
        "n": m.n,
        "sigma": [list(row) for row in m.sigma],
        "tau": [list(row) for row in m.tau],
    }


def decode_ybmap(obj) -> YBMap:
    """Rebuild a map from its sigma table; a supplied tau is cross-checked, never trusted."""
    from .braces import ybmap_from_sigma

    if not isinstance(obj, dict) or "sigma" not in obj:
        raise ValidationFailure("parse", None, "expected an object with a 'sigma' table")
    m = ybmap_from_sigma(obj["sigma"])
    if "tau" in obj:
        supplied = tuple(tuple(int(v) for v in row) for row in obj["tau"])
        if supplied != m.tau:
            raise ValidationFailure("tau_mismatch", None, "supplied tau disagrees with the derived one")
    return m


def _coeff_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


def encode_tensor(t: TensorElement) -> dict:
    n = t.ctx.n
    terms = []
    for key in sorted(t.coeffs):
        terms.append({
            "basis": [list(divmod(i, n)) for i in key],
            "coeff": _coeff_str(t.coeffs[key]),
        })
    return {"n": n, "order": t.k, "terms": terms}


def decode_tensor(ctx: AlgebraContext, obj) -> TensorElement:
    n = ctx.n
    coeffs = {}
    for term in obj["terms"]:
        key = tuple(a * n + g for a, g in term["basis"])
        coeffs[key] = Fraction(term["coeff"])
    return ctx.tensor(int(obj["order"]), coeffs)


def encode_zomatrix(m: ZOMatrix) -> dict:
    return {"dim": m.dim, "entries": [list(pos) for pos in sorted(m.entries)]}


def decode_zomatrix(obj) -> ZOMatrix:
    return ZOMatrix(int(obj["dim"]), frozenset((int(r), int(c)) for r, c in obj["entries"]))


def encode_exact_matrix(m: ExactMatrix) -> dict:
    rows = [[_coeff_str(m.entries.get((r, c), 0)) for c in range(m.dim)] for r in range(m.dim)]
    return {"dim": m.dim, "rows": rows}


def encode_catalog(order: int, skew: bool, braces: list[SkewBrace]) -> dict:
    return {
        "version": 1,
        "order": order,
        "skew": skew,
        "count": len(braces),
        "braces": [encode_brace(b) for b in braces],
    }


def decode_catalog(obj) -> list[SkewBrace]:
    if not isinstance(obj, dict) or "braces" not in obj:
        raise ValidationFailure("parse", None, "expected a catalog with a 'braces' list")
    braces = [decode_brace(rec) for rec in obj["braces"]]
    if "count" in obj and int(obj["count"]) != len(braces):
        raise ValidationFailure("parse", obj.get("count"), "catalog count disagrees with record list")
    return braces


def load_subjects(obj) -> list[SkewBrace]:
    """Accept either a single brace object or a catalog file."""
    if isinstance(obj, dict) and "braces" in obj:
        return decode_catalog(obj)
    return [decode_brace(obj)]
