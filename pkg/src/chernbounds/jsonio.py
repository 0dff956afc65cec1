"""Exact, deterministic JSON encoding.

Integers beyond 2^53 become ``{"format": "bigint", "value": "<decimal>"}``;
rationals are ``{"num": "<int>", "den": "<int>"}``. Output uses sorted keys
so equal payloads serialize to identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

SAFE_INT = 2**53


def encode_int(x: int):
    if -SAFE_INT <= x <= SAFE_INT:
        return x
    return {"format": "bigint", "value": str(x)}


def decode_int(v) -> int:
    if isinstance(v, bool):
        raise ValueError("booleans are not integers")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v)
    if isinstance(v, dict) and v.get("format") == "bigint":
        return int(v["value"])
    raise ValueError(f"cannot decode integer from {v!r}")


def encode_rational(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def decode_rational(v) -> Fraction:
    if isinstance(v, dict) and "num" in v:
        return Fraction(int(v["num"]), int(v["den"]))
    return Fraction(decode_int(v))


def to_jsonable(obj: Any):
    """Recursively encode ints, Fractions, Polynomials and containers."""
    from .exact_arith import Polynomial

    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, Fraction):
        return encode_rational(obj)
    if isinstance(obj, Polynomial):
        return {"polynomial": [encode_rational(c) for c in obj.coeffs], "text": str(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def canonicalize(text: str) -> str:
    """Re-serialize a JSON document in canonical form."""
    return json.dumps(json.loads(text), sort_keys=True, indent=2, ensure_ascii=True) + "\n"
