"""Canonical JSON encodings shared by the library and the command line."""

from __future__ import annotations

import json

from .exact_algebra import Polynomial, format_scalar, parse_scalar
from .partitions import Partition

__all__ = [
    "encode_scalar",
    "decode_scalar",
    "encode_polynomial",
    "decode_polynomial",
    "encode_partition",
    "encode_tensor_vector",
    "dumps",
]

encode_scalar = format_scalar
decode_scalar = parse_scalar


def encode_polynomial(p: Polynomial) -> dict:
    return {"coeffs": [encode_scalar(c) for c in p.coeffs]}


def decode_polynomial(obj) -> Polynomial:
    if isinstance(obj, dict):
        obj = obj["coeffs"]
    if not isinstance(obj, list):
        raise TypeError(f"polynomial encoding must be a list or {{'coeffs': [...]}}, got {obj!r}")
    return Polynomial([decode_scalar(c) for c in obj])


def encode_partition(w: Partition) -> list[int]:
    return list(w.entries)


def _label(label) -> str:
    weight, n = label
    return ",".join(map(str, weight)) + f"#{n}"


def encode_tensor_vector(v: dict, m1, m2) -> list[dict]:
    """Sparse list of ``{"left", "right", "coeff"}`` sorted by basis index."""
    return [
        {
            "left": _label(m1.basis_labels[i]),
            "right": _label(m2.basis_labels[j]),
            "coeff": encode_scalar(x),
        }
        for (i, j), x in sorted(v.items())
    ]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
