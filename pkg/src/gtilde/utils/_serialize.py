"""Canonical JSON encoding.

Complex numbers are always two-element ``[re, im]`` arrays.  Floats are written
with Python's shortest round-trip ``repr`` (at most 17 significant digits) and
objects with sorted keys, so re-serializing a loaded artifact reproduces the
same bytes.
"""

from __future__ import annotations

import dataclasses
import json
import math
from typing import Any

import numpy as np

from gtilde._errors import ParseError

__all__ = [
    "canonical_dumps",
    "decode_complex",
    "decode_complex_list",
    "encode_complex",
    "require",
    "to_jsonable",
]


def encode_complex(z: complex) -> list[float]:
    """``z -> [re, im]`` with plain Python floats."""
    z = complex(z)
    return [_clean_float(z.real), _clean_float(z.imag)]


def _clean_float(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"Cannot encode non-finite value {x!r}")
    # normalise negative zero so that equal values serialize identically
    return x + 0.0


def decode_complex(value: Any, path: str = "$") -> complex:
    """Parse ``[re, im]`` (or a bare real number) into a complex."""
    if isinstance(value, bool):
        raise ParseError(f"Expected [re, im] at {path}, got {value!r}", path=path)
    if isinstance(value, (int, float)):
        return complex(float(value), 0.0)
    if (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        return complex(float(value[0]), float(value[1]))
    raise ParseError(f"Expected [re, im] at {path}, got {value!r}", path=path)


def decode_complex_list(value: Any, path: str = "$") -> list[complex]:
    """Parse a list of ``[re, im]`` pairs."""
    if not isinstance(value, list):
        raise ParseError(f"Expected a list at {path}, got {value!r}", path=path)
    return [decode_complex(v, f"{path}[{i}]") for i, v in enumerate(value)]


def require(obj: Any, key: str, path: str = "$") -> Any:
    """Return ``obj[key]``, raising ParseError when absent."""
    if not isinstance(obj, dict):
        raise ParseError(f"Expected an object at {path}", path=path)
    if key not in obj:
        raise ParseError(f"Missing key {key!r} at {path}", path=f"{path}.{key}")
    return obj[key]


def to_jsonable(obj: Any) -> Any:
    """Convert library values into JSON-compatible Python structures.

    Objects exposing a ``to_json()`` method are asked to encode themselves;
    remaining dataclasses are encoded field by field.
    """
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _clean_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return encode_complex(complex(obj))
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
            if f.repr
        }
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON encodable")


def canonical_dumps(obj: Any, indent: int | None = 2) -> str:
    """Serialize `obj` canonically: sorted keys, round-trip floats, no NaN."""
    return json.dumps(
        to_jsonable(obj), sort_keys=True, indent=indent, allow_nan=False
    )
