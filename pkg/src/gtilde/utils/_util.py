from __future__ import annotations

from inspect import Parameter, signature
from typing import Callable, NamedTuple

_POSITIONAL = (Parameter.POSITIONAL_ONLY, Parameter.POSITIONAL_OR_KEYWORD)


class Arity(NamedTuple):
    """Positional arguments a callable requires and accepts (None: unbounded)."""

    required: int
    maximum: int | None


def positional_arity(func: Callable) -> Arity | None:
    """Return the positional arity of `func`, or None without a signature."""
    if not callable(func):
        raise TypeError(f"{func!r} is not callable")
    try:
        params = signature(func).parameters.values()
    except (TypeError, ValueError):
        return None
    positional = [p for p in params if p.kind in _POSITIONAL]
    required = sum(p.default is Parameter.empty for p in positional)
    if any(p.kind == Parameter.VAR_POSITIONAL for p in params):
        return Arity(required, None)
    return Arity(required, len(positional))


def accepts_one_positional(func: Callable) -> bool:
    """Whether `func` can be called as ``func(lam)``, e.g. a Schur evaluator."""
    arity = positional_arity(func)
    if arity is None:
        return True
    return arity.required <= 1 and (arity.maximum is None or arity.maximum >= 1)
