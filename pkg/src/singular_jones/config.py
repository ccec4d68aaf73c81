"""Size bounds for the expensive constructions.

Defaults can be overridden per process through environment variables
(``SINGULAR_JONES_MAX_COLOR``, ``SINGULAR_JONES_MAX_WIDTH``,
``SINGULAR_JONES_MAX_PROJECTOR``, ``SINGULAR_JONES_MAX_BASIS``) or
temporarily with :func:`bounds`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

__all__ = ["Bounds", "get_bounds", "set_bounds", "bounds"]


@dataclass(frozen=True)
class Bounds:
    max_cable_color: int = 4
    max_total_width: int = 12
    max_projector: int = 8
    max_basis_width: int = 8


def _from_env() -> Bounds:
    b = Bounds()
    env = {
        "max_cable_color": "SINGULAR_JONES_MAX_COLOR",
        "max_total_width": "SINGULAR_JONES_MAX_WIDTH",
        "max_projector": "SINGULAR_JONES_MAX_PROJECTOR",
        "max_basis_width": "SINGULAR_JONES_MAX_BASIS",
    }
    overrides = {}
    for field, var in env.items():
        raw = os.environ.get(var)
        if raw is not None:
            try:
                overrides[field] = int(raw)
            except ValueError:
                raise ValueError(f"{var} must be an integer, got {raw!r}") from None
    return replace(b, **overrides)


_current: Bounds | None = None  # read from the environment on first use


def get_bounds() -> Bounds:
    global _current
    if _current is None:
        _current = _from_env()
    return _current


def set_bounds(**changes) -> Bounds:
    global _current
    _current = replace(get_bounds(), **changes)
    return _current


@contextmanager
def bounds(**changes):
    global _current
    saved = get_bounds()
    _current = replace(saved, **changes)
    try:
        yield _current
    finally:
        _current = saved
