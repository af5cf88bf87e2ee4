"""Size caps.

Defaults can be replaced globally with the ``MULTIPLETKIT_CAP`` environment
variable (one integer applied to every cap) or locally with :func:`override`.
"""

from __future__ import annotations

import contextlib
import os
from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .errors import CapExceeded


@dataclass(frozen=True)
class Caps:
    weyl_group: int = 10**6
    multiplicities: int = 10**5
    irrep_dim: int = 10**3
    fock_states: int = 2 * 10**4

    @classmethod
    def uniform(cls, n: int) -> "Caps":
        return cls(n, n, n, n)


def _from_env() -> Caps:
    raw = os.environ.get("MULTIPLETKIT_CAP")
    if raw:
        return Caps.uniform(int(raw))
    return Caps()


_current: Caps = _from_env()


def caps() -> Caps:
    return _current


def set_caps(c: Caps) -> None:
    global _current
    _current = c


@contextlib.contextmanager
def override(n: Optional[int] = None, **fields) -> Iterator[Caps]:
    """Temporarily replace caps; ``n`` sets all of them at once."""
    global _current
    saved = _current
    new = Caps.uniform(n) if n is not None else saved
    if fields:
        new = replace(new, **fields)
    _current = new
    try:
        yield new
    finally:
        _current = saved


def check(what: str, size: int, field: str) -> None:
    limit = getattr(_current, field)
    if size > limit:
        raise CapExceeded(what, size, limit)
