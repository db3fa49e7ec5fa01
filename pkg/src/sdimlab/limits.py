"""Vertex caps for the exponential-time exact solvers."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SizeLimitExceeded

ENV_VAR = "SDIMLAB_SIZE_LIMIT"


@dataclass(frozen=True)
class SizeLimits:
    isomorphism: int = 64
    hamiltonian: int = 30
    vertex_cover: int = 40
    matching: int = 5000

    @classmethod
    def from_env(cls) -> SizeLimits:
        """Defaults, with every cap replaced by ``$SDIMLAB_SIZE_LIMIT`` when set."""
        raw = os.environ.get(ENV_VAR)
        if not raw:
            return cls()
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
        return cls(cap, cap, cap, cap)


def check_size(what: str, size: int) -> None:
    cap = getattr(SizeLimits.from_env(), what)
    if size > cap:
        raise SizeLimitExceeded(f"{what} solver is capped at {cap} vertices, got {size}")
