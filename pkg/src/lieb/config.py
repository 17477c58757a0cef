"""Computation limits."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_trace_arity: int = 4
    max_tensor_entries: int = 10_000


DEFAULT_LIMITS = Limits()
