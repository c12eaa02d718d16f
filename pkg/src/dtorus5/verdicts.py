"""Shared result types for the verification routines."""

from __future__ import annotations

from typing import NamedTuple, Optional


class Verdict(NamedTuple):
    """Outcome of a finite check; ``witness`` describes the first failure."""

    ok: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok


class StructuralError(RuntimeError):
    """A verified-impossible state was reached, signalling a coding or data bug."""
