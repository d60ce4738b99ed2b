"""Cohomology table values.

An entry is one of: Zero, Dim(d) with d >= 1, Nonzero with unknown
dimension, or absent (Unknown).  Tables are plain dicts keyed by
(cohomological degree, twist); missing keys mean Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass

ZERO = "Zero"
DIM = "Dim"
NONZERO = "Nonzero"


@dataclass(frozen=True)
class Val:
    kind: str
    dim: int | None = None

    @staticmethod
    def zero() -> "Val":
        return Val(ZERO)

    @staticmethod
    def of_dim(d: int) -> "Val":
        if d < 0:
            raise ValueError("negative dimension")
        return Val(ZERO) if d == 0 else Val(DIM, d)

    @staticmethod
    def nonzero() -> "Val":
        return Val(NONZERO)

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO

    @property
    def is_nonzero(self) -> bool:
        return self.kind in (DIM, NONZERO)

    @property
    def exact_dim(self) -> int | None:
        """Dimension when exactly known (zero counts as 0)."""
        if self.kind == ZERO:
            return 0
        if self.kind == DIM:
            return self.dim
        return None

    def conflicts(self, other: "Val") -> bool:
        if self.kind == ZERO:
            return other.is_nonzero
        if other.kind == ZERO:
            return self.is_nonzero
        if self.kind == DIM and other.kind == DIM:
            return self.dim != other.dim
        return False

    def refines(self, other: "Val") -> bool:
        """True if self carries strictly more information than other."""
        return self.kind == DIM and other.kind == NONZERO

    def render(self) -> str:
        if self.kind == DIM:
            return f"Dim:{self.dim}"
        return self.kind

    @staticmethod
    def parse(s: str) -> "Val":
        if s == ZERO:
            return Val.zero()
        if s == NONZERO:
            return Val.nonzero()
        if s.startswith("Dim:"):
            return Val.of_dim(int(s[4:]))
        raise ValueError(f"bad value literal: {s!r}")

    def __str__(self) -> str:
        return self.render()


def add_vals(a: Val, b: Val) -> Val:
    """Value of a direct sum entry: exact when both summands are exact,
    Nonzero when one side contributes an unknown positive dimension."""
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.exact_dim is not None and b.exact_dim is not None:
        return Val.of_dim(a.exact_dim + b.exact_dim)
    return Val.nonzero()


Table = dict[tuple[int, int], Val]
