"""Legendrian unknot bookkeeping: tb, rotation, and stabilization counts."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class UnknotDescriptor:
    """A Legendrian unknot recorded by its stabilization counts.

    The max-tb unknot has tb = -1 and rot = 0; each positive (negative)
    stabilization drops tb by one and raises (lowers) rot by one.
    """

    s_plus: int
    s_minus: int

    def __post_init__(self) -> None:
        if self.s_plus < 0 or self.s_minus < 0:
            raise ValueError("stabilization counts must be non-negative")

    @property
    def tb(self) -> int:
        return -1 - self.s_plus - self.s_minus

    @property
    def rot(self) -> int:
        return self.s_plus - self.s_minus

    @classmethod
    def from_tb_rot(cls, tb: int, rot: int) -> "UnknotDescriptor":
        total = -1 - tb
        if total < 0 or (total + rot) % 2 != 0 or abs(rot) > total:
            raise ValueError(f"no Legendrian unknot with tb={tb}, rot={rot}")
        return cls((total + rot) // 2, (total - rot) // 2)

    def stabilization_signs(self) -> set[int]:
        """Signs of stabilization actually present on this unknot."""
        signs = set()
        if self.s_plus:
            signs.add(+1)
        if self.s_minus:
            signs.add(-1)
        return signs

    def split(self) -> tuple["UnknotDescriptor", "UnknotDescriptor"]:
        """Split into a pinched pair: the positive part takes every positive
        stabilization, the negative part every negative one.

        Satisfies tb(plus) + tb(minus) + 1 == tb and rot(plus) + rot(minus) == rot.
        """
        return UnknotDescriptor(self.s_plus, 0), UnknotDescriptor(0, self.s_minus)

    def __str__(self) -> str:
        return f"(tb={self.tb},rot={self.rot})"


MAX_TB_UNKNOT = UnknotDescriptor(0, 0)
