"""Domain types and the index <-> odd-number arithmetic.

A candidate index x stands for the odd pair (6x + c1, 6x + c2).  The same x
is the variable of the sequence 3x + 1, whose value s maps to the odd number
2s + 1; the pair for x = 1, k = 1 is therefore the two odd numbers after
2(3x + 1) + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

U64_MAX = (1 << 64) - 1
# keeps 6x + c inside signed 64-bit range for any practical offset
MAX_INDEX = ((1 << 63) - 16) // 6


class InvalidPairClass(ValueError):
    """A (k, case) combination with a member divisible by 3."""


class Branch(enum.Enum):
    MINUS = -1  # d(m) = 6m - 1
    PLUS = 1  # d(m) = 6m + 1

    def modulus(self, m: int) -> int:
        return 6 * m + self.value


class Case(enum.Enum):
    A = "A"  # first member 6x + 5
    B = "B"  # first member 6x + 7

    @property
    def c1(self) -> int:
        return 5 if self is Case.A else 7

    @classmethod
    def parse(cls, text: str) -> "Case":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown case {text!r}; expected 'a' or 'b'") from None


@dataclass(frozen=True, order=True)
class PairClass:
    """Gap class 2k in one residue case.

    Case A is valid iff k % 3 != 2 and case B iff k % 3 != 1; otherwise the
    second member 6x + c1 + 2k is a multiple of 3.
    """

    k: int
    case: Case

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidPairClass(f"k must be a positive integer, got {self.k!r}")
        bad = 2 if self.case is Case.A else 1
        if self.k % 3 == bad:
            raise InvalidPairClass(
                f"case {self.case.value} requires k mod 3 != {bad} "
                f"(k={self.k}: 6x+{self.c1 + 2 * self.k} is divisible by 3)"
            )

    @property
    def c1(self) -> int:
        return self.case.c1

    @property
    def c2(self) -> int:
        return self.case.c1 + 2 * self.k

    @property
    def gap(self) -> int:
        return 2 * self.k

    @staticmethod
    def valid_cases(k: int) -> list["PairClass"]:
        """All residue cases that exist for half-gap ``k`` (one or two)."""
        out = []
        for case in Case:
            try:
                out.append(PairClass(k, case))
            except InvalidPairClass:
                pass
        if not out:
            raise InvalidPairClass(f"k must be a positive integer, got {k!r}")
        return out

    def __str__(self) -> str:
        return f"k={self.k} case {self.case.value} (6x+{self.c1}, 6x+{self.c2})"


class PairRecord(NamedTuple):
    p: int
    q: int


def check_index(x: int) -> int:
    if x < 0:
        raise ValueError(f"candidate index must be >= 0, got {x}")
    if x > MAX_INDEX:
        raise OverflowError(f"candidate index {x} exceeds 64-bit limit {MAX_INDEX}")
    return x


def check_u64(v: int) -> int:
    if v > U64_MAX:
        raise OverflowError(f"{v} does not fit in 64 bits")
    return v


def index_to_sequence(x: int) -> int:
    """Value of the 3x + 1 sequence at index ``x``."""
    check_index(x)
    return 3 * x + 1


def sequence_to_odd(s: int) -> int:
    """Odd number 2s + 1 represented by sequence value ``s``."""
    if s < 1:
        raise ValueError(f"sequence value must be >= 1, got {s}")
    return check_u64(2 * s + 1)


def index_to_pair(x: int, pc: PairClass) -> tuple[int, int]:
    """Candidate pair (6x + c1, 6x + c2); primality is not implied."""
    check_index(x)
    return 6 * x + pc.c1, check_u64(6 * x + pc.c2)
