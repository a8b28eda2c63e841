"""Closed-form exclusion families for a pair class.

For a pair member 6x + c (c coprime to 6) and a modulus d(m) = 6m -/+ 1, the
indices x at which d(m) divides the member form the progression

    x(m, n) = d(m) * n + eps * m - a,    m, n >= 1,

and there the member equals d(m) * (6n +/- 1), a product of two factors >= 5.
Every odd composite coprime to 6 factors that way through its smallest prime
factor, so the union of the four families {MINUS, PLUS} x {c1, c2} marks
exactly the indices where some member is composite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Optional

from pairsieve.core import Branch, PairClass


class Progression(NamedTuple):
    """The set {coefficient * n + intercept : n >= 1}."""

    coefficient: int
    intercept: int

    def first(self) -> int:
        return self.coefficient + self.intercept

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        return x >= self.first() and (x - self.intercept) % self.coefficient == 0

    def members(self, upto: int) -> range:
        return range(self.first(), upto + 1, self.coefficient)

    def __str__(self) -> str:
        if self.intercept == 0:
            return f"{self.coefficient}n"
        return f"{self.coefficient}n{self.intercept:+d}"


@dataclass(frozen=True)
class FamilySpec:
    branch: Branch
    epsilon: int
    a: int
    offset_target: int

    def modulus(self, m: int) -> int:
        return self.branch.modulus(m)

    def offset(self, m: int) -> int:
        return self.epsilon * m - self.a

    def value(self, m: int, n: int) -> int:
        return self.modulus(m) * n + self.offset(m)

    def progression(self, m: int) -> Progression:
        return Progression(self.modulus(m), self.offset(m))

    def cofactor_shift(self) -> int:
        """t such that member = d(m) * (6n + t) at x(m, n)."""
        # 6 * offset(m) + c is +/- d(m) for every m
        return (6 * self.offset(1) + self.offset_target) // self.modulus(1)

    def formula(self) -> str:
        d = "(6m-1)" if self.branch is Branch.MINUS else "(6m+1)"
        sign = "+" if self.epsilon > 0 else "-"
        return f"{d}n {sign} m - {self.a}"

    def to_record(self) -> dict:
        return {
            "branch": self.branch.name,
            "epsilon": self.epsilon,
            "a": self.a,
            "offset_target": self.offset_target,
        }


def derive_offset(branch: Branch, c: int) -> tuple[int, int]:
    """Return (epsilon, a) such that d(m) | 6 * (d(m) n + epsilon m - a) + c.

    Writes c = 6a - 1 or c = 6a + 1; epsilon is +1 when the branch sign and
    the residue of c agree and -1 otherwise.
    """
    if c < 5 or c % 2 == 0 or c % 3 == 0:
        raise ValueError(f"offset must be >= 5 and coprime to 6, got {c}")
    if c % 6 == 5:
        a, residue_sign = (c + 1) // 6, -1
    else:
        a, residue_sign = (c - 1) // 6, 1
    eps = 1 if residue_sign == branch.value else -1
    return eps, a


def derive_families(pc: PairClass) -> list[FamilySpec]:
    """The four exclusion families of ``pc``, MINUS before PLUS, c1 before c2."""
    out = []
    for branch in (Branch.MINUS, Branch.PLUS):
        for c in (pc.c1, pc.c2):
            eps, a = derive_offset(branch, c)
            out.append(FamilySpec(branch, eps, a, c))
    return out


Member = Literal["first", "second"]


def fixed_cofactor_probe(x2: int, pc: PairClass, member: Member) -> Optional[Progression]:
    """Indices x whose chosen member equals (2*x2 + 1) * (2n + 1), n >= 1.

    Returns None when no integer x exists for any n ("no general solution"),
    which happens exactly when 3 divides 2*x2 + 1.
    """
    if x2 < 1:
        raise ValueError(f"x2 must be >= 1, got {x2}")
    if member not in ("first", "second"):
        raise ValueError(f"member must be 'first' or 'second', got {member!r}")
    c = pc.c1 if member == "first" else pc.c2
    f = 2 * x2 + 1
    if f % 3 == 0:
        return None
    # units mod 6 are self-inverse, so the cofactor g satisfies g = c*f (mod 6)
    r = (c * f) % 6
    g = 5 if r == 5 else 7
    while f * g < c:
        g += 6
    first = (f * g - c) // 6
    return Progression(f, first - f)
